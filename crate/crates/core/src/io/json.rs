//! JSON file formats.
//!
//! S-patch:
//! `{ "sides": n, "depth": d, "points": [ { "label": [..], "point": [x, y, z] }, .. ] }`
//!
//! Bézier simplex:
//! `{ "arity": n, "degree": d, "dim": k, "points": [ { "label": [..], "point": [..] }, .. ] }`
//!
//! Trimmed patch:
//! `{ "degree": [du, dv], "points": [[[wx, wy, wz, w], ..], ..], "trim": [[u, v], ..] }`
//! with `points` row-major, `u` as the outer index.
//!
//! Writers emit labels in ascending lexicographic order. Readers reject
//! duplicate, missing and malformed labels.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::convert::{RationalTensorPatch, TrimmedPatch};
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::simplex::BezierSimplex;
use crate::spatch::{Point3, SPatch};
use crate::wachspress::Point2;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabeledPoint<P> {
    label: MultiIndex,
    point: P,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SPatchFile {
    sides: usize,
    depth: u32,
    points: Vec<LabeledPoint<Point3>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplexFile {
    arity: usize,
    degree: u32,
    dim: usize,
    points: Vec<LabeledPoint<Vec<f64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TrimmedFile {
    degree: [u32; 2],
    points: Vec<Vec<[f64; 4]>>,
    trim: Vec<Point2>,
}

fn collect_unique<P>(points: Vec<LabeledPoint<P>>) -> Result<HashMap<MultiIndex, P>> {
    let mut control = HashMap::with_capacity(points.len());
    for LabeledPoint { label, point } in points {
        if control.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        control.insert(label, point);
    }
    Ok(control)
}

pub fn parse_spatch(text: &str) -> Result<SPatch> {
    let file: SPatchFile = serde_json::from_str(text)?;
    let control = collect_unique(file.points)?;
    SPatch::new(file.sides, file.depth, control)
}

pub fn spatch_to_json(s: &SPatch) -> String {
    let file = SPatchFile {
        sides: s.sides(),
        depth: s.depth(),
        points: s
            .sorted_points()
            .into_iter()
            .map(|(label, point)| LabeledPoint {
                label: label.clone(),
                point: *point,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn parse_simplex(text: &str) -> Result<BezierSimplex> {
    let file: SimplexFile = serde_json::from_str(text)?;
    let control = collect_unique(file.points)?;
    BezierSimplex::new(file.arity, file.degree, file.dim, control)
}

pub fn simplex_to_json(s: &BezierSimplex) -> String {
    let file = SimplexFile {
        arity: s.arity(),
        degree: s.degree(),
        dim: s.dim(),
        points: s
            .sorted_points()
            .into_iter()
            .map(|(label, point)| LabeledPoint {
                label: label.clone(),
                point: point.to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn parse_trimmed(text: &str) -> Result<TrimmedPatch> {
    let file: TrimmedFile = serde_json::from_str(text)?;
    let [du, dv] = file.degree;
    let rows = du as usize + 1;
    let cols = dv as usize + 1;
    if file.points.len() != rows {
        return Err(Error::Malformed(format!(
            "expected {rows} rows of control points, got {}",
            file.points.len()
        )));
    }
    if let Some(row) = file.points.iter().find(|r| r.len() != cols) {
        return Err(Error::Malformed(format!(
            "expected {cols} control points per row, got {}",
            row.len()
        )));
    }
    let patch = RationalTensorPatch::new(du, dv, file.points.into_iter().flatten().collect())?;
    TrimmedPatch::new(patch, file.trim)
}

pub fn trimmed_to_json(t: &TrimmedPatch) -> String {
    let (du, dv) = t.patch.degree();
    let file = TrimmedFile {
        degree: [du, dv],
        points: t.patch.rows().map(<[_]>::to_vec).collect(),
        trim: t.trim.clone(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::convert;
    use crate::sampling::random_spatch;

    #[test]
    fn depth_one_triangle() {
        let text = r#"{ "sides": 3, "depth": 1, "points": [
            { "label": [1,0,0], "point": [0,0,0] },
            { "label": [0,1,0], "point": [1,0,0] },
            { "label": [0,0,1], "point": [0,1,0] } ] }"#;
        let s = parse_spatch(text).unwrap();
        assert_eq!((s.sides(), s.depth()), (3, 1));
        assert_eq!(s.point(&MultiIndex::from([0, 1, 0])), Some(&[1.0, 0.0, 0.0]));
    }

    #[test]
    fn missing_label_is_named() {
        let full = random_spatch(5, 5, 1).unwrap();
        let mut value: serde_json::Value = serde_json::from_str(&spatch_to_json(&full)).unwrap();
        let points = value["points"].as_array_mut().unwrap();
        assert_eq!(points.len(), 126);
        let removed = points.remove(40);
        let err = parse_spatch(&value.to_string()).unwrap_err();
        let expected: MultiIndex = serde_json::from_value(removed["label"].clone()).unwrap();
        assert!(matches!(&err, Error::MissingLabel(s) if *s == expected), "{err}");
        assert!(err.to_string().contains(&expected.to_string()));
    }

    #[test]
    fn norm_mismatch() {
        let text = r#"{ "sides": 2, "depth": 3, "points": [ { "label": [1,1], "point": [0,0,0] } ] }"#;
        assert!(parse_spatch(text).is_err());
        let text = r#"{ "sides": 3, "depth": 3, "points": [ { "label": [1,1,0], "point": [0,0,0] } ] }"#;
        assert!(matches!(parse_spatch(text), Err(Error::NormMismatch { norm: 2, expected: 3, .. })));
    }

    #[test]
    fn duplicate_label() {
        let text = r#"{ "sides": 3, "depth": 1, "points": [
            { "label": [1,0,0], "point": [0,0,0] },
            { "label": [1,0,0], "point": [1,0,0] },
            { "label": [0,0,1], "point": [0,1,0] } ] }"#;
        assert!(matches!(parse_spatch(text), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(parse_spatch("{"), Err(Error::Json(_))));
        assert!(matches!(parse_spatch(r#"{"sides": -3}"#), Err(Error::Json(_))));
        assert!(matches!(parse_simplex("[]"), Err(Error::Json(_))));
        assert!(matches!(parse_trimmed("null"), Err(Error::Json(_))));
    }

    #[test]
    fn empty_point_list() {
        let text = r#"{ "sides": 4000000000, "depth": 1, "points": [] }"#;
        assert!(matches!(parse_spatch(text), Err(Error::PointCount { got: 0, .. })));
        let text = r#"{ "arity": 4000000000, "degree": 0, "dim": 1, "points": [] }"#;
        assert!(matches!(parse_simplex(text), Err(Error::PointCount { got: 0, .. })));
    }

    #[test]
    fn trimmed_shape_checks() {
        let text = r#"{ "degree": [1, 1], "points": [[[0,0,0,1],[0,0,0,1]],[[0,0,0,1]]], "trim": [[0,0],[1,0],[1,1],[0,0]] }"#;
        assert!(matches!(parse_trimmed(text), Err(Error::Malformed(_))));
        let text = r#"{ "degree": [1, 1], "points": [[[0,0,0,1],[0,0,0,1]],[[0,0,0,1],[0,0,0,1]]], "trim": [[0,0],[1,0],[1,1],[0,1]] }"#;
        assert!(matches!(parse_trimmed(text), Err(Error::Malformed(_))));
    }

    #[test]
    fn simplex_output_is_sorted() {
        let s = random_spatch(3, 2, 5).unwrap().homogenize();
        let value: serde_json::Value = serde_json::from_str(&simplex_to_json(&s)).unwrap();
        let labels: Vec<MultiIndex> = value["points"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| serde_json::from_value(p["label"].clone()).unwrap())
            .collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(labels, sorted);
        assert_eq!(parse_simplex(&simplex_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn trimmed_roundtrip() {
        let t = convert(&random_spatch(5, 2, 9).unwrap()).unwrap();
        assert_eq!(parse_trimmed(&trimmed_to_json(&t)).unwrap(), t);
    }
}
