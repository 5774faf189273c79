//! Multi-index labels and the combinatorics of the label sets `L(n, d)`.
//!
//! A label is an `n`-tuple of non-negative integers. The set `L(n, d)` holds
//! every label of length `n` whose entries sum to `d`. Labels are ordered
//! lexicographically with the leftmost entry most significant, so for
//! `L(4, 3)` the sequence runs `0003, 0012, 0021, 0030, 0102, ..., 3000`.

use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A control-point label: one non-negative count per simplex vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    /// The all-zero label of length `n`.
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `k * e_i` in a label of length `n`.
    pub fn unit(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// `self + e_i`.
    pub fn plus_unit(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] += 1;
        MultiIndex(e)
    }

    /// The lexicographic successor within the same `L(n, d)`, or `None`
    /// after the last label.
    pub fn next_label(&self) -> Option<MultiIndex> {
        let mut next = self.clone();
        if next.advance() {
            Some(next)
        } else {
            None
        }
    }

    /// In-place version of [`next_label`](Self::next_label). Returns `false`
    /// (leaving `self` untouched) when `self` is already the maximum.
    pub fn advance(&mut self) -> bool {
        let n = self.0.len();
        if n < 2 {
            return false;
        }
        // Rightmost position (excluding the last) with mass somewhere to its right.
        let mut tail = self.0[n - 1];
        for i in (0..n - 1).rev() {
            if tail > 0 {
                self.0[i] += 1;
                for x in &mut self.0[i + 1..] {
                    *x = 0;
                }
                self.0[n - 1] = tail - 1;
                return true;
            }
            tail += self.0[i];
        }
        false
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Index<usize> for MultiIndex {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;

    fn add(self, rhs: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), rhs.len());
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}

/// Binomial coefficient `C(n, k)`, exact.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        // r * (n - i) is divisible by (i + 1) at every step.
        r = r
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow)?
            / u128::from(i + 1);
    }
    Ok(r)
}

pub fn factorial(n: u64) -> Result<u128> {
    (1..=u128::from(n)).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow))
}

/// Multinomial coefficient `d! / prod(s_i!)`, exact.
pub fn multinomial(d: u64, s: &MultiIndex) -> Result<u128> {
    let norm = s.norm();
    if norm != d {
        return Err(Error::NormMismatch {
            label: s.clone(),
            norm,
            expected: d,
        });
    }
    // prod_k C(s_1 + ... + s_k, s_k)
    let mut partial = 0u64;
    let mut r: u128 = 1;
    for &x in s.entries() {
        partial += u64::from(x);
        r = r
            .checked_mul(binomial(partial, u64::from(x))?)
            .ok_or(Error::Overflow)?;
    }
    Ok(r)
}

/// `|L(n, d)| = C(n + d - 1, d)`, or `None` if it does not fit.
pub fn label_count(n: usize, d: u32) -> Option<u128> {
    if n == 0 {
        return Some(u128::from(d == 0));
    }
    binomial(n as u64 + u64::from(d) - 1, u64::from(d)).ok()
}

/// The lexicographically smallest label of `L(n, d)`: all mass in the last slot.
pub fn first_label(n: usize, d: u32) -> MultiIndex {
    assert!(n >= 1, "labels need at least one slot");
    MultiIndex::unit(n, n - 1, d)
}

/// Lazy ascending iterator over `L(n, d)`.
#[derive(Debug, Clone)]
pub struct Labels {
    next: Option<MultiIndex>,
}

impl Iterator for Labels {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.next.take()?;
        self.next = cur.next_label();
        Some(cur)
    }
}

pub fn labels(n: usize, d: u32) -> Labels {
    Labels {
        next: (n >= 1).then(|| first_label(n, d)),
    }
}

/// All labels of `L(n, d)` in ascending lexicographic order.
pub fn enumerate_labels(n: usize, d: u32) -> Vec<MultiIndex> {
    labels(n, d).collect()
}
