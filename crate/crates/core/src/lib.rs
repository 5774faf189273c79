//! Exact conversion of regular n-sided S-patches into trimmed rational
//! tensor-product Bézier patches by Bézier-simplex composition.
//!
//! ```
//! use spatch::{convert, sampling::random_spatch};
//!
//! let s = random_spatch(5, 2, 0).unwrap();
//! let t = convert(&s).unwrap();
//! assert_eq!(t.patch.degree(), (6, 6));
//!
//! let p = [0.5, 0.45];
//! let a = s.eval_uv(p).unwrap();
//! let b = t.eval(p[0], p[1]).unwrap();
//! assert!(spatch::spatch::distance(a, b) < 1e-9);
//! ```

pub mod convert;
pub mod error;
pub mod io;
pub mod multiindex;
pub mod sampling;
pub mod simplex;
pub mod spatch;
pub mod wachspress;

pub use convert::{convert, RationalTensorPatch, TrimmedPatch};
pub use error::{Error, Result};
pub use multiindex::MultiIndex;
pub use simplex::{compose, compose_naive, BezierSimplex};
pub use spatch::SPatch;
pub use wachspress::DomainPolygon;
