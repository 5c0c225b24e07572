//! Exact computer algebra for Rees algebras of almost complete intersections.
//!
//! ```
//! use rees_core::rees::{analyze, AnalyzeOptions};
//! use rees_core::{PrimeField, Ring, RingExt};
//!
//! let r = Ring::new(PrimeField::default(), &["x", "y", "z"]).unwrap();
//! let i = r.parse_list("x^3, y^3, z^3, x*y*z").unwrap();
//! let j = r.parse_list("x^3 - z^3, y^3 - z^3, x*y*z").unwrap();
//! let rep = analyze(&r, &i, &j, &AnalyzeOptions::default());
//! assert_eq!(rep.e1, Some(12));
//! assert_eq!(rep.f_sequence, Some(vec![8, 4]));
//! ```

pub mod arith;
pub mod error;
pub mod families;
pub mod groebner;
pub mod hilbert;
pub mod rees;

pub use arith::*;
pub use error::{AlgebraError, Result};
pub use groebner::{GroebnerBasis, Ideal, SyzygyMatrix};
