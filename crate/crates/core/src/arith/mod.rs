//! Exact multivariate polynomial arithmetic.

mod field;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use field::{is_prime, Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use poly::{Polynomial, Term};
pub use ring::{GbLimits, Ring, RingExt, RingRef};
