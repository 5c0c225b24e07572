//! Rees algebras of m-primary ideals: equations, reduction numbers,
//! f-sequences and the invariants built from them.

mod invariants;
mod presentation;
mod report;

pub use invariants::*;
pub use presentation::*;
pub use report::*;
