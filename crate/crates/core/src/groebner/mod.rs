//! Gröbner bases and the ideal toolbox built on them.

mod basis;
mod bucket;
mod engine;
mod ideal;
pub(crate) mod linalg;
mod syzygy;

pub use basis::{minimal_generator_indices, GroebnerBasis};
pub use engine::GbStats;
pub use ideal::Ideal;
pub use syzygy::{i1, syzygies, SyzygyMatrix};

#[cfg(test)]
mod tests;
