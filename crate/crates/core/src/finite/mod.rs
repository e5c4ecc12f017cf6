//! Finite alternating Fourier transforms on uniform grids.

mod field;
mod grid;
pub mod io;
mod transform;

pub use field::{CoefficientMap, Coefficients, FieldKind, KeyedValues, SampleField, Samples};
pub use grid::{DiscreteIndexSet, GridSpec};
pub use transform::{
    coefficient_energy, discrete_exponential, eval_discrete_e, eval_discrete_e_at, forward,
    interpolate, inverse, sample_energy, weighted_inner_product, FiniteTransform,
};
