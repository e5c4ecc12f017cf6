//! Continuous transforms: Fourier series on the affine fundamental domain,
//! the integral alternating Fourier transform and its Hermite eigenfunctions.

mod function;
mod hermite;
mod integral;
mod measure;
mod quadrature;
mod series;

pub use function::{HermiteIndex, SymmetricFunction, SYMMETRY_TOLERANCE};
pub use hermite::{
    hermite_1d_transform, hermite_eigenfunction, hermite_eigenfunction_residual, hermite_eigenvalue,
    hermite_polynomial, hermite_transform, recover_eigenvalue, symmetrized_hermite, HermiteFunction,
    MAX_HERMITE_DEGREE, MAX_HERMITE_TRANSFORM_DIMENSION,
};
pub use integral::{alt_fourier_forward, alt_fourier_inverse, AltFourierTransform};
pub use measure::fundamental_domain_volume;
pub use quadrature::{gauss_legendre, QuadratureDomain, QuadratureScheme, QuadratureSpec, TensorRule};
pub use series::{
    plancherel_residual, series_coefficient, series_coefficients, series_index_set, series_partial_sum,
    PlancherelReport, SeriesCoefficients,
};
