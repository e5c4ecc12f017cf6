//! Alternating exponential functions `E_λ(x) = sdet(exp(2πi λ_i x_j))` and
//! their symmetric/antisymmetric companions `E⁺ = det⁺`, `E⁻ = det`.

mod matrix;

pub use matrix::{
    antidet, det, sdet, sdet_naive, sdet_with, ComplexMatrix, EvalResult, SdetStrategy,
    MAX_PERMANENT_DIMENSION, NAIVE_SDET_MAX_DIMENSION,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::altgroup::{has_repeated_entry, EvenPermutationTable, Point, Weight};
use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

fn check_dims(lambda: &[f64], x: &[f64]) -> Result<()> {
    if lambda.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: lambda.len(),
            got: x.len(),
        });
    }
    if lambda.is_empty() {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    Ok(())
}

/// The matrix `(exp(2πi λ_i x_j))_{i,j}`.
pub fn exponential_matrix(lambda: &[f64], x: &[f64]) -> Result<ComplexMatrix> {
    check_dims(lambda, x)?;
    Ok(ComplexMatrix::from_fn(lambda.len(), |i, j| {
        Complex64::from_polar(1.0, TWO_PI * lambda[i] * x[j])
    }))
}

/// `E_λ(x)` with an explicit strategy.
///
/// The naive path sums `exp(2πi⟨λ, w x⟩)` over the `A_n` table; each term is
/// the diagonal product of the exponential matrix collapsed into a single
/// exponential.
pub fn eval_e_with(lambda: &[f64], x: &[f64], strategy: SdetStrategy) -> Result<EvalResult> {
    check_dims(lambda, x)?;
    match strategy {
        SdetStrategy::NaiveEnumeration => {
            let table = EvenPermutationTable::shared(lambda.len())?;
            let value = table
                .rows()
                .map(|row| {
                    let phase: f64 = lambda
                        .iter()
                        .zip(row)
                        .map(|(l, &w)| l * x[w as usize])
                        .sum();
                    Complex64::from_polar(1.0, TWO_PI * phase)
                })
                .sum();
            Ok(EvalResult { value, strategy })
        }
        SdetStrategy::DetPlusPermanent => sdet_with(&exponential_matrix(lambda, x)?, strategy),
    }
}

/// `E_λ(x)`.
pub fn eval_e(lambda: &[f64], x: &[f64]) -> Result<Complex64> {
    eval_e_with(lambda, x, SdetStrategy::default_for(lambda.len())).map(|r| r.value)
}

/// `E⁺_λ(x)`, the permanent of the exponential matrix.
pub fn eval_e_plus(lambda: &[f64], x: &[f64]) -> Result<Complex64> {
    antidet(&exponential_matrix(lambda, x)?)
}

/// `E⁻_λ(x)`, the determinant of the exponential matrix.
pub fn eval_e_minus(lambda: &[f64], x: &[f64]) -> Result<Complex64> {
    Ok(det(&exponential_matrix(lambda, x)?))
}

/// `r₁₂ λ`: the first two entries exchanged.
pub fn swap_first_two(lambda: &[f64]) -> Vec<f64> {
    let mut v = lambda.to_vec();
    if v.len() >= 2 {
        v.swap(0, 1);
    }
    v
}

/// Residual magnitudes of the four `E, E⁺, E⁻` relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationResiduals {
    /// `E⁻_λ − (E_λ − E_{r₁₂λ})`
    pub minus: f64,
    /// `E⁺_λ − (E_λ + E_{r₁₂λ})`
    pub plus: f64,
    /// `(E⁺)² − (E⁻)² − 4 E_λ E_{r₁₂λ}`
    pub difference_of_squares: f64,
    /// `(E⁺)² + (E⁻)² − 2E_λ² − 2E_{r₁₂λ}²`
    pub sum_of_squares: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        self.minus
            .max(self.plus)
            .max(self.difference_of_squares)
            .max(self.sum_of_squares)
    }
}

/// Evaluates both sides of the `E`/`E⁺`/`E⁻` relations for `λ` with
/// pairwise distinct entries.
pub fn relation_check(lambda: &Weight, x: &Point) -> Result<RelationResiduals> {
    check_dims(lambda, x)?;
    if has_repeated_entry(lambda.as_slice()) {
        return Err(Error::Precondition(format!(
            "relation check needs pairwise distinct entries, got {:?}",
            lambda.as_slice()
        )));
    }
    let e = eval_e(lambda, x)?;
    let e_swapped = eval_e(&swap_first_two(lambda), x)?;
    let plus = eval_e_plus(lambda, x)?;
    let minus = eval_e_minus(lambda, x)?;
    Ok(RelationResiduals {
        minus: (minus - (e - e_swapped)).norm(),
        plus: (plus - (e + e_swapped)).norm(),
        difference_of_squares: (plus * plus - minus * minus - 4.0 * e * e_swapped).norm(),
        sum_of_squares: (plus * plus + minus * minus - 2.0 * e * e - 2.0 * e_swapped * e_swapped)
            .norm(),
    })
}

/// `|E_λ(x + a·1) − exp(2πi|λ|a) E_λ(x)|`.
pub fn translate_identity(lambda: &[f64], x: &[f64], a: f64) -> Result<f64> {
    check_dims(lambda, x)?;
    let shifted: Vec<f64> = x.iter().map(|xi| xi + a).collect();
    let total: f64 = lambda.iter().sum();
    let lhs = eval_e(lambda, &shifted)?;
    let rhs = Complex64::from_polar(1.0, TWO_PI * total * a) * eval_e(lambda, x)?;
    Ok((lhs - rhs).norm())
}

/// `|E_{λ+ν·1}(x) − E_λ(x)|` for `x` on the hyperplane `Σ x_i = 0`.
pub fn hyperplane_shift_identity(lambda: &[f64], x: &[f64], nu: f64) -> Result<f64> {
    check_dims(lambda, x)?;
    let sum: f64 = x.iter().sum();
    if sum.abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "point is off the hyperplane Σx = 0 (Σx = {sum:e})"
        )));
    }
    let shifted: Vec<f64> = lambda.iter().map(|l| l + nu).collect();
    Ok((eval_e(&shifted, x)? - eval_e(lambda, x)?).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugationBranch {
    /// `μ = −(λ_n, …, λ_1)`
    Plain,
    /// `μ = −r₁₂(λ_n, …, λ_1)`
    R12Swapped,
}

/// Returns `μ` with `E_λ(x) = conj(E_μ(x))` for all real `x`.
///
/// `conj(E_μ) = E_{−μ}`, so `−μ` must lie in the `A_n`-orbit of `λ`. Reversal
/// has `n(n−1)/2` inversions: even for `n ≡ 0, 1 (mod 4)`, odd otherwise, in
/// which case `r₁₂` restores an even rearrangement. When `λ` has a repeated
/// entry the plain reversal always works.
pub fn conjugation_partner(lambda: &Weight) -> (Weight, ConjugationBranch) {
    let n = lambda.dim();
    let reversed: Vec<f64> = lambda.iter().rev().map(|l| -l).collect();
    let reversal_even = (n * n.saturating_sub(1) / 2) % 2 == 0;
    if reversal_even || has_repeated_entry(lambda.as_slice()) {
        (Weight(reversed), ConjugationBranch::Plain)
    } else {
        (Weight(swap_first_two(&reversed)), ConjugationBranch::R12Swapped)
    }
}

/// Elementary symmetric polynomials `σ_0, …, σ_n` of the given values.
pub fn elementary_symmetric<T>(values: &[T]) -> Vec<T>
where
    T: Copy + Zero + One,
{
    let mut sigma = vec![T::zero(); values.len() + 1];
    sigma[0] = T::one();
    for (i, &y) in values.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            sigma[k] = sigma[k] + y * sigma[k - 1];
        }
    }
    sigma
}

/// Eigenvalues of `σ_k(∂²_1, …, ∂²_n)`, `k = 1..n`, on `E_λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplaceSpectrum {
    /// `eigenvalues[k-1] = (−4π²)^k σ_k(λ_1², …, λ_n²)`
    pub eigenvalues: Vec<f64>,
}

impl LaplaceSpectrum {
    /// The ordinary Laplacian eigenvalue `−4π²⟨λ, λ⟩`.
    pub fn laplacian(&self) -> f64 {
        self.eigenvalues[0]
    }
}

pub fn laplace_spectrum(lambda: &[f64]) -> LaplaceSpectrum {
    let squares: Vec<f64> = lambda.iter().map(|l| l * l).collect();
    let sigma = elementary_symmetric(&squares);
    let base = -4.0 * PI * PI;
    let eigenvalues = sigma[1..]
        .iter()
        .enumerate()
        .map(|(k, s)| base.powi(k as i32 + 1) * s)
        .collect();
    LaplaceSpectrum { eigenvalues }
}
