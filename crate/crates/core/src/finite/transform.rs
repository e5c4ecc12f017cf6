//! The finite alternating Fourier transform on `\breve F_N^n`.
//!
//! With `Ẽ_m(s) = |A_n|^{-1/2} sdet(e_{m_i}(s_j))`, `e_m(s) = N^{-1/2} e^{2πims}`,
//! the weighted product `|A_n| Σ_s |G_s|^{-1} Ẽ_m(s) conj(Ẽ_{m'}(s))` equals
//! `|G_m| δ_{mm'}` over canonical representatives, which gives
//!
//! ```text
//! a_m  = |A_n| |G_m|^{-1} Σ_s |G_s|^{-1} f(s) conj(Ẽ_m(s))
//! f(s) = Σ_m a_m Ẽ_m(s)
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::field::{CoefficientMap, SampleField};
use super::grid::{snap_to_grid, GridSpec};
use crate::altgroup::{affine_reduce, group_order, in_closed_affine_fundamental_domain, Point};
use crate::error::{Error, Result};
use crate::expcore::{eval_e, sdet, ComplexMatrix};

/// `N^{-1/2} exp(2πi m s)` for `1 ≤ m ≤ N` and `s ∈ F_N`.
pub fn discrete_exponential(m: i64, s: f64, density: usize) -> Result<Complex64> {
    if m < 1 || m > density as i64 {
        return Err(Error::IndexOutOfRange(vec![m]));
    }
    let k = snap_to_grid(s, density)?;
    Ok(unit_root(m * k, density) / (density as f64).sqrt())
}

/// `exp(2πi j / N)` with the exponent reduced mod `N` before scaling.
fn unit_root(j: i64, density: usize) -> Complex64 {
    let r = j.rem_euclid(density as i64) as f64 / density as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r)
}

/// `Ẽ_m(s)` at a grid point given by numerators, evaluated as the
/// semideterminant of the matrix of discrete exponentials.
pub fn eval_discrete_e(m: &[i64], numerators: &[i64], grid: &GridSpec) -> Result<Complex64> {
    let n = grid.dimension();
    if m.len() != n || numerators.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if m.len() != n { m.len() } else { numerators.len() },
        });
    }
    let density = grid.density();
    if !grid.index_set().contains(m) {
        return Err(Error::IndexOutOfRange(m.to_vec()));
    }
    if numerators.iter().any(|&k| k < 1 || k > density as i64) {
        return Err(Error::IndexOutOfRange(numerators.to_vec()));
    }
    let scale = (density as f64).sqrt().recip();
    let matrix = ComplexMatrix::from_fn(n, |i, j| unit_root(m[i] * numerators[j], density) * scale);
    Ok(sdet(&matrix)?.value / (group_order(n) as f64).sqrt())
}

/// `Ẽ_m` at an arbitrary real point, `|A_n|^{-1/2} N^{-n/2} E_m(x)`.
pub fn eval_discrete_e_at(m: &[i64], x: &[f64], density: usize) -> Result<Complex64> {
    let n = m.len();
    let weight: Vec<f64> = m.iter().map(|&v| v as f64).collect();
    let norm = (group_order(n) as f64).sqrt() * (density as f64).powf(n as f64 / 2.0);
    Ok(eval_e(&weight, x)? / norm)
}

/// `|A_n| Σ_{s} |G_s|^{-1} f(s) conj(g(s))` over the canonical grid points.
pub fn weighted_inner_product(f: &SampleField, g: &SampleField, grid: &GridSpec) -> Result<Complex64> {
    let fv = f.aligned_values(grid)?;
    let gv = g.aligned_values(grid)?;
    Ok(weighted_sum(grid, fv.iter().zip(&gv).map(|(a, b)| a * b.conj())))
}

fn weighted_sum(grid: &GridSpec, terms: impl Iterator<Item = Complex64>) -> Complex64 {
    let order = grid.group_order() as f64;
    terms
        .enumerate()
        .map(|(i, t)| t * (order / grid.stabilizer(i) as f64))
        .sum()
}

/// `Σ_m |G_m| |a_m|²`, the coefficient side of the grid Parseval identity.
pub fn coefficient_energy(a: &CoefficientMap, grid: &GridSpec) -> Result<f64> {
    let values = a.aligned_values(grid)?;
    Ok(values
        .iter()
        .enumerate()
        .map(|(i, v)| grid.index_set().stabilizer(i) as f64 * v.norm_sqr())
        .sum())
}

/// `|A_n| Σ_s |G_s|^{-1} |f(s)|²`, the sample side of the grid Parseval identity.
pub fn sample_energy(f: &SampleField, grid: &GridSpec) -> Result<f64> {
    Ok(weighted_inner_product(f, f, grid)?.re)
}

/// Precomputed basis values `Ẽ_m(s)` for every canonical pair.
#[derive(Debug, Clone)]
pub struct FiniteTransform {
    grid: GridSpec,
    /// Row `m`, column `s`.
    basis: Vec<Complex64>,
}

impl FiniteTransform {
    pub fn new(grid: &GridSpec) -> Result<Self> {
        let len = grid.len();
        let indices = grid.index_set().elements();
        let points = grid.semidominant_points();
        let basis = indices
            .par_iter()
            .map(|m| {
                points
                    .iter()
                    .map(|s| eval_discrete_e(m, s, grid))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect::<Vec<_>>();
        debug_assert_eq!(basis.len(), len * len);
        Ok(FiniteTransform {
            grid: grid.clone(),
            basis,
        })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// `Ẽ_m(s)` by positions in the canonical orders.
    pub fn basis_value(&self, m_index: usize, s_index: usize) -> Complex64 {
        self.basis[m_index * self.grid.len() + s_index]
    }

    pub fn forward(&self, f: &SampleField) -> Result<CoefficientMap> {
        let values = f.aligned_values(&self.grid)?;
        let len = self.grid.len();
        let coefficients: Vec<Complex64> = (0..len)
            .into_par_iter()
            .map(|mi| {
                let row = &self.basis[mi * len..(mi + 1) * len];
                let sum = weighted_sum(&self.grid, values.iter().zip(row).map(|(f, e)| f * e.conj()));
                sum / self.grid.index_set().stabilizer(mi) as f64
            })
            .collect();
        Ok(CoefficientMap::from_entries(
            self.grid.dimension(),
            self.grid.density(),
            self.grid.index_set().elements().iter().cloned().zip(coefficients),
        ))
    }

    pub fn inverse(&self, a: &CoefficientMap) -> Result<SampleField> {
        let coefficients = a.aligned_values(&self.grid)?;
        let len = self.grid.len();
        let samples: Vec<Complex64> = (0..len)
            .into_par_iter()
            .map(|si| {
                coefficients
                    .iter()
                    .enumerate()
                    .map(|(mi, c)| c * self.basis[mi * len + si])
                    .sum()
            })
            .collect();
        Ok(SampleField::from_entries(
            self.grid.dimension(),
            self.grid.density(),
            self.grid.semidominant_points().iter().cloned().zip(samples),
        ))
    }
}

pub fn forward(f: &SampleField, grid: &GridSpec) -> Result<CoefficientMap> {
    FiniteTransform::new(grid)?.forward(f)
}

pub fn inverse(a: &CoefficientMap, grid: &GridSpec) -> Result<SampleField> {
    FiniteTransform::new(grid)?.inverse(a)
}

/// `Σ_m a_m Ẽ_m(x)` at an arbitrary point; points outside the closed affine
/// fundamental domain are reduced into it first.
pub fn interpolate(a: &CoefficientMap, x: &[f64]) -> Result<Complex64> {
    let n = a.dimension();
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    let reduced;
    let point = if in_closed_affine_fundamental_domain(x) {
        x
    } else {
        reduced = affine_reduce(&Point(x.to_vec())).0;
        reduced.as_slice()
    };
    a.iter()
        .map(|(m, c)| Ok(c * eval_discrete_e_at(m, point, a.density())?))
        .sum()
}
