//! Fourier series of `A_n^aff`-symmetric functions in the basis `E_m`,
//! `m` integer and semidominant.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use super::function::SymmetricFunction;
use super::quadrature::{QuadratureDomain, QuadratureSpec, TensorRule};
use crate::altgroup::{group_order, is_canonical, is_semidominant, stabilizer_order, IntegerWeight};
use crate::error::{Error, Result};
use crate::expcore::eval_e;

/// Truncated expansion `Σ c_m E_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    n: usize,
    entries: BTreeMap<Vec<i64>, Complex64>,
}

impl SeriesCoefficients {
    pub fn new(n: usize) -> Self {
        SeriesCoefficients {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Vec<i64>, Complex64)>) -> Self {
        SeriesCoefficients {
            n,
            entries: entries.into_iter().collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, m: &[i64]) -> Option<Complex64> {
        self.entries.get(m).copied()
    }

    pub fn insert(&mut self, m: Vec<i64>, c: Complex64) -> Option<Complex64> {
        self.entries.insert(m, c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Complex64)> {
        self.entries.iter()
    }

    /// `Σ_m |G_m| |c_m|²`.
    pub fn weighted_energy(&self) -> f64 {
        self.entries
            .iter()
            .map(|(m, c)| stabilizer_order(m) as f64 * c.norm_sqr())
            .sum()
    }
}

/// Canonical orbit representatives `m` with `max |m_i| ≤ cutoff`.
pub fn series_index_set(n: usize, cutoff: i64) -> Vec<Vec<i64>> {
    let side = (2 * cutoff + 1) as usize;
    let total = side.pow(n as u32);
    (0..total)
        .map(|mut flat| {
            let mut m = vec![0i64; n];
            for slot in m.iter_mut().rev() {
                *slot = (flat % side) as i64 - cutoff;
                flat /= side;
            }
            m
        })
        .filter(|m| is_canonical(m))
        .collect()
}

/// Integral over the fundamental domain implied by a torus-type rule.
fn domain_scale(q: &QuadratureSpec, n: usize) -> Result<f64> {
    match q.domain {
        QuadratureDomain::Torus => Ok(1.0 / group_order(n) as f64),
        QuadratureDomain::FundamentalAffine => Ok(1.0),
        QuadratureDomain::Box { .. } => Err(Error::Precondition(
            "series coefficients need a torus or fundamental-domain rule".into(),
        )),
    }
}

/// Function values at the nodes of a torus rule, reused across coefficients.
struct TorusSamples {
    rule: TensorRule,
    points: Vec<Vec<f64>>,
    weighted: Vec<Complex64>,
    scale: f64,
}

impl TorusSamples {
    fn new(f: &SymmetricFunction, q: &QuadratureSpec) -> Result<Self> {
        let n = f.dimension();
        let scale = domain_scale(q, n)?;
        let rule = q.tensor(n);
        let points: Vec<Vec<f64>> = (0..rule.len()).map(|i| rule.point(i)).collect();
        let weighted = points
            .par_iter()
            .enumerate()
            .map(|(i, x)| f.eval(x) * rule.weight(i))
            .collect();
        Ok(TorusSamples {
            rule,
            points,
            weighted,
            scale,
        })
    }

    /// `∫_F̄ f conj(E_m)`.
    fn project(&self, m: &[f64]) -> Result<Complex64> {
        let sum = self
            .points
            .par_iter()
            .zip(&self.weighted)
            .map(|(x, fw)| eval_e(m, x).map(|e| fw * e.conj()))
            .try_reduce(|| Complex64::new(0.0, 0.0), |a, b| Ok(a + b))?;
        Ok(sum * self.scale)
    }

    fn norm_sqr(&self, f: &SymmetricFunction) -> f64 {
        let sum: f64 = self
            .points
            .par_iter()
            .enumerate()
            .map(|(i, x)| f.eval(x).norm_sqr() * self.rule.weight(i))
            .sum();
        sum * self.scale
    }
}

fn check_index(f: &SymmetricFunction, m: &[i64]) -> Result<()> {
    if m.len() != f.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: m.len(),
        });
    }
    if !is_semidominant(m) {
        return Err(Error::Precondition(format!("index {m:?} is not semidominant")));
    }
    Ok(())
}

/// `c_m = |G_m|^{-1} ∫_F̄ f conj(E_m)`, with the fundamental-domain integral
/// taken as `|A_n|^{-1}` times the torus integral.
pub fn series_coefficient(f: &SymmetricFunction, m: &IntegerWeight, q: &QuadratureSpec) -> Result<Complex64> {
    check_index(f, m)?;
    let samples = TorusSamples::new(f, q)?;
    coefficient_from(&samples, m)
}

fn coefficient_from(samples: &TorusSamples, m: &[i64]) -> Result<Complex64> {
    let mf: Vec<f64> = m.iter().map(|&k| k as f64).collect();
    Ok(samples.project(&mf)? / stabilizer_order(m) as f64)
}

/// All coefficients over [`series_index_set`]`(n, cutoff)`.
pub fn series_coefficients(f: &SymmetricFunction, cutoff: i64, q: &QuadratureSpec) -> Result<SeriesCoefficients> {
    let samples = TorusSamples::new(f, q)?;
    let entries = series_index_set(f.dimension(), cutoff)
        .into_iter()
        .map(|m| coefficient_from(&samples, &m).map(|c| (m, c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesCoefficients::from_entries(f.dimension(), entries))
}

/// `Σ_m c_m E_m(x)` over the stored coefficients.
pub fn series_partial_sum(coeffs: &SeriesCoefficients, x: &[f64]) -> Result<Complex64> {
    coeffs.iter().try_fold(Complex64::new(0.0, 0.0), |acc, (m, c)| {
        let mf: Vec<f64> = m.iter().map(|&k| k as f64).collect();
        Ok(acc + c * eval_e(&mf, x)?)
    })
}

/// Both sides of `Σ_m |G_m| |c_m|² = ∫_F̄ |f|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlancherelReport {
    pub coefficient_side: f64,
    pub integral_side: f64,
}

impl PlancherelReport {
    pub fn residual(&self) -> f64 {
        (self.coefficient_side - self.integral_side).abs()
    }
}

pub fn plancherel_residual(f: &SymmetricFunction, cutoff: i64, q: &QuadratureSpec) -> Result<PlancherelReport> {
    let samples = TorusSamples::new(f, q)?;
    let mut coefficient_side = 0.0;
    for m in series_index_set(f.dimension(), cutoff) {
        let c = coefficient_from(&samples, &m)?;
        coefficient_side += stabilizer_order(&m) as f64 * c.norm_sqr();
    }
    Ok(PlancherelReport {
        coefficient_side,
        integral_side: samples.norm_sqr(f),
    })
}
