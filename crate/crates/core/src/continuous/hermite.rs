//! Gaussian-weighted symmetrized Hermite functions
//! `φ_m(x) = e^{-π|x|²} 𝐇_m(√(2π) x)`, `𝐇_m(λ) = sdet(H_{m_i}(λ_j))`.
//!
//! With kernel `e^{+2πi⟨λ,x⟩}` each one-dimensional factor
//! `e^{-πt²} H_k(√(2π) t)` transforms to `i^k` times itself, so `φ_m` has
//! eigenvalue `i^{|m|}` under the alternating Fourier transform.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::function::{HermiteIndex, SymmetricFunction};
use super::integral::AltFourierTransform;
use super::quadrature::QuadratureSpec;
use crate::altgroup::Weight;
use crate::error::{Error, Result};
use crate::expcore::{sdet, ComplexMatrix};

/// Largest degree accepted by [`hermite_polynomial`].
pub const MAX_HERMITE_DEGREE: usize = 60;

/// Largest dimension for the quadrature-based eigenfunction checks; the
/// tensor rule has `M^n` nodes.
pub const MAX_HERMITE_TRANSFORM_DIMENSION: usize = 3;

fn check_degree(m: usize) -> Result<()> {
    if m > MAX_HERMITE_DEGREE {
        return Err(Error::SizeLimit {
            what: "Hermite degree",
            got: m,
            min: 0,
            max: MAX_HERMITE_DEGREE,
        });
    }
    Ok(())
}

/// `H_0(t), …, H_max(t)` by the three-term recurrence.
fn hermite_values(max: usize, t: f64) -> Vec<f64> {
    let mut h = Vec::with_capacity(max + 1);
    h.push(1.0);
    if max >= 1 {
        h.push(2.0 * t);
    }
    for k in 1..max {
        h.push(2.0 * t * h[k] - 2.0 * k as f64 * h[k - 1]);
    }
    h
}

/// Physicists' Hermite polynomial `H_m(t)`.
pub fn hermite_polynomial(m: usize, t: f64) -> Result<f64> {
    check_degree(m)?;
    Ok(hermite_values(m, t)[m])
}

fn check_index(m: &HermiteIndex, len: usize) -> Result<()> {
    if m.dimension() != len {
        return Err(Error::DimensionMismatch {
            expected: m.dimension(),
            got: len,
        });
    }
    m.as_slice().iter().try_for_each(|&k| check_degree(k))
}

fn hermite_sdet(m: &HermiteIndex, lambda: &[f64]) -> Result<f64> {
    let max = m.as_slice().iter().copied().max().unwrap_or(0);
    let columns: Vec<Vec<f64>> = lambda.iter().map(|&l| hermite_values(max, l)).collect();
    let matrix = ComplexMatrix::from_fn(lambda.len(), |i, j| Complex64::new(columns[j][m.as_slice()[i]], 0.0));
    Ok(sdet(&matrix)?.value.re)
}

/// `𝐇_m(λ) = sdet(H_{m_i}(λ_j))`, symmetric under `A_n` acting on `λ`.
pub fn symmetrized_hermite(m: &HermiteIndex, lambda: &[f64]) -> Result<f64> {
    check_index(m, lambda.len())?;
    hermite_sdet(m, lambda)
}

/// `φ_m(x) = e^{-π|x|²} 𝐇_m(√(2π) x)`.
pub fn hermite_eigenfunction(m: &HermiteIndex, x: &[f64]) -> Result<f64> {
    check_index(m, x.len())?;
    let s = (2.0 * PI).sqrt();
    let scaled: Vec<f64> = x.iter().map(|t| s * t).collect();
    let r2: f64 = x.iter().map(|t| t * t).sum();
    Ok((-PI * r2).exp() * hermite_sdet(m, &scaled)?)
}

/// `φ_m` as a [`SymmetricFunction`].
#[derive(Debug, Clone)]
pub struct HermiteFunction {
    index: HermiteIndex,
}

impl HermiteFunction {
    pub fn new(index: HermiteIndex) -> Result<Self> {
        check_index(&index, index.dimension())?;
        Ok(HermiteFunction { index })
    }

    pub fn index(&self) -> &HermiteIndex {
        &self.index
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        hermite_eigenfunction(&self.index, x).expect("index validated at construction")
    }

    pub fn to_symmetric(&self) -> SymmetricFunction {
        let this = self.clone();
        SymmetricFunction::new_unchecked(self.index.dimension(), move |x| Complex64::new(this.eval(x), 0.0))
            .expect("Hermite index dimension is nonzero")
    }
}

/// `i^{|m|}`, the eigenvalue of `φ_m` for the kernel `E_λ(x)`.
pub fn hermite_eigenvalue(m: &HermiteIndex) -> Complex64 {
    i_pow(m.total() as i64)
}

pub(crate) fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `∫ e^{2πipx} e^{-πp²} H_m(√(2π)p) dp` with the one-dimensional rule of `q`.
pub fn hermite_1d_transform(m: usize, x: f64, q: &QuadratureSpec) -> Result<Complex64> {
    check_degree(m)?;
    let (nodes, weights) = q.rule_1d();
    let s = (2.0 * PI).sqrt();
    Ok(nodes
        .iter()
        .zip(&weights)
        .map(|(&p, &w)| {
            let h = (-PI * p * p).exp() * hermite_values(m, s * p)[m];
            Complex64::from_polar(w * h, 2.0 * PI * p * x)
        })
        .sum())
}

fn transform_for(m: &HermiteIndex, q: &QuadratureSpec) -> Result<(AltFourierTransform, Vec<Complex64>)> {
    let n = m.dimension();
    if n > MAX_HERMITE_TRANSFORM_DIMENSION {
        return Err(Error::SizeLimit {
            what: "Hermite transform dimension",
            got: n,
            min: 1,
            max: MAX_HERMITE_TRANSFORM_DIMENSION,
        });
    }
    let f = HermiteFunction::new(m.clone())?;
    let t = AltFourierTransform::new(n, q)?;
    let samples = t.sample(&f.to_symmetric())?;
    Ok((t, samples))
}

/// `ℱ(φ_m)(λ)` by box quadrature.
pub fn hermite_transform(m: &HermiteIndex, lambda: &Weight, q: &QuadratureSpec) -> Result<Complex64> {
    let (t, samples) = transform_for(m, q)?;
    t.forward_at(&samples, lambda)
}

/// `|ℱ(φ_m)(λ) − i^{|m|} φ_m(λ)|`.
pub fn hermite_eigenfunction_residual(m: &HermiteIndex, lambda: &Weight, q: &QuadratureSpec) -> Result<f64> {
    let lhs = hermite_transform(m, lambda, q)?;
    let rhs = hermite_eigenvalue(m) * hermite_eigenfunction(m, lambda)?;
    Ok((lhs - rhs).norm())
}

/// The `c ∈ {1, i, −1, −i}` minimizing `max_λ |ℱ(φ_m)(λ) − c φ_m(λ)|` over
/// the probes, with that residual.
pub fn recover_eigenvalue(m: &HermiteIndex, probes: &[Weight], q: &QuadratureSpec) -> Result<(Complex64, f64)> {
    let (t, samples) = transform_for(m, q)?;
    let pairs = probes
        .iter()
        .map(|l| Ok((t.forward_at(&samples, l)?, hermite_eigenfunction(m, l)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut best = (Complex64::new(1.0, 0.0), f64::INFINITY);
    for k in 0..4 {
        let c = i_pow(k);
        let r = pairs.iter().map(|(lhs, phi)| (lhs - c * phi).norm()).fold(0.0, f64::max);
        if r < best.1 {
            best = (c, r);
        }
    }
    Ok(best)
}
