//! The alternating Fourier transform
//! `f̃(λ) = |A_n|^{-1} ∫_{R^n} f(x) E_λ(x) dx` and its inverse with kernel
//! `conj(E_λ(x))`, truncated to a box.
//!
//! For symmetric `f` the `|A_n|^{-1}` box integral equals the integral of
//! `f E_λ` over the open chamber `D^e_+`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::function::SymmetricFunction;
use super::quadrature::{QuadratureDomain, QuadratureSpec, TensorRule};
use crate::altgroup::{group_order, is_semidominant, semidominant_normalize, EvenPermutationTable, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Inverse => -1.0,
        }
    }
}

/// A box rule with its `A_n` table, reusable across many evaluations.
#[derive(Debug, Clone)]
pub struct AltFourierTransform {
    rule: TensorRule,
    table: &'static EvenPermutationTable,
    /// `exp(2πi t_a t_b)` over pairs of one-dimensional nodes.
    node_kernel: Vec<Complex64>,
}

impl AltFourierTransform {
    pub fn new(n: usize, q: &QuadratureSpec) -> Result<Self> {
        if !matches!(q.domain, QuadratureDomain::Box { .. }) {
            return Err(Error::Precondition("the integral transform needs a box rule".into()));
        }
        let table = EvenPermutationTable::shared(n)?;
        let rule = q.tensor(n);
        let t = &rule.nodes;
        let node_kernel = t
            .iter()
            .flat_map(|a| t.iter().map(move |b| Complex64::from_polar(1.0, 2.0 * PI * a * b)))
            .collect();
        Ok(AltFourierTransform {
            rule,
            table,
            node_kernel,
        })
    }

    pub fn dimension(&self) -> usize {
        self.rule.n
    }

    pub fn rule(&self) -> &TensorRule {
        &self.rule
    }

    /// `f` at the rule's nodes.
    pub fn sample(&self, f: &SymmetricFunction) -> Result<Vec<Complex64>> {
        self.check_dim(f.dimension())?;
        Ok(self.rule.sample(|x| f.eval(x)))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got,
            });
        }
        Ok(())
    }

    fn prefactor(&self) -> f64 {
        1.0 / group_order(self.dimension()) as f64
    }

    /// `w(x) g(x) Σ_w Π_i phase(i, x_{w(i)})` at node `flat`.
    fn node_term(
        &self,
        g: Complex64,
        flat: usize,
        idx: &mut [usize],
        phase: &impl Fn(usize, usize) -> Complex64,
    ) -> Complex64 {
        if g == Complex64::new(0.0, 0.0) {
            return g;
        }
        self.rule.axis_indices(flat, idx);
        let w: f64 = idx.iter().map(|&b| self.rule.weights[b]).product();
        let kernel: Complex64 = self
            .table
            .rows()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(i, &wi)| phase(i, idx[wi as usize]))
                    .product::<Complex64>()
            })
            .sum();
        g * kernel * w
    }

    /// `|A_n|^{-1} Σ_nodes w(x) g(x) Σ_w Π_i phase(i, x_{w(i)})`, parallel over nodes.
    fn contract(&self, samples: &[Complex64], phase: impl Fn(usize, usize) -> Complex64 + Sync) -> Complex64 {
        let n = self.dimension();
        let sum: Complex64 = (0..self.rule.len())
            .into_par_iter()
            .map_init(|| vec![0usize; n], |idx, flat| self.node_term(samples[flat], flat, idx, &phase))
            .sum();
        sum * self.prefactor()
    }

    fn apply_at(&self, samples: &[Complex64], y: &[f64], dir: Direction) -> Result<Complex64> {
        self.check_dim(y.len())?;
        if samples.len() != self.rule.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rule.len(),
                got: samples.len(),
            });
        }
        let m = self.rule.per_axis();
        let s = dir.sign();
        let phase: Vec<Complex64> = y
            .iter()
            .flat_map(|yi| {
                self.rule
                    .nodes
                    .iter()
                    .map(move |t| Complex64::from_polar(1.0, s * 2.0 * PI * yi * t))
            })
            .collect();
        Ok(self.contract(samples, |i, b| phase[i * m + b]))
    }

    /// Forward transform at `λ` from node samples.
    pub fn forward_at(&self, samples: &[Complex64], lambda: &[f64]) -> Result<Complex64> {
        self.apply_at(samples, lambda, Direction::Forward)
    }

    /// Inverse transform at `x` from node samples of `f̃`.
    pub fn inverse_at(&self, samples: &[Complex64], x: &[f64]) -> Result<Complex64> {
        self.apply_at(samples, x, Direction::Inverse)
    }

    /// On the rule's own nodes the kernel factorizes: for each `w ∈ A_n`
    /// the sum is the one-dimensional node kernel applied along every axis
    /// of the weighted samples with axes permuted by `w`.
    fn apply_on_nodes(&self, samples: &[Complex64], dir: Direction) -> Result<Vec<Complex64>> {
        let len = self.rule.len();
        if samples.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                got: samples.len(),
            });
        }
        let n = self.dimension();
        let m = self.rule.per_axis();
        let kernel: Vec<Complex64> = match dir {
            Direction::Forward => self.node_kernel.clone(),
            Direction::Inverse => self.node_kernel.iter().map(|k| k.conj()).collect(),
        };
        let mut idx = vec![0usize; n];
        let weighted: Vec<Complex64> = samples
            .iter()
            .enumerate()
            .map(|(flat, g)| g * self.rule.weight(flat))
            .collect();
        let mut total = vec![Complex64::new(0.0, 0.0); len];
        let mut permuted = vec![Complex64::new(0.0, 0.0); len];
        for row in self.table.rows() {
            for (flat, &h) in weighted.iter().enumerate() {
                self.rule.axis_indices(flat, &mut idx);
                let target = row.iter().fold(0, |acc, &w| acc * m + idx[w as usize]);
                permuted[target] = h;
            }
            let mut t = permuted.clone();
            for axis in 0..n {
                t = mode_product(&t, &kernel, m, n, axis);
            }
            total.iter_mut().zip(&t).for_each(|(a, b)| *a += b);
        }
        let scale = self.prefactor();
        total.iter_mut().for_each(|v| *v *= scale);
        Ok(total)
    }

    /// The forward transform evaluated at every node, so it can be applied
    /// again on the same rule.
    pub fn forward_on_nodes(&self, samples: &[Complex64]) -> Result<Vec<Complex64>> {
        self.apply_on_nodes(samples, Direction::Forward)
    }

    pub fn inverse_on_nodes(&self, samples: &[Complex64]) -> Result<Vec<Complex64>> {
        self.apply_on_nodes(samples, Direction::Inverse)
    }
}

/// `out[.., a, ..] = Σ_b k[a][b] t[.., b, ..]` along `axis` of an `m^n` tensor.
fn mode_product(t: &[Complex64], k: &[Complex64], m: usize, n: usize, axis: usize) -> Vec<Complex64> {
    let inner = m.pow((n - 1 - axis) as u32);
    let block = inner * m;
    let mut out = vec![Complex64::new(0.0, 0.0); t.len()];
    out.par_chunks_mut(block).zip(t.par_chunks(block)).for_each(|(o, src)| {
        for a in 0..m {
            let krow = &k[a * m..(a + 1) * m];
            let dst = &mut o[a * inner..(a + 1) * inner];
            for (b, kab) in krow.iter().enumerate() {
                let col = &src[b * inner..(b + 1) * inner];
                dst.iter_mut().zip(col).for_each(|(d, s)| *d += kab * s);
            }
        }
    });
    out
}

fn chamber_weight(lambda: &Weight) -> Weight {
    if is_semidominant(lambda.as_slice()) {
        lambda.clone()
    } else {
        let (normalized, _) = semidominant_normalize(lambda);
        log::warn!("weight {:?} lies outside the dominant chamber; using {:?}", lambda.0, normalized.0);
        normalized
    }
}

/// `f̃(λ) = |A_n|^{-1} Σ_nodes w f(x) E_λ(x)` on the box rule `q`.
///
/// `λ` outside the chamber is normalized first (with a log warning); the
/// value is unchanged since `E_{wλ} = E_λ`.
pub fn alt_fourier_forward(f: &SymmetricFunction, lambda: &Weight, q: &QuadratureSpec) -> Result<Complex64> {
    let t = AltFourierTransform::new(f.dimension(), q)?;
    let lambda = chamber_weight(lambda);
    t.forward_at(&t.sample(f)?, &lambda)
}

/// `f(x) = |A_n|^{-1} Σ_nodes w f̃(λ) conj(E_λ(x))` on the box rule `q`.
pub fn alt_fourier_inverse(f_tilde: &SymmetricFunction, x: &[f64], q: &QuadratureSpec) -> Result<Complex64> {
    let t = AltFourierTransform::new(f_tilde.dimension(), q)?;
    t.inverse_at(&t.sample(f_tilde)?, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expcore::eval_e;

    fn gaussian(n: usize) -> SymmetricFunction {
        SymmetricFunction::new(n, |x| {
            Complex64::new((-PI * x.iter().map(|t| t * t).sum::<f64>()).exp(), 0.0)
        })
        .unwrap()
    }

    #[test]
    fn gaussian_at_origin() {
        let q = QuadratureSpec::gauss_box(5.0, 64).unwrap();
        let v = alt_fourier_forward(&gaussian(2), &Weight(vec![0.0, 0.0]), &q).unwrap();
        assert!((v - 1.0).norm() < 1e-6);
        // n = 3: E_0 = |A_3|, prefactor 1/|A_3|.
        let q = QuadratureSpec::gauss_box(5.0, 40).unwrap();
        let v = alt_fourier_forward(&gaussian(3), &Weight(vec![0.0, 0.0, 0.0]), &q).unwrap();
        assert!((v - 1.0).norm() < 1e-6);
    }

    #[test]
    fn gaussian_is_self_dual() {
        let q = QuadratureSpec::gauss_box(6.0, 96).unwrap();
        let g = gaussian(2);
        for lam in [[0.3, -0.8], [1.5, 0.2], [-1.0, 2.0]] {
            let v = alt_fourier_forward(&g, &Weight(lam.to_vec()), &q).unwrap();
            assert!((v - g.eval(&lam)).norm() < 1e-10, "{lam:?}");
        }
    }

    #[test]
    fn off_chamber_weight_is_normalized() {
        let q = QuadratureSpec::gauss_box(5.0, 24).unwrap();
        let f = SymmetricFunction::new(3, |x| {
            let r2: f64 = x.iter().map(|t| t * t).sum();
            Complex64::new((-PI * r2).exp() * (1.0 + x[0] * x[1] * x[2]), 0.0)
        })
        .unwrap();
        let a = alt_fourier_forward(&f, &Weight(vec![0.1, 0.5, 0.3]), &q).unwrap();
        let b = alt_fourier_forward(&f, &Weight(vec![0.5, 0.3, 0.1]), &q).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn linearity_and_zero() {
        let q = QuadratureSpec::gauss_box(5.0, 48).unwrap();
        let t = AltFourierTransform::new(2, &q).unwrap();
        let f = t.sample(&gaussian(2)).unwrap();
        let g = t
            .sample(&SymmetricFunction::new(2, |x| Complex64::new((-2.0 * PI * (x[0] * x[0] + x[1] * x[1])).exp(), x[0] * x[1])).unwrap())
            .unwrap();
        let (alpha, beta) = (Complex64::new(0.3, -1.2), Complex64::new(-0.7, 0.4));
        let combo: Vec<Complex64> = f.iter().zip(&g).map(|(a, b)| alpha * a + beta * b).collect();
        let lam = [0.4, -0.9];
        let lhs = t.forward_at(&combo, &lam).unwrap();
        let rhs = alpha * t.forward_at(&f, &lam).unwrap() + beta * t.forward_at(&g, &lam).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
        let zero = SymmetricFunction::zero(2).unwrap();
        assert_eq!(alt_fourier_inverse(&zero, &[0.2, 0.1], &q).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn inverse_of_forward_recovers_gaussian() {
        let q = QuadratureSpec::gauss_box(4.0, 96).unwrap();
        let t = AltFourierTransform::new(2, &q).unwrap();
        let g = gaussian(2);
        let transformed = t.forward_on_nodes(&t.sample(&g).unwrap()).unwrap();
        for x in [[0.0, 0.0], [0.3, -0.5], [1.1, 0.4]] {
            let back = t.inverse_at(&transformed, &x).unwrap();
            assert!((back - g.eval(&x)).norm() < 1e-4, "{x:?} {back}");
        }
    }

    #[test]
    fn node_transform_matches_pointwise() {
        let q = QuadratureSpec::gauss_box(3.0, 10).unwrap();
        let t = AltFourierTransform::new(3, &q).unwrap();
        let s = t.sample(&gaussian(3)).unwrap();
        let all = t.forward_on_nodes(&s).unwrap();
        for flat in [0, 17, 523] {
            let lam = t.rule().point(flat);
            let direct = t.forward_at(&s, &lam).unwrap();
            assert!((all[flat] - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn kernel_matches_basis_function() {
        // One node carrying unit mass isolates w · E_λ(x) / |A_n|.
        let q = QuadratureSpec::gauss_box(2.0, 5).unwrap();
        let t = AltFourierTransform::new(3, &q).unwrap();
        let mut s = vec![Complex64::new(0.0, 0.0); t.rule().len()];
        let flat = 61;
        s[flat] = Complex64::new(1.0, 0.0);
        let x = t.rule().point(flat);
        let lam = [0.7, -0.2, 1.3];
        let got = t.forward_at(&s, &lam).unwrap();
        let want = eval_e(&lam, &x).unwrap() * t.rule().weight(flat) / 3.0;
        assert!((got - want).norm() < 1e-14);
        let got = t.inverse_at(&s, &lam).unwrap();
        assert!((got - want.conj()).norm() < 1e-14);
    }
}
