use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::altgroup::{is_semidominant, EvenPermutationTable, MAX_TABLE_DIMENSION};
use crate::error::{Error, Result};

/// Tolerance of the construction-time symmetry probe.
pub const SYMMETRY_TOLERANCE: f64 = 1e-8;

const PROBE_POINTS: usize = 16;
const PROBE_SEED: u64 = 0x5eed;

type Callable = dyn Fn(&[f64]) -> Complex64 + Send + Sync;

/// An `A_n`-symmetric complex function on `R^n`.
///
/// The callable is invoked concurrently from quadrature loops, hence the
/// `Send + Sync` bound.
#[derive(Clone)]
pub struct SymmetricFunction {
    n: usize,
    f: Arc<Callable>,
}

impl fmt::Debug for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymmetricFunction").field("n", &self.n).finish_non_exhaustive()
    }
}

impl SymmetricFunction {
    /// Wraps `f` after checking `f(wx) = f(x)` on seeded random points
    /// `x ∈ [-1.5, 1.5]^n` and every `w ∈ A_n`.
    pub fn new<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Complex64 + Send + Sync + 'static,
    {
        let g = Self::new_unchecked(n, f)?;
        g.check_symmetry()?;
        Ok(g)
    }

    /// Wraps `f` without probing its symmetry.
    pub fn new_unchecked<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Complex64 + Send + Sync + 'static,
    {
        if n == 0 || n > MAX_TABLE_DIMENSION {
            return Err(Error::SizeLimit {
                what: "function dimension",
                got: n,
                min: 1,
                max: MAX_TABLE_DIMENSION,
            });
        }
        Ok(SymmetricFunction { n, f: Arc::new(f) })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new_unchecked(n, |_| Complex64::new(0.0, 0.0))
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        (self.f)(x)
    }

    fn check_symmetry(&self) -> Result<()> {
        let table = EvenPermutationTable::shared(self.n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
        let mut moved = vec![0.0; self.n];
        for _ in 0..PROBE_POINTS {
            let x: Vec<f64> = (0..self.n).map(|_| rng.random_range(-1.5..1.5)).collect();
            let fx = self.eval(&x);
            let scale = fx.norm().max(1.0);
            for row in table.rows() {
                for (slot, &w) in moved.iter_mut().zip(row) {
                    *slot = x[w as usize];
                }
                let residual = (self.eval(&moved) - fx).norm() / scale;
                if !(residual <= SYMMETRY_TOLERANCE) {
                    return Err(Error::NotSymmetric { residual, point: x });
                }
            }
        }
        Ok(())
    }
}

/// Hermite multi-index `m` with `m_1, m_2 ≥ m_3 ≥ … ≥ m_n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermiteIndex(Vec<usize>);

impl HermiteIndex {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::Precondition("Hermite index must be nonempty".into()));
        }
        if !is_semidominant(&m) {
            return Err(Error::Precondition(format!("Hermite index {m:?} is not semidominant")));
        }
        Ok(HermiteIndex(m))
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// `|m| = m_1 + … + m_n`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for HermiteIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_probe() {
        let sym = SymmetricFunction::new(3, |x| Complex64::new(x.iter().map(|t| t * t).sum(), 0.0));
        assert!(sym.is_ok());
        // Invariant under even permutations only: the Vandermonde product.
        let vdm = SymmetricFunction::new(3, |x| {
            Complex64::new((x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]), 0.0)
        });
        assert!(vdm.is_ok());
        let asym = SymmetricFunction::new(3, |x| Complex64::new(x[0], 0.0));
        assert!(matches!(asym, Err(Error::NotSymmetric { .. })));
        assert!(SymmetricFunction::zero(0).is_err());
    }

    #[test]
    fn hermite_index_shape() {
        assert!(HermiteIndex::new(vec![1, 3, 0]).is_ok());
        assert!(HermiteIndex::new(vec![1, 0, 2]).is_err());
        assert_eq!(HermiteIndex::new(vec![2, 1, 1]).unwrap().total(), 4);
        assert_eq!(HermiteIndex::new(vec![2, 0]).unwrap().to_string(), "(2,0)");
    }
}
