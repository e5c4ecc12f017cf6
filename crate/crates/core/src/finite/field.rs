use std::collections::BTreeMap;
use std::marker::PhantomData;

use num_complex::Complex64;

use super::grid::GridSpec;
use crate::error::{Error, Result};

/// Marker for what a [`KeyedValues`] holds.
pub trait FieldKind: Clone + std::fmt::Debug {
    /// Used in error messages ("samples", "coefficients").
    const NOUN: &'static str;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Samples;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coefficients;

impl FieldKind for Samples {
    const NOUN: &'static str = "samples";
}

impl FieldKind for Coefficients {
    const NOUN: &'static str = "coefficients";
}

/// Complex values keyed by integer tuples: grid numerators `k` (with
/// `s = k/N`) for samples, indices `m` for coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct KeyedValues<K: FieldKind> {
    n: usize,
    density: usize,
    entries: BTreeMap<Vec<i64>, Complex64>,
    _kind: PhantomData<K>,
}

/// Function values on the canonical grid points.
pub type SampleField = KeyedValues<Samples>;

/// Expansion coefficients `a_m` over the index set.
pub type CoefficientMap = KeyedValues<Coefficients>;

impl<K: FieldKind> KeyedValues<K> {
    pub fn new(n: usize, density: usize) -> Self {
        KeyedValues {
            n,
            density,
            entries: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    pub fn from_entries(
        n: usize,
        density: usize,
        entries: impl IntoIterator<Item = (Vec<i64>, Complex64)>,
    ) -> Self {
        KeyedValues {
            n,
            density,
            entries: entries.into_iter().collect(),
            _kind: PhantomData,
        }
    }

    /// One value per canonical tuple of `grid`, produced by `f(key)`.
    pub fn tabulate(grid: &GridSpec, mut f: impl FnMut(&[i64]) -> Complex64) -> Self {
        Self::from_entries(
            grid.dimension(),
            grid.density(),
            grid.semidominant_points().iter().map(|k| (k.clone(), f(k))),
        )
    }

    pub fn zeros(grid: &GridSpec) -> Self {
        Self::tabulate(grid, |_| Complex64::new(0.0, 0.0))
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn density(&self) -> usize {
        self.density
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &[i64]) -> Option<Complex64> {
        self.entries.get(key).copied()
    }

    pub fn insert(&mut self, key: Vec<i64>, value: Complex64) -> Option<Complex64> {
        self.entries.insert(key, value)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Complex64)> {
        self.entries.iter()
    }

    /// Largest `|a - b|` over the union of keys (a missing key counts as 0).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let zero = Complex64::new(0.0, 0.0);
        self.entries
            .keys()
            .chain(other.entries.keys())
            .map(|k| {
                let a = self.get(k).unwrap_or(zero);
                let b = other.get(k).unwrap_or(zero);
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }

    /// Values aligned with the grid's canonical order, after checking that
    /// the keys are exactly the grid's tuples.
    pub fn aligned_values(&self, grid: &GridSpec) -> Result<Vec<Complex64>> {
        if self.n != grid.dimension() || self.density != grid.density() {
            return Err(Error::GridMismatch {
                n_a: self.n,
                density_a: self.density,
                n_b: grid.dimension(),
                density_b: grid.density(),
            });
        }
        if let Some(extra) = self.entries.keys().find(|k| grid.position(k).is_none()) {
            return Err(Error::UnexpectedKey(extra.clone()));
        }
        let mut missing = Vec::new();
        let values = grid
            .semidominant_points()
            .iter()
            .map(|k| match self.entries.get(k) {
                Some(v) => *v,
                None => {
                    missing.push(k.clone());
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingKeys {
                kind: K::NOUN,
                keys: missing,
            });
        }
        Ok(values)
    }

    pub fn validate(&self, grid: &GridSpec) -> Result<()> {
        self.aligned_values(grid).map(|_| ())
    }
}
