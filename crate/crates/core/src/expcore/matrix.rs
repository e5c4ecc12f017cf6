//! Determinant, antideterminant (permanent) and semideterminant of complex
//! square matrices.

use num_complex::Complex64;

use crate::altgroup::EvenPermutationTable;
use crate::error::{Error, Result};

/// Largest dimension accepted by the Ryser permanent (2^n subsets).
pub const MAX_PERMANENT_DIMENSION: usize = 20;

/// Dimensions up to this use naive `A_n` enumeration for `sdet` by default.
pub const NAIVE_SDET_MAX_DIMENSION: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ComplexMatrix { n, entries }
    }

    /// Row-major entries; the length must be a perfect square.
    pub fn from_row_major(entries: Vec<Complex64>) -> Result<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n * n != entries.len() {
            return Err(Error::Precondition(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SdetStrategy {
    /// Sum of diagonal products over the enumerated `A_n` table.
    NaiveEnumeration,
    /// `(det + permanent) / 2`.
    DetPlusPermanent,
}

impl SdetStrategy {
    pub fn default_for(n: usize) -> Self {
        if n <= NAIVE_SDET_MAX_DIMENSION {
            SdetStrategy::NaiveEnumeration
        } else {
            SdetStrategy::DetPlusPermanent
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub strategy: SdetStrategy,
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(m: &ComplexMatrix) -> Complex64 {
    let n = m.n;
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if n == 1 {
        return m.entries[0];
    }
    let mut a = m.entries.clone();
    let mut result = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p * n + col].norm().total_cmp(&a[q * n + col].norm()))
            .unwrap();
        let pivot_value = a[pivot * n + col];
        if pivot_value.norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            result = -result;
        }
        result *= pivot_value;
        for row in col + 1..n {
            let factor = a[row * n + col] / pivot_value;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in col..n {
                let upper = a[col * n + j];
                a[row * n + j] -= factor * upper;
            }
        }
    }
    result
}

/// Permanent by Ryser's formula, visiting column subsets in Gray-code order
/// so each step adds or removes a single column from the row sums.
pub fn antidet(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.n;
    if n > MAX_PERMANENT_DIMENSION {
        return Err(Error::SizeLimit {
            what: "permanent dimension (Ryser visits 2^n subsets)",
            got: n,
            min: 0,
            max: MAX_PERMANENT_DIMENSION,
        });
    }
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut in_subset = vec![false; n];
    let mut total = Complex64::new(0.0, 0.0);
    let mut subset_size = 0usize;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        if in_subset[j] {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s -= m.entries[i * n + j];
            }
            subset_size -= 1;
        } else {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s += m.entries[i * n + j];
            }
            subset_size += 1;
        }
        in_subset[j] = !in_subset[j];
        let product: Complex64 = row_sums.iter().product();
        if subset_size % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(if n % 2 == 0 { total } else { -total })
}

/// `Σ_{w ∈ A_n} a_{1,w(1)} ⋯ a_{n,w(n)}` by direct enumeration.
pub fn sdet_naive(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.n;
    let table = EvenPermutationTable::shared(n)?;
    Ok(table
        .rows()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(i, &w)| m.entries[i * n + w as usize])
                .product::<Complex64>()
        })
        .sum())
}

pub fn sdet_with(m: &ComplexMatrix, strategy: SdetStrategy) -> Result<EvalResult> {
    let value = match strategy {
        SdetStrategy::NaiveEnumeration => sdet_naive(m)?,
        SdetStrategy::DetPlusPermanent => (det(m) + antidet(m)?) / 2.0,
    };
    Ok(EvalResult { value, strategy })
}

/// Semideterminant with the default strategy for the matrix dimension.
pub fn sdet(m: &ComplexMatrix) -> Result<EvalResult> {
    sdet_with(m, SdetStrategy::default_for(m.n))
}
