//! The grid `F_N^n`, `F_N = {1/N, …, (N-1)/N, 1}`, and its canonical
//! orbit representatives.
//!
//! Grid points are stored by integer numerators `k` with `s = k/N`, and the
//! index set of the transform is the same set of tuples under `m = k`.

use std::collections::HashMap;

use crate::altgroup::{group_order, is_canonical, stabilizer_order, MAX_TABLE_DIMENSION};
use crate::error::{Error, Result};

/// Canonical `A_n`-orbit representatives in `{1, …, N}^n`, sorted
/// lexicographically, each with its stabilizer order.
#[derive(Debug, Clone)]
pub struct DiscreteIndexSet {
    n: usize,
    density: usize,
    elements: Vec<Vec<i64>>,
    stabilizers: Vec<usize>,
    lookup: HashMap<Vec<i64>, usize>,
}

impl DiscreteIndexSet {
    pub fn new(n: usize, density: usize) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_DIMENSION {
            return Err(Error::SizeLimit {
                what: "grid dimension",
                got: n,
                min: 1,
                max: MAX_TABLE_DIMENSION,
            });
        }
        if density == 0 {
            return Err(Error::Precondition("grid density N must be positive".into()));
        }
        let mut elements = Vec::new();
        let top = density as i64;
        let mut tail = Vec::with_capacity(n.saturating_sub(2));
        collect_semidominant(n, top, &mut tail, &mut elements);
        elements.retain(|m| is_canonical(m));
        elements.sort();
        let stabilizers = elements.iter().map(|m| stabilizer_order(m)).collect();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(DiscreteIndexSet {
            n,
            density,
            elements,
            stabilizers,
            lookup,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn density(&self) -> usize {
        self.density
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn stabilizer(&self, index: usize) -> usize {
        self.stabilizers[index]
    }

    pub fn position(&self, key: &[i64]) -> Option<usize> {
        self.lookup.get(key).copied()
    }

    pub fn contains(&self, key: &[i64]) -> bool {
        self.lookup.contains_key(key)
    }
}

/// Semidominant tuples: a nonincreasing tail `k_3 ≥ … ≥ k_n ≥ 1` and a head
/// pair with both entries at least `k_3`.
fn collect_semidominant(n: usize, top: i64, tail: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let tail_len = n.saturating_sub(2);
    if tail.len() < tail_len {
        let upper = tail.last().copied().unwrap_or(top);
        for k in (1..=upper).rev() {
            tail.push(k);
            collect_semidominant(n, top, tail, out);
            tail.pop();
        }
        return;
    }
    let floor = tail.first().copied().unwrap_or(1);
    let heads = n.min(2);
    let mut head = vec![floor; heads];
    loop {
        let mut m = head.clone();
        m.extend_from_slice(tail);
        out.push(m);
        // odometer over the head entries in [floor, top]
        let mut pos = heads;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if head[pos] < top {
                head[pos] += 1;
                for h in head.iter_mut().skip(pos + 1) {
                    *h = floor;
                }
                break;
            }
        }
    }
}

/// The grid `F_N^n` with its canonical points `\breve F_N^n`.
#[derive(Debug, Clone)]
pub struct GridSpec {
    points: DiscreteIndexSet,
}

impl GridSpec {
    pub fn new(n: usize, density: usize) -> Result<Self> {
        Ok(GridSpec {
            points: DiscreteIndexSet::new(n, density)?,
        })
    }

    pub fn dimension(&self) -> usize {
        self.points.n
    }

    pub fn density(&self) -> usize {
        self.points.density
    }

    /// `|A_n|`
    pub fn group_order(&self) -> usize {
        group_order(self.points.n)
    }

    /// `N^n`
    pub fn full_size(&self) -> usize {
        self.density().pow(self.dimension() as u32)
    }

    /// Numerators of the canonical grid points.
    pub fn semidominant_points(&self) -> &[Vec<i64>] {
        &self.points.elements
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `|G_s|` for the canonical point at `index`.
    pub fn stabilizer(&self, index: usize) -> usize {
        self.points.stabilizer(index)
    }

    pub fn coordinates(&self, numerators: &[i64]) -> Vec<f64> {
        let n = self.density() as f64;
        numerators.iter().map(|&k| k as f64 / n).collect()
    }

    pub fn position(&self, numerators: &[i64]) -> Option<usize> {
        self.points.position(numerators)
    }

    /// The index set `\breve D_N^n`; the same tuples as the grid numerators.
    pub fn index_set(&self) -> &DiscreteIndexSet {
        &self.points
    }

    /// Every point of `F_N^n` as numerators, in lexicographic order.
    pub fn full_grid(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let n = self.dimension();
        let base = self.density();
        (0..self.full_size()).map(move |mut code| {
            let mut k = vec![0i64; n];
            for slot in k.iter_mut().rev() {
                *slot = (code % base) as i64 + 1;
                code /= base;
            }
            k
        })
    }

    /// Rounds a real grid value to its numerator, rejecting values further
    /// than `1e-12` from `F_N`.
    pub fn snap(&self, s: f64) -> Result<i64> {
        snap_to_grid(s, self.density())
    }

    pub fn same_as(&self, other: &GridSpec) -> Result<()> {
        if self.dimension() != other.dimension() || self.density() != other.density() {
            return Err(Error::GridMismatch {
                n_a: self.dimension(),
                density_a: self.density(),
                n_b: other.dimension(),
                density_b: other.density(),
            });
        }
        Ok(())
    }
}

pub(crate) fn snap_to_grid(s: f64, density: usize) -> Result<i64> {
    let scaled = s * density as f64;
    let k = scaled.round();
    if (s - k / density as f64).abs() > 1e-12 || k < 1.0 || k > density as f64 {
        return Err(Error::OffGrid { value: s, density });
    }
    Ok(k as i64)
}
