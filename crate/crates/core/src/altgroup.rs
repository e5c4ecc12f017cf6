//! The alternating group `A_n`, its action on tuples, stabilizers, and the
//! fundamental domains of `A_n` and of the affine group `A_n ⋉ Z^n`.
//!
//! A permutation `w` acts on a tuple by `(w x)_i = x_{w(i)}`. With that
//! convention `E_λ(x) = Σ_w exp(2πi⟨λ, w x⟩)` is the row expansion of the
//! semideterminant of `(exp(2πi λ_i x_j))`, and composition satisfies
//! `(a ∘ b) x = a (b x)`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `n` for which the group table is enumerated (`12!/2 ≈ 2.4e8`).
pub const MAX_TABLE_DIMENSION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    fn from_inversions(count: usize) -> Self {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection of `{0, …, n-1}` stored by its images, with cached parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    parity: Parity,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            parity: Parity::Even,
        }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        let parity = parity_of(&images);
        Ok(Permutation { images, parity })
    }

    /// The transposition exchanging positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        let parity = if i == j { Parity::Even } else { Parity::Odd };
        Permutation { images, parity }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based images `w(0), …, w(n-1)`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// `self ∘ other`, i.e. the permutation acting as `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        let images = self.images.iter().map(|&i| other.images[i]).collect();
        let parity = if self.parity == other.parity {
            Parity::Even
        } else {
            Parity::Odd
        };
        Permutation { images, parity }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &w) in self.images.iter().enumerate() {
            images[w] = i;
        }
        Permutation {
            images,
            parity: self.parity,
        }
    }

    /// `(w x)_i = x_{w(i)}`.
    pub fn apply<T: Copy>(&self, xs: &[T]) -> Result<Vec<T>> {
        if xs.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: xs.len(),
            });
        }
        Ok(self.images.iter().map(|&i| xs[i]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", w + 1)?;
        }
        write!(f, "]")
    }
}

fn parity_of(images: &[usize]) -> Parity {
    // cycle decomposition: parity = (n - #cycles) mod 2
    let n = images.len();
    let mut seen = vec![false; n];
    let mut transpositions = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    Parity::from_inversions(transpositions)
}

/// The even permutations of `{0, …, n-1}` in lexicographic order of images.
///
/// Rows are stored contiguously as `u8` images so that the `n = 12` table
/// stays within a few gigabytes.
#[derive(Debug, Clone)]
pub struct EvenPermutationTable {
    n: usize,
    images: Vec<u8>,
}

impl EvenPermutationTable {
    pub fn enumerate(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_DIMENSION {
            return Err(Error::SizeLimit {
                what: "alternating group degree (table holds n!/2 rows)",
                got: n,
                min: 1,
                max: MAX_TABLE_DIMENSION,
            });
        }
        let order = group_order(n);
        let mut images = Vec::with_capacity(order * n);
        let mut current: Vec<u8> = (0..n as u8).collect();
        // Lexicographic successor; parity flips are tracked from the number
        // of elements reversed in the tail.
        let mut even = true;
        loop {
            if even {
                images.extend_from_slice(&current);
            }
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1])
            else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
            let tail = n - k - 1;
            let swaps = 1 + tail / 2;
            if swaps % 2 == 1 {
                even = !even;
            }
        }
        debug_assert_eq!(images.len(), order * n);
        Ok(EvenPermutationTable { n, images })
    }

    /// Process-wide cached table for degree `n`.
    pub fn shared(n: usize) -> Result<&'static EvenPermutationTable> {
        static TABLES: [OnceLock<EvenPermutationTable>; MAX_TABLE_DIMENSION + 1] =
            [const { OnceLock::new() }; MAX_TABLE_DIMENSION + 1];
        if n == 0 || n > MAX_TABLE_DIMENSION {
            // produce the error without touching the cache
            return Self::enumerate(n).map(|_| unreachable!());
        }
        Ok(TABLES[n].get_or_init(|| Self::enumerate(n).expect("degree checked above")))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.images.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Raw rows of images, one slice of length `n` per group element.
    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.images.chunks_exact(self.n)
    }

    pub fn get(&self, index: usize) -> Option<Permutation> {
        let row = self.images.chunks_exact(self.n).nth(index)?;
        Some(Permutation {
            images: row.iter().map(|&i| i as usize).collect(),
            parity: Parity::Even,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.rows().map(|row| Permutation {
            images: row.iter().map(|&i| i as usize).collect(),
            parity: Parity::Even,
        })
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        w.len() == self.n
            && self
                .rows()
                .any(|row| row.iter().zip(w.images()).all(|(&a, &b)| a as usize == b))
    }
}

/// `|A_n|`: `n!/2` for `n ≥ 2`, and 1 for `n ≤ 1`.
pub fn group_order(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        (1..=n).product::<usize>() / 2
    }
}

pub fn enumerate_alternating_group(n: usize) -> Result<EvenPermutationTable> {
    EvenPermutationTable::enumerate(n)
}

pub fn apply_permutation(w: &Permutation, x: &Point) -> Result<Point> {
    w.apply(&x.0).map(Point)
}

macro_rules! tuple_newtype {
    ($(#[$meta:meta])* $name:ident, $elem:ty) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name(pub Vec<$elem>);

        impl $name {
            pub fn new(entries: Vec<$elem>) -> Self {
                $name(entries)
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn as_slice(&self) -> &[$elem] {
                &self.0
            }

            pub fn is_semidominant(&self) -> bool {
                is_semidominant(&self.0)
            }

            pub fn is_canonical(&self) -> bool {
                is_canonical(&self.0)
            }
        }

        impl From<Vec<$elem>> for $name {
            fn from(v: Vec<$elem>) -> Self {
                $name(v)
            }
        }

        impl From<&[$elem]> for $name {
            fn from(v: &[$elem]) -> Self {
                $name(v.to_vec())
            }
        }

        impl std::ops::Deref for $name {
            type Target = [$elem];
            fn deref(&self) -> &[$elem] {
                &self.0
            }
        }
    };
}

tuple_newtype!(
    /// A real weight `λ` indexing `E_λ`.
    Weight,
    f64
);
tuple_newtype!(
    /// An integer weight `m`, the index of an `A_n^aff`-invariant function.
    IntegerWeight,
    i64
);
tuple_newtype!(
    /// A point `x` of `R^n`.
    Point,
    f64
);

impl IntegerWeight {
    pub fn to_weight(&self) -> Weight {
        Weight(self.0.iter().map(|&m| m as f64).collect())
    }

    /// `m_1, m_2 > m_3 > … > m_n` with `m_1 ≠ m_2`.
    pub fn is_strictly_semidominant(&self) -> bool {
        is_strictly_semidominant(&self.0)
    }
}

impl Weight {
    pub fn is_strictly_semidominant(&self) -> bool {
        is_strictly_semidominant(&self.0)
    }
}

/// `v_1, v_2 ≥ v_3 ≥ … ≥ v_n`.
pub fn is_semidominant<T: PartialOrd>(v: &[T]) -> bool {
    if v.len() < 3 {
        return true;
    }
    v[0] >= v[2] && v[1] >= v[2] && v[2..].windows(2).all(|p| p[0] >= p[1])
}

pub fn is_strictly_semidominant<T: PartialOrd>(v: &[T]) -> bool {
    if v.len() >= 2 && v[0] == v[1] {
        return false;
    }
    if v.len() < 3 {
        return true;
    }
    v[0] > v[2] && v[1] > v[2] && v[2..].windows(2).all(|p| p[0] > p[1])
}

pub fn has_repeated_entry<T: PartialEq>(v: &[T]) -> bool {
    v.iter()
        .enumerate()
        .any(|(i, a)| v[i + 1..].iter().any(|b| a == b))
}

/// Canonical `A_n`-orbit representative: semidominant, and `v_1 ≥ v_2`
/// whenever some entry repeats. Exactly the fixed points of
/// [`semidominant_normalize`].
///
/// A tuple with a repeated entry has a single `A_n`-orbit over its
/// rearrangements, so `(a, b, …)` and `(b, a, …)` would otherwise both be
/// semidominant representatives of the same orbit.
pub fn is_canonical<T: PartialOrd>(v: &[T]) -> bool {
    is_semidominant(v) && (v.len() < 2 || v[0] >= v[1] || !has_repeated_entry(v))
}

/// Multiplicities of the distinct entries, in order of first appearance.
fn multiplicities<T: PartialEq>(v: &[T]) -> Vec<usize> {
    let mut counted = vec![false; v.len()];
    let mut out = Vec::new();
    for i in 0..v.len() {
        if counted[i] {
            continue;
        }
        let mut k = 0;
        for j in i..v.len() {
            if v[j] == v[i] {
                counted[j] = true;
                k += 1;
            }
        }
        out.push(k);
    }
    out
}

/// `|G_v|`, the number of even permutations fixing `v`.
///
/// The full `S_n` stabilizer is `∏ k_j!` over multiplicities; it contains an
/// odd element exactly when some `k_j ≥ 2`, in which case half of it is even.
pub fn stabilizer_order<T: PartialEq>(v: &[T]) -> usize {
    let ks = multiplicities(v);
    let full: usize = ks.iter().map(|&k| (1..=k).product::<usize>()).product();
    if ks.iter().all(|&k| k == 1) {
        1
    } else {
        full / 2
    }
}

/// Brute-force `|G_v|` by scanning the group table.
pub fn stabilizer_order_brute_force<T: PartialEq + Copy>(v: &[T]) -> Result<usize> {
    let table = EvenPermutationTable::shared(v.len())?;
    Ok(table
        .rows()
        .filter(|row| row.iter().enumerate().all(|(i, &w)| v[w as usize] == v[i]))
        .count())
}

/// Returns `(w λ, w)` with `w ∈ A_n` and `w λ` semidominant.
///
/// Among all semidominant results the lexicographically greatest tuple is
/// chosen, and among the permutations producing it the one with the
/// lexicographically smallest images. Entries are compared with
/// `f64::total_cmp`.
pub fn semidominant_normalize(lambda: &Weight) -> (Weight, Permutation) {
    let v = lambda.as_slice();
    let images = normalizing_images(v, |a, b| b.total_cmp(a));
    let w = Permutation::from_images(images).expect("sorting yields a permutation");
    debug_assert!(w.is_even());
    let image = Weight(w.apply(v).expect("same length"));
    (image, w)
}

/// Integer variant of [`semidominant_normalize`].
pub fn semidominant_normalize_integer(m: &IntegerWeight) -> (IntegerWeight, Permutation) {
    let v = m.as_slice();
    let images = normalizing_images(v, |a, b| b.cmp(a));
    let w = Permutation::from_images(images).expect("sorting yields a permutation");
    let image = IntegerWeight(w.apply(v).expect("same length"));
    (image, w)
}

fn normalizing_images<T: PartialEq>(
    v: &[T],
    descending: impl Fn(&T, &T) -> std::cmp::Ordering,
) -> Vec<usize> {
    let n = v.len();
    // Stable sort: ties keep ascending index, the smallest images possible.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| descending(&v[i], &v[j]));
    if parity_of(&order) == Parity::Even {
        return order;
    }
    // Odd: with a repeated value, swap the last tied pair (keeps the target
    // tuple and perturbs the images as late as possible). Otherwise trade
    // the two largest entries.
    match (0..n.saturating_sub(1))
        .rev()
        .find(|&p| v[order[p]] == v[order[p + 1]])
    {
        Some(p) => order.swap(p, p + 1),
        None => order.swap(0, 1),
    }
    order
}

/// Open fundamental domain of `A_n`: `x_1, x_2 > x_3 > … > x_n`.
pub fn in_fundamental_domain(x: &[f64]) -> bool {
    if x.len() < 3 {
        return true;
    }
    x[0] > x[2] && x[1] > x[2] && x[2..].windows(2).all(|p| p[0] > p[1])
}

/// Open fundamental domain of `A_n^aff`: `1 > x_1, x_2 > x_3 > … > x_n > 0`.
pub fn in_affine_fundamental_domain(x: &[f64]) -> bool {
    let Some(&last) = x.last() else {
        return false;
    };
    x.iter().take(2).all(|&xi| xi < 1.0) && in_fundamental_domain(x) && last > 0.0
}

/// Closure of the affine fundamental domain: `1 ≥ x_1, x_2 ≥ x_3 ≥ … ≥ x_n ≥ 0`.
pub fn in_closed_affine_fundamental_domain(x: &[f64]) -> bool {
    let Some(&last) = x.last() else {
        return false;
    };
    x.iter().take(2).all(|&xi| xi <= 1.0) && is_semidominant(x) && last >= 0.0
}

/// Decomposes `x = w x₀ + r` with `x₀` in the closed affine fundamental
/// domain, `w ∈ A_n` and `r ∈ Z^n`.
pub fn affine_reduce(x: &Point) -> (Point, Permutation, Vec<i64>) {
    let shift: Vec<i64> = x.iter().map(|xi| xi.floor() as i64).collect();
    let frac = Weight(x.iter().zip(&shift).map(|(xi, r)| xi - *r as f64).collect());
    let (reduced, w) = semidominant_normalize(&frac);
    (Point(reduced.0), w.inverse(), shift)
}
