//! Tensor-product quadrature on the unit torus and on symmetric boxes.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::altgroup::group_order;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureScheme {
    /// Equal weights at cell midpoints; exact on the torus for trigonometric
    /// polynomials whose frequencies are not multiples of the resolution.
    MidpointTensor,
    GaussLegendreTensor,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureDomain {
    /// `[0, 1)^n` with unit volume.
    Torus,
    /// Closure of the affine fundamental domain, realized as the torus rule
    /// scaled by `1/|A_n|`; valid for `A_n`-symmetric integrands only.
    FundamentalAffine,
    /// `[-half_width, half_width]^n`.
    Box { half_width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub resolution: usize,
    pub scheme: QuadratureScheme,
    pub domain: QuadratureDomain,
}

impl QuadratureSpec {
    pub fn new(resolution: usize, scheme: QuadratureScheme, domain: QuadratureDomain) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::SizeLimit {
                what: "quadrature points per axis",
                got: resolution,
                min: 2,
                max: usize::MAX,
            });
        }
        if let QuadratureDomain::Box { half_width } = domain {
            if !(half_width.is_finite() && half_width > 0.0) {
                return Err(Error::Precondition(format!("box half-width must be positive, got {half_width}")));
            }
        }
        Ok(QuadratureSpec { resolution, scheme, domain })
    }

    /// Midpoint rule on the torus.
    pub fn torus(resolution: usize) -> Result<Self> {
        Self::new(resolution, QuadratureScheme::MidpointTensor, QuadratureDomain::Torus)
    }

    /// Gauss–Legendre rule on `[-half_width, half_width]^n`.
    pub fn gauss_box(half_width: f64, resolution: usize) -> Result<Self> {
        Self::new(
            resolution,
            QuadratureScheme::GaussLegendreTensor,
            QuadratureDomain::Box { half_width },
        )
    }

    /// One-dimensional nodes and weights on the domain's interval.
    pub fn rule_1d(&self) -> (Vec<f64>, Vec<f64>) {
        let (lo, hi) = match self.domain {
            QuadratureDomain::Torus | QuadratureDomain::FundamentalAffine => (0.0, 1.0),
            QuadratureDomain::Box { half_width } => (-half_width, half_width),
        };
        let m = self.resolution;
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        match self.scheme {
            QuadratureScheme::MidpointTensor => {
                let h = (hi - lo) / m as f64;
                let nodes = (0..m).map(|j| lo + (j as f64 + 0.5) * h).collect();
                (nodes, vec![h; m])
            }
            QuadratureScheme::GaussLegendreTensor => {
                let (x, w) = gauss_legendre(m);
                (
                    x.iter().map(|t| mid + half * t).collect(),
                    w.iter().map(|wi| half * wi).collect(),
                )
            }
        }
    }

    /// Tensor rule in dimension `n`, with the fundamental-domain scaling
    /// folded into the weights.
    pub fn tensor(&self, n: usize) -> TensorRule {
        let (nodes, mut weights) = self.rule_1d();
        if self.domain == QuadratureDomain::FundamentalAffine {
            let scale = (group_order(n) as f64).powf(-1.0 / n as f64);
            weights.iter_mut().for_each(|w| *w *= scale);
        }
        TensorRule { n, nodes, weights }
    }

    /// `∫ f` over the configured domain in dimension `n`.
    pub fn integrate<F>(&self, n: usize, f: F) -> Complex64
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        self.tensor(n).integrate(f)
    }
}

/// Gauss–Legendre nodes (ascending) and weights on `[-1, 1]`.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..(m + 1) / 2 {
        let mut x = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut derivative = 0.0;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(m, x);
            derivative = dp;
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(m, x);
        if dp != 0.0 {
            derivative = dp;
        }
        let w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let next = ((2 * k - 1) as f64 * x * p - (k - 1) as f64 * p_prev) / k as f64;
        p_prev = p;
        p = next;
    }
    let dp = m as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// A materialized tensor-product rule.
#[derive(Debug, Clone)]
pub struct TensorRule {
    pub n: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl TensorRule {
    pub fn per_axis(&self) -> usize {
        self.nodes.len()
    }

    pub fn len(&self) -> usize {
        self.per_axis().pow(self.n as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Axis indices of the flat node index `flat` (last axis fastest).
    pub fn axis_indices(&self, mut flat: usize, out: &mut [usize]) {
        let m = self.per_axis();
        for slot in out.iter_mut().rev() {
            *slot = flat % m;
            flat /= m;
        }
    }

    pub fn point(&self, flat: usize) -> Vec<f64> {
        let mut idx = vec![0; self.n];
        self.axis_indices(flat, &mut idx);
        idx.iter().map(|&i| self.nodes[i]).collect()
    }

    pub fn weight(&self, flat: usize) -> f64 {
        let mut idx = vec![0; self.n];
        self.axis_indices(flat, &mut idx);
        idx.iter().map(|&i| self.weights[i]).product()
    }

    pub fn integrate<F>(&self, f: F) -> Complex64
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        (0..self.len())
            .into_par_iter()
            .map_init(
                || (vec![0usize; self.n], vec![0.0; self.n]),
                |(idx, x), flat| {
                    self.axis_indices(flat, idx);
                    let mut w = 1.0;
                    for (k, &i) in idx.iter().enumerate() {
                        x[k] = self.nodes[i];
                        w *= self.weights[i];
                    }
                    f(x) * w
                },
            )
            .sum()
    }

    /// `f` at every node, in flat order.
    pub fn sample<F>(&self, f: F) -> Vec<Complex64>
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        (0..self.len())
            .into_par_iter()
            .map(|flat| f(&self.point(flat)))
            .collect()
    }
}
