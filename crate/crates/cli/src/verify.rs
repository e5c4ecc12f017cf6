//! The invariant suites behind `altexp verify`.
//!
//! Every check reports a residual and the tolerance it was held to. All
//! randomness comes from one seeded generator.

use std::f64::consts::PI;
use std::time::Instant;

use altexp::altgroup::{
    group_order, stabilizer_order, stabilizer_order_brute_force, EvenPermutationTable, Weight,
};
use altexp::continuous::{
    fundamental_domain_volume, hermite_1d_transform, hermite_eigenfunction, hermite_eigenvalue, hermite_polynomial,
    hermite_transform, plancherel_residual, recover_eigenvalue, series_coefficients, series_index_set,
    AltFourierTransform, HermiteFunction, HermiteIndex, QuadratureSpec, SymmetricFunction,
};
use altexp::expcore::{
    antidet, conjugation_partner, det, elementary_symmetric, eval_e, eval_e_minus, eval_e_plus,
    hyperplane_shift_identity, laplace_spectrum, relation_check, sdet_naive, translate_identity, ComplexMatrix,
};
use altexp::finite::{
    coefficient_energy, sample_energy, CoefficientMap, FiniteTransform, GridSpec, SampleField,
};
use altexp::{Complex64, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub dimensions: Vec<usize>,
    pub max_density: usize,
    pub seed: u64,
    pub tolerance: Option<f64>,
    pub resolution: usize,
    pub box_size: f64,
    pub quad_points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            dimensions: vec![2, 3],
            max_density: 5,
            seed: 0,
            tolerance: None,
            resolution: 64,
            box_size: 6.0,
            quad_points: 96,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub dimensions: Vec<usize>,
    pub max_density: usize,
    pub resolution: usize,
    pub box_size: f64,
    pub quad_points: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:width$}  residual {:.3e}  tol {:.1e}  ({:.2}s)\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.residual,
                c.tolerance,
                c.seconds,
            ));
        }
        out.push_str(&format!(
            "{} of {} checks passed (seed {})\n",
            self.checks.len() - self.failures(),
            self.checks.len(),
            self.seed
        ));
        out
    }
}

struct Suite<'a> {
    config: &'a VerifyConfig,
    rng: ChaCha8Rng,
    checks: Vec<Check>,
}

impl Suite<'_> {
    fn check(&mut self, name: impl Into<String>, tolerance: f64, body: impl FnOnce(&mut ChaCha8Rng) -> Result<f64>) -> Result<()> {
        let start = Instant::now();
        let residual = body(&mut self.rng)?;
        let tolerance = self.config.tolerance.unwrap_or(tolerance);
        self.checks.push(Check {
            name: name.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            seconds: start.elapsed().as_secs_f64(),
        });
        Ok(())
    }
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(lo..hi)).collect()
}

fn permuted(v: &[f64], row: &[u8]) -> Vec<f64> {
    row.iter().map(|&w| v[w as usize]).collect()
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const TRIALS: usize = 100;

pub fn run(config: &VerifyConfig) -> Result<Report> {
    let mut suite = Suite {
        config,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        checks: Vec::new(),
    };
    group_checks(&mut suite)?;
    for &n in &config.dimensions {
        exponential_checks(&mut suite, n)?;
        finite_checks(&mut suite, n)?;
        continuous_checks(&mut suite, n)?;
    }
    hermite_checks(&mut suite)?;
    let passed = suite.checks.iter().all(|c| c.passed);
    Ok(Report {
        seed: config.seed,
        dimensions: config.dimensions.clone(),
        max_density: config.max_density,
        resolution: config.resolution,
        box_size: config.box_size,
        quad_points: config.quad_points,
        checks: suite.checks,
        passed,
    })
}

fn group_checks(s: &mut Suite) -> Result<()> {
    s.check("sdet: naive A_n sum = (det + permanent)/2, n = 2..7", 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for n in 2..=7 {
            for _ in 0..8 {
                let m = ComplexMatrix::from_fn(n, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
                let naive = sdet_naive(&m)?;
                let split = (det(&m) + antidet(&m)?) / 2.0;
                worst = worst.max((naive - split).norm() / naive.norm().max(1.0));
            }
        }
        Ok(worst)
    })?;
    let dims = s.config.dimensions.clone();
    s.check(format!("stabilizer order: formula = brute force, tuples in {{0,1,2}}^n, n in {dims:?}"), 0.0, |_| {
        let mut mismatches = 0usize;
        for &n in &dims {
            for flat in 0..3usize.pow(n as u32) {
                let v: Vec<i64> = (0..n).map(|i| (flat / 3usize.pow(i as u32) % 3) as i64).collect();
                if stabilizer_order(&v) != stabilizer_order_brute_force(&v)? {
                    mismatches += 1;
                }
            }
        }
        Ok(mismatches as f64)
    })
}

fn exponential_checks(s: &mut Suite, n: usize) -> Result<()> {
    let table = EvenPermutationTable::shared(n)?;
    s.check(format!("n={n} A_n symmetry E_wλ(x) = E_λ(x) = E_λ(wx)"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let l = random_vec(rng, n, -3.0, 3.0);
            let x = random_vec(rng, n, -1.0, 1.0);
            let e = eval_e(&l, &x)?;
            for row in table.rows() {
                worst = worst.max((eval_e(&permuted(&l, row), &x)? - e).norm());
                worst = worst.max((eval_e(&l, &permuted(&x, row))? - e).norm());
            }
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} scaling E_cλ(x) = E_λ(cx) and duality E_λ(x) = E_x(λ)"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let l = random_vec(rng, n, -3.0, 3.0);
            let x = random_vec(rng, n, -1.0, 1.0);
            let k = rng.random_range(-2.0..2.0);
            let cl: Vec<f64> = l.iter().map(|v| k * v).collect();
            let cx: Vec<f64> = x.iter().map(|v| k * v).collect();
            worst = worst.max((eval_e(&cl, &x)? - eval_e(&l, &cx)?).norm());
            worst = worst.max((eval_e(&l, &x)? - eval_e(&x, &l)?).norm());
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} translation and hyperplane shift"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let l = random_vec(rng, n, -3.0, 3.0);
            let x = random_vec(rng, n, -1.0, 1.0);
            worst = worst.max(translate_identity(&l, &x, rng.random_range(-1.0..1.0))?);
            let mean = x.iter().sum::<f64>() / n as f64;
            let mut h: Vec<f64> = x.iter().map(|v| v - mean).collect();
            let drift: f64 = h.iter().sum();
            h[n - 1] -= drift;
            worst = worst.max(hyperplane_shift_identity(&l, &h, rng.random_range(-2.0..2.0))?);
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} affine symmetry E_m(wx + r) = E_m(x)"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let m: Vec<f64> = (0..n).map(|_| rng.random_range(-3..=3) as f64).collect();
            let x = random_vec(rng, n, 0.0, 1.0);
            let e = eval_e(&m, &x)?;
            for row in table.rows() {
                let moved: Vec<f64> = permuted(&x, row)
                    .into_iter()
                    .map(|v| v + rng.random_range(-3..=3) as f64)
                    .collect();
                worst = worst.max((eval_e(&m, &moved)? - e).norm());
            }
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} E± relations and quadratic identities, distinct entries"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let mut l = random_vec(rng, n, -3.0, 3.0);
            l.sort_by(|a, b| b.total_cmp(a));
            if rng.random_bool(0.5) {
                l.swap(0, 1);
            }
            let x = random_vec(rng, n, -1.0, 1.0);
            worst = worst.max(relation_check(&Weight(l), &x.into())?.max());
        }
        Ok(worst)
    })?;
    let repeated = |rng: &mut ChaCha8Rng| {
        let mut l = random_vec(rng, n, -3.0, 3.0);
        let i = rng.random_range(1..n);
        l[i] = l[0];
        (l, random_vec(rng, n, -1.0, 1.0))
    };
    s.check(format!("n={n} repeated entry: E⁻ = 0 and E⁺ = 2E"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let (l, x) = repeated(rng);
            worst = worst.max(eval_e_minus(&l, &x)?.norm());
            worst = worst.max((eval_e_plus(&l, &x)? - 2.0 * eval_e(&l, &x)?).norm());
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} repeated entry: E = E⁺ as printed"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let (l, x) = repeated(rng);
            worst = worst.max((eval_e(&l, &x)? - eval_e_plus(&l, &x)?).norm());
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} conjugation E_λ(x) = conj E_μ(x)"), 1e-10, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..TRIALS {
            let mut l = random_vec(rng, n, -3.0, 3.0);
            l.sort_by(|a, b| b.total_cmp(a));
            let x = random_vec(rng, n, -1.0, 1.0);
            let (mu, _) = conjugation_partner(&Weight(l.clone()));
            worst = worst.max((eval_e(&l, &x)? - eval_e(&mu, &x)?.conj()).norm());
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} Laplacian by finite differences, relative"), 1e-5, |rng| {
        let h = 1e-4;
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let l = random_vec(rng, n, -1.5, 1.5);
            let x = random_vec(rng, n, -1.0, 1.0);
            let e = eval_e(&l, &x)?;
            let mut lap = c(0.0, 0.0);
            for j in 0..n {
                let mut up = x.clone();
                let mut down = x.clone();
                up[j] += h;
                down[j] -= h;
                lap += (eval_e(&l, &up)? - 2.0 * e + eval_e(&l, &down)?) / (h * h);
            }
            let expected = laplace_spectrum(&l).laplacian() * e;
            worst = worst.max((lap - expected).norm() / expected.norm().max(1.0));
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} σ_k eigenvalues per exponential summand, relative"), 1e-12, |rng| {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let l = random_vec(rng, n, -3.0, 3.0);
            let spectrum = laplace_spectrum(&l);
            for row in table.rows() {
                // ∂_j² on exp(2πi Σ_i λ_i x_{w(i)}) multiplies by (2πi λ_{w⁻¹(j)})².
                let mut d2 = vec![c(0.0, 0.0); n];
                for (i, &w) in row.iter().enumerate() {
                    let f = c(0.0, 2.0 * PI * l[i]);
                    d2[w as usize] = f * f;
                }
                let sigma = elementary_symmetric(&d2);
                for (k, ev) in spectrum.eigenvalues.iter().enumerate() {
                    worst = worst.max((sigma[k + 1] - ev).norm() / ev.abs().max(1.0));
                }
            }
        }
        Ok(worst)
    })
}

fn finite_checks(s: &mut Suite, n: usize) -> Result<()> {
    let max_density = s.config.max_density;
    let densities: Vec<usize> = (2..=max_density).collect();
    s.check(format!("n={n} orbit counting Σ |A_n|/|G_s| = N^n, N = 1..{max_density}"), 0.0, |_| {
        let mut worst: f64 = 0.0;
        for density in 1..=max_density {
            let grid = GridSpec::new(n, density)?;
            let total: usize = (0..grid.len()).map(|i| group_order(n) / grid.stabilizer(i)).sum();
            worst = worst.max((total as f64 - (density as f64).powi(n as i32)).abs());
        }
        Ok(worst)
    })?;
    let transforms = densities
        .iter()
        .map(|&d| FiniteTransform::new(&GridSpec::new(n, d)?))
        .collect::<Result<Vec<_>>>()?;
    s.check(format!("n={n} discrete orthogonality = |G_m| δ"), 1e-10, |_| {
        let mut worst: f64 = 0.0;
        for t in &transforms {
            let grid = t.grid();
            let len = grid.len();
            let order = group_order(n) as f64;
            for a in 0..len {
                for b in 0..len {
                    let sum: Complex64 = (0..len)
                        .map(|si| t.basis_value(a, si) * t.basis_value(b, si).conj() / grid.stabilizer(si) as f64)
                        .sum::<Complex64>()
                        * order;
                    let expected = if a == b { grid.index_set().stabilizer(a) as f64 } else { 0.0 };
                    worst = worst.max((sum - expected).norm());
                }
            }
        }
        Ok(worst)
    })?;
    s.check(format!("n={n} finite round trips and Parseval"), 1e-9, |rng| {
        let mut worst: f64 = 0.0;
        for t in &transforms {
            let grid = t.grid();
            for _ in 0..5 {
                let f = SampleField::tabulate(grid, |_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
                let a = t.forward(&f)?;
                worst = worst.max(t.inverse(&a)?.max_abs_diff(&f));
                worst = worst.max((coefficient_energy(&a, grid)? - sample_energy(&f, grid)?).abs());
                let b = CoefficientMap::tabulate(grid, |_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
                worst = worst.max(t.forward(&t.inverse(&b)?)?.max_abs_diff(&b));
            }
        }
        Ok(worst)
    })
}

fn continuous_checks(s: &mut Suite, n: usize) -> Result<()> {
    let resolution = s.config.resolution;
    s.check(format!("n={n} torus orthogonality = |A_n| |G_m| δ, |m_i| ≤ 3, M = {resolution}"), 1e-10, |_| {
        let ms = series_index_set(n, 3);
        let k = ms.len();
        let gram = torus_gram(&ms, &QuadratureSpec::torus(resolution)?)?;
        let order = group_order(n) as f64;
        let mut worst: f64 = 0.0;
        for a in 0..k {
            for b in a..k {
                let expected = if a == b { order * stabilizer_order(&ms[a]) as f64 } else { 0.0 };
                worst = worst.max((gram[a * k + b] - expected).norm());
            }
        }
        Ok(worst)
    })?;
    let seed = s.config.seed;
    let mut terms = Vec::new();
    s.check(format!("n={n} series coefficients of a band-limited function, M = {resolution}"), 1e-8, |rng| {
        let pool = series_index_set(n, 2);
        for _ in 0..4 {
            let m = pool[rng.random_range(0..pool.len())].clone();
            terms.push((m, c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))));
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        terms.dedup_by(|a, b| a.0 == b.0);
        let f = band_limited(n, terms.clone())?;
        let coeffs = series_coefficients(&f, 2, &QuadratureSpec::torus(resolution)?)?;
        Ok(max_of(coeffs.iter().map(|(m, got)| {
            let want = terms.iter().find(|t| &t.0 == m).map(|t| t.1).unwrap_or(c(0.0, 0.0));
            (got - want).norm()
        })))
    })?;
    s.check(format!("n={n} weighted Plancherel Σ|G_m||c_m|² = ∫|f|²"), 1e-6, |_| {
        let f = band_limited(n, terms.clone())?;
        Ok(plancherel_residual(&f, 2, &QuadratureSpec::torus(resolution)?)?.residual())
    })?;
    s.check(format!("n={n} fundamental domain volume × |A_n| (Monte Carlo, 10⁶ samples)"), 0.01, |_| {
        let v = fundamental_domain_volume(n, 1_000_000, seed)?;
        Ok((v * group_order(n) as f64 - 1.0).abs())
    })
}

/// `∫_T E_a conj(E_b)` by the tensor rule `q` for every pair of indices.
///
/// Each product `exp(2πi⟨a, w x⟩) exp(−2πi⟨b, w' x⟩)` is a product of
/// one-variable exponentials, so its tensor sum factorizes into
/// one-dimensional sums `Q(k) = Σ_t w_t e^{2πikt}`.
fn torus_gram(ms: &[Vec<i64>], q: &QuadratureSpec) -> Result<Vec<Complex64>> {
    let n = ms.first().map_or(1, Vec::len);
    let table = EvenPermutationTable::shared(n)?;
    let (nodes, weights) = q.rule_1d();
    let bound = ms.iter().flatten().map(|v| v.abs()).max().unwrap_or(0);
    let q1: Vec<Complex64> = (-2 * bound..=2 * bound)
        .map(|freq| {
            nodes
                .iter()
                .zip(&weights)
                .map(|(t, w)| Complex64::from_polar(*w, 2.0 * PI * freq as f64 * t))
                .sum()
        })
        .collect();
    // Frequency of x_j in each summand: a_i with w(i) = j.
    let frequencies: Vec<Vec<Vec<i64>>> = ms
        .iter()
        .map(|m| {
            table
                .rows()
                .map(|row| {
                    let mut f = vec![0i64; n];
                    row.iter().zip(m).for_each(|(&w, &mi)| f[w as usize] = mi);
                    f
                })
                .collect()
        })
        .collect();
    let k = ms.len();
    let mut gram = vec![c(0.0, 0.0); k * k];
    for a in 0..k {
        for b in a..k {
            let mut sum = c(0.0, 0.0);
            for fa in &frequencies[a] {
                for fb in &frequencies[b] {
                    sum += fa
                        .iter()
                        .zip(fb)
                        .map(|(x, y)| q1[(x - y + 2 * bound) as usize])
                        .product::<Complex64>();
                }
            }
            gram[a * k + b] = sum;
        }
    }
    Ok(gram)
}

fn band_limited(n: usize, terms: Vec<(Vec<i64>, Complex64)>) -> Result<SymmetricFunction> {
    SymmetricFunction::new(n, move |x| {
        terms
            .iter()
            .map(|(m, a)| {
                let mf: Vec<f64> = m.iter().map(|&v| v as f64).collect();
                a * eval_e(&mf, x).expect("dimensions agree")
            })
            .sum()
    })
}

fn hermite_checks(s: &mut Suite) -> Result<()> {
    let cfg = s.config.clone();
    let q = QuadratureSpec::gauss_box(cfg.box_size, cfg.quad_points)?;
    let sqrt_2pi = (2.0 * PI).sqrt();
    s.check("Hermite 1-D: transform = i^(-m) φ_m as printed, m ≤ 6", 1e-6, |_| {
        let mut worst: f64 = 0.0;
        for m in 0..=6usize {
            for x in [0.4, -0.75, 1.3] {
                let phi = (-PI * x * x).exp() * hermite_polynomial(m, sqrt_2pi * x)?;
                let lhs = hermite_1d_transform(m, x, &q)?;
                worst = worst.max((lhs - i_pow(-(m as i64)) * phi).norm());
            }
        }
        Ok(worst)
    })?;
    let indices: Vec<HermiteIndex> = [[0, 0], [1, 0], [2, 0], [1, 1], [3, 0], [2, 1], [4, 0], [2, 2], [3, 1]]
        .iter()
        .map(|m| HermiteIndex::new(m.to_vec()))
        .collect::<Result<_>>()?;
    let probes = |rng: &mut ChaCha8Rng| -> Vec<Weight> { (0..4).map(|_| Weight(random_vec(rng, 2, -2.0, 2.0))).collect() };
    s.check("Hermite n=2: ℱφ_m = i^(-|m|) φ_m as printed, |m| ≤ 4", 1e-4, |rng| {
        let mut worst: f64 = 0.0;
        for m in &indices {
            for l in probes(rng) {
                let lhs = hermite_transform(m, &l, &q)?;
                worst = worst.max((lhs - i_pow(-(m.total() as i64)) * hermite_eigenfunction(m, &l)?).norm());
            }
        }
        Ok(worst)
    })?;
    s.check("Hermite n=2: ℱφ_m = i^|m| φ_m, |m| ≤ 4", 1e-4, |rng| {
        let mut worst: f64 = 0.0;
        for m in &indices {
            for l in probes(rng) {
                let lhs = hermite_transform(m, &l, &q)?;
                worst = worst.max((lhs - hermite_eigenvalue(m) * hermite_eigenfunction(m, &l)?).norm());
            }
        }
        Ok(worst)
    })?;
    s.check("Hermite n=2: recovered eigenvalue = i^(-|m|) as printed", 0.0, |rng| {
        let mut mismatches = 0usize;
        for m in &indices {
            let (value, _) = recover_eigenvalue(m, &probes(rng), &q)?;
            if (value - i_pow(-(m.total() as i64))).norm() > 1e-12 {
                mismatches += 1;
            }
        }
        Ok(mismatches as f64)
    })?;
    s.check("Hermite n=3: ℱφ_0(0) = |A_3|", 1e-4, |_| {
        let m = HermiteIndex::new(vec![0, 0, 0])?;
        let q3 = QuadratureSpec::gauss_box(cfg.box_size, cfg.quad_points.min(64))?;
        Ok((hermite_transform(&m, &Weight(vec![0.0; 3]), &q3)? - 3.0).norm())
    })?;
    // Nested transforms are evaluated on the rule's own nodes; L = 4 keeps
    // the kernel resolved at every node.
    let nested = QuadratureSpec::gauss_box(4.0, cfg.quad_points)?;
    s.check("ℱ⁴ = identity on a Hermite combination, n=2", 1e-3, |rng| {
        let t = AltFourierTransform::new(2, &nested)?;
        let mut g = vec![c(0.0, 0.0); t.rule().len()];
        for m in indices.iter().take(5) {
            let a = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let phi = t.sample(&HermiteFunction::new(m.clone())?.to_symmetric())?;
            g.iter_mut().zip(phi).for_each(|(gi, p)| *gi += a * p);
        }
        let mut h = g.clone();
        for _ in 0..4 {
            h = t.forward_on_nodes(&h)?;
        }
        Ok(max_of(h.iter().zip(&g).map(|(a, b)| (a - b).norm())))
    })?;
    s.check("inverse ∘ forward of a Gaussian, n=2", 1e-4, |rng| {
        let t = AltFourierTransform::new(2, &nested)?;
        let gauss = SymmetricFunction::new(2, |x| c((-PI * (x[0] * x[0] + x[1] * x[1])).exp(), 0.0))?;
        let transformed = t.forward_on_nodes(&t.sample(&gauss)?)?;
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let x = random_vec(rng, 2, -1.5, 1.5);
            worst = worst.max((t.inverse_at(&transformed, &x)? - gauss.eval(&x)).norm());
        }
        Ok(worst)
    })
}

fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    }
}
