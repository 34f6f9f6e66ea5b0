//! Back-solve reconstruction and the numerical harnesses around it.
//!
//! Given `A x = 0` and noisy readings `x′_S`, a forcing chain recovers the rest
//! of `x` one force at a time: `x̂_k = −(1/A_ik) Σ_{j ∈ N[i]∖{k}} A_ij x̂_j`.
//! [`verify_bounds`] checks the per-vertex bound `q_k(κ′)ε` and the coarse
//! bound `(κ′Δ)^τ ε` on sampled matrices; [`verify_variance`] checks the
//! variance bound `V_k(κ′)ε` by Monte Carlo on one fixed matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::errorvec::{self, ErrorVec};
use crate::forcing::{self, Force, ForcingChain};
use crate::graph::{Graph, VertexSet};
use crate::matrices::{self, PatternMatrix, SamplerOptions, Scalar};

const REL_SLACK: f64 = 1e-9;
const ABS_SLACK: f64 = 1e-12;

fn within(observed: f64, bound: f64) -> bool {
    observed <= bound * (1.0 + REL_SLACK) + ABS_SLACK
}

/// Readings `x′_i` for `i ∈ set`, each off by at most `epsilon`.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement<T = f64> {
    set: VertexSet,
    values: BTreeMap<usize, T>,
    epsilon: T,
}

impl<T: Scalar> Measurement<T> {
    /// `values` must have exactly the keys of `set`.
    pub fn new(set: VertexSet, values: BTreeMap<usize, T>, epsilon: T) -> Result<Self> {
        if !values.keys().copied().eq(set.iter().copied()) {
            return Err(Error::InvalidParameter("measurement values must be defined exactly on the set".into()));
        }
        if epsilon.is_negative() {
            return Err(Error::InvalidParameter("epsilon must be nonnegative".into()));
        }
        Ok(Measurement { set, values, epsilon })
    }

    /// Reads `x` on `set` and adds `noise(i)` to each reading.
    pub fn from_truth<F: FnMut(usize) -> T>(x: &[T], set: &VertexSet, epsilon: T, mut noise: F) -> Result<Self> {
        let values = set.iter().map(|&i| (i, x[i - 1].clone() + noise(i))).collect();
        Self::new(set.clone(), values, epsilon)
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn values(&self) -> &BTreeMap<usize, T> {
        &self.values
    }

    pub fn epsilon(&self) -> &T {
        &self.epsilon
    }
}

/// `x̂` with the two per-vertex bounds evaluated at this matrix's `κ′`.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction<T = f64> {
    pub x_hat: Vec<T>,
    /// `q_k(κ′)·ε` for the chain used.
    pub error_bound: Vec<f64>,
    /// `(κ′Δ)^{round(k)}·ε`.
    pub coarse_bound: Vec<f64>,
    pub kappa: f64,
}

fn check_chain<T: Scalar>(a: &PatternMatrix<T>, chain: &ForcingChain) -> Result<()> {
    if chain.order() != a.n() {
        return Err(Error::Dimension(format!("chain has {} vertices, matrix is {}x{}", chain.order(), a.n(), a.n())));
    }
    Ok(())
}

/// Fills `x_hat` along `forces`; seed entries must already be in place.
fn solve_in_place<T: Scalar>(a: &PatternMatrix<T>, forces: &[Force], x_hat: &mut [T]) -> Result<()> {
    let g = a.graph();
    for f in forces {
        let pivot = a.get(f.by, f.on);
        if pivot.is_zero() {
            return Err(Error::PatternViolation { by: f.by, on: f.on });
        }
        let mut sum = T::zero();
        for j in g.closed_neighbors(f.by) {
            if j != f.on {
                sum = sum + a.get(f.by, j).clone() * x_hat[j - 1].clone();
            }
        }
        x_hat[f.on - 1] = -sum / pivot.clone();
    }
    Ok(())
}

/// Runs the back-solve along `chain` and reports `x̂` with its bounds.
pub fn back_solve<T: Scalar>(a: &PatternMatrix<T>, chain: &ForcingChain, m: &Measurement<T>) -> Result<Reconstruction<T>> {
    check_chain(a, chain)?;
    if chain.set() != m.set() {
        return Err(Error::InvalidParameter("measurement set differs from the chain's initial set".into()));
    }
    let g = a.graph();
    let mut x_hat = vec![T::zero(); a.n()];
    for (&i, v) in m.values() {
        x_hat[i - 1] = v.clone();
    }
    solve_in_place(a, &chain.forces(), &mut x_hat)?;

    let kappa = a.kappa_prime().to_f64().unwrap_or(f64::INFINITY);
    let eps = m.epsilon().to_f64().unwrap_or(f64::INFINITY);
    let q = errorvec::error_vector_of_chain(g, chain);
    let delta = g.max_degree() as f64;
    let error_bound = q.iter().map(|(_, p)| p.eval(kappa) * eps).collect();
    let coarse_bound = g.vertices().map(|k| (kappa * delta).powi(chain.round_of(k) as i32) * eps).collect();
    Ok(Reconstruction { x_hat, error_bound, coarse_bound, kappa })
}

/// Mixes a base seed with a trial index into an independent sub-seed.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    fn splitmix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    splitmix(seed ^ splitmix(trial))
}

fn with_threads<R: Send, F: FnOnce() -> R + Send>(threads: Option<usize>, f: F) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Zero-mean sensor noise with variance `ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseDist {
    /// Uniform on `[−√(3ε), √(3ε)]`.
    #[default]
    Uniform,
    /// Normal with standard deviation `√ε`.
    Gaussian,
    /// `±√ε` with equal probability.
    Rademacher,
}

impl NoiseDist {
    pub fn sample<R: Rng>(self, rng: &mut R, epsilon: f64) -> f64 {
        let sd = epsilon.sqrt();
        if sd == 0.0 {
            return 0.0;
        }
        match self {
            NoiseDist::Uniform => {
                let h = (3.0 * epsilon).sqrt();
                rng.random_range(-h..=h)
            }
            NoiseDist::Gaussian => Normal::new(0.0, sd).expect("finite sd").sample(rng),
            NoiseDist::Rademacher => {
                if rng.random_bool(0.5) {
                    sd
                } else {
                    -sd
                }
            }
        }
    }
}

impl FromStr for NoiseDist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(NoiseDist::Uniform),
            "gaussian" | "normal" => Ok(NoiseDist::Gaussian),
            "rademacher" => Ok(NoiseDist::Rademacher),
            _ => Err(Error::InvalidParameter(format!("unknown noise distribution `{s}`"))),
        }
    }
}

impl fmt::Display for NoiseDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoiseDist::Uniform => "uniform",
            NoiseDist::Gaussian => "gaussian",
            NoiseDist::Rademacher => "rademacher",
        })
    }
}

/// A failed inequality, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub trial: Option<usize>,
    pub seed: u64,
    pub vertex: Option<usize>,
    pub observed: f64,
    pub bound: f64,
    pub matrix: serde_json::Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct WorstSlack {
    /// Largest `‖x − x̂‖∞ / ((κ′Δ)^τ ε)` seen.
    pub thm16: Option<f64>,
    /// Largest `|x_k − x̂_k| / (q_k(κ′) ε)` seen; in variance mode, the largest
    /// `|C_ik| / ([α_i]q_k)(κ′)` over the unit probes.
    pub thm52: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexStats {
    pub vertex: usize,
    /// `V_k(κ′)·ε`.
    pub bound: f64,
    /// Sample variance of `x̂_k − x_k`.
    pub sample: f64,
    /// `Σ_i C_ik² ε`, the true variance for this matrix.
    pub exact: f64,
    pub mean: f64,
    /// `4·√(V_k(κ′)ε / trials)`.
    pub mean_band: f64,
    /// `mean / √(exact / trials)`.
    pub z_mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarianceSection {
    pub noise: NoiseDist,
    pub epsilon: f64,
    pub kappa: f64,
    pub chain: ForcingChain,
    pub per_vertex: Vec<VertexStats>,
    /// `coefficients[k-1][i]` is `C_ik` from the unit probe on sensor `i`.
    pub coefficients: Vec<BTreeMap<usize, f64>>,
    /// Largest absolute gap between `x̂ − x` and `Σ_i C_ik α_i` over all trials.
    pub identity_residual: f64,
    /// Largest relative superposition defect over random probe pairs.
    pub superposition_residual: f64,
}

/// Output of both harnesses. `violations` empty means every check held.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub graph: String,
    pub set: Vec<usize>,
    pub trials: usize,
    pub violations: Vec<Violation>,
    pub worst_slack: WorstSlack,
    pub variance: Option<VarianceSection>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn describe(g: &Graph) -> String {
    format!("n={},m={}", g.order(), g.size())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsConfig {
    pub trials: usize,
    pub epsilon: f64,
    pub seed: u64,
    pub sampler: SamplerOptions,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig { trials: 200, epsilon: 1e-3, seed: 0, sampler: SamplerOptions::default(), threads: None }
    }
}

struct TrialOutcome {
    violations: Vec<Violation>,
    thm16: Option<f64>,
    thm52: Option<f64>,
}

/// Samples `trials` matrices with known null vectors, perturbs the readings on
/// `set` uniformly in `[−ε, ε]`, back-solves along the greedy chain and checks
/// both error bounds and their ordering on every vertex.
pub fn verify_bounds(g: &Graph, set: &VertexSet, cfg: BoundsConfig) -> Result<VerifyReport> {
    if !(cfg.epsilon >= 0.0 && cfg.epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!("epsilon must be finite and nonnegative, got {}", cfg.epsilon)));
    }
    let (chain, q) = forcing::greedy_chain(g, set)?;
    let forces = chain.forces();
    let tau = chain.propagation_time() as i32;
    let delta = g.max_degree() as f64;
    let eps = cfg.epsilon;

    let run = |t: usize| -> Result<TrialOutcome> {
        let seed = trial_seed(cfg.seed, t as u64);
        let a = matrices::sample_with_null_vector(g, seed, cfg.sampler)?;
        let x = a.known_null().expect("sampler attaches a null vector").to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, u64::MAX));
        let mut x_hat = vec![0.0; g.order()];
        for &i in set {
            x_hat[i - 1] = x[i - 1] + if eps > 0.0 { rng.random_range(-eps..=eps) } else { 0.0 };
        }
        solve_in_place(&a, &forces, &mut x_hat)?;

        let kappa = a.kappa_prime();
        let mut out = TrialOutcome { violations: Vec::new(), thm16: None, thm52: None };
        let violation = |kind: &str, vertex: Option<usize>, observed: f64, bound: f64| Violation {
            kind: kind.into(),
            trial: Some(t),
            seed,
            vertex,
            observed,
            bound,
            matrix: a.to_json(),
        };
        let mut worst = 0.0f64;
        for k in g.vertices() {
            let err = (x[k - 1] - x_hat[k - 1]).abs();
            worst = worst.max(err);
            let qk = q[k - 1].eval(kappa);
            let b52 = qk * eps;
            let coarse = (kappa * delta).powi(chain.round_of(k) as i32);
            if !within(err, b52) {
                out.violations.push(violation("thm52", Some(k), err, b52));
            }
            if !within(qk, coarse) {
                out.violations.push(violation("ordering", Some(k), qk, coarse));
            }
            if b52 > 0.0 {
                out.thm52 = Some(out.thm52.map_or(err / b52, |r: f64| r.max(err / b52)));
            }
        }
        let b16 = (kappa * delta).powi(tau) * eps;
        if !within(worst, b16) {
            out.violations.push(violation("thm16", None, worst, b16));
        }
        if b16 > 0.0 {
            out.thm16 = Some(worst / b16);
        }
        Ok(out)
    };

    let outcomes: Vec<Result<TrialOutcome>> = with_threads(cfg.threads, || (0..cfg.trials).into_par_iter().map(run).collect())?;
    let mut report = VerifyReport {
        graph: describe(g),
        set: set.iter().copied().collect(),
        trials: cfg.trials,
        violations: Vec::new(),
        worst_slack: WorstSlack::default(),
        variance: None,
    };
    let max_opt = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    };
    for o in outcomes {
        let o = o?;
        report.violations.extend(o.violations);
        report.worst_slack.thm16 = max_opt(report.worst_slack.thm16, o.thm16);
        report.worst_slack.thm52 = max_opt(report.worst_slack.thm52, o.thm52);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceConfig {
    pub trials: usize,
    pub epsilon: f64,
    /// Seeds the matrix; per-trial noise uses sub-seeds of it.
    pub seed: u64,
    pub noise: NoiseDist,
    pub sampler: SamplerOptions,
    pub threads: Option<usize>,
}

impl Default for VarianceConfig {
    fn default() -> Self {
        VarianceConfig {
            trials: 10_000,
            epsilon: 1e-4,
            seed: 0,
            noise: NoiseDist::Uniform,
            sampler: SamplerOptions::default(),
            threads: None,
        }
    }
}

/// Monte Carlo check of the variance bound for one sampled matrix and chain.
///
/// Also probes each sensor with a unit error to read off `C_ik`, checks
/// `|C_ik| ≤ ([α_i]q_k)(κ′)`, checks that every trial's error equals
/// `Σ_i C_ik α_i`, and checks superposition on random probe pairs.
pub fn verify_variance(g: &Graph, chain: &ForcingChain, cfg: VarianceConfig) -> Result<VerifyReport> {
    if !(cfg.epsilon >= 0.0 && cfg.epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!("epsilon must be finite and nonnegative, got {}", cfg.epsilon)));
    }
    chain.validate(g)?;
    let set = chain.set().clone();
    let a = matrices::sample_with_null_vector(g, cfg.seed, cfg.sampler)?;
    check_chain(&a, chain)?;
    let x = a.known_null().expect("sampler attaches a null vector").to_vec();
    let forces = chain.forces();
    let n = g.order();
    let kappa = a.kappa_prime();
    let eps = cfg.epsilon;
    let alpha = errorvec::alpha_vector_of_chain(g, chain);
    let v_poly = errorvec::variance_vector_of_chain(g, chain);

    let errors_for = |noise: &BTreeMap<usize, f64>| -> Result<Vec<f64>> {
        let mut x_hat = vec![0.0; n];
        for &i in &set {
            x_hat[i - 1] = x[i - 1] + noise[&i];
        }
        solve_in_place(&a, &forces, &mut x_hat)?;
        Ok(x_hat.iter().zip(&x).map(|(h, v)| h - v).collect())
    };

    let mut violations = Vec::new();
    let violation = |kind: &str, trial: Option<usize>, vertex: Option<usize>, observed: f64, bound: f64| Violation {
        kind: kind.into(),
        trial,
        seed: cfg.seed,
        vertex,
        observed,
        bound,
        matrix: a.to_json(),
    };

    // Unit probes.
    let mut coefficients = vec![BTreeMap::new(); n];
    let mut probe_slack = None::<f64>;
    for &i in &set {
        let probe: BTreeMap<usize, f64> = set.iter().map(|&j| (j, if j == i { 1.0 } else { 0.0 })).collect();
        let c = errors_for(&probe)?;
        for k in 1..=n {
            let bound = alpha[k - 1].coeff(i).eval(kappa);
            let observed = c[k - 1].abs();
            if !within(observed, bound) {
                violations.push(violation("probe", None, Some(k), observed, bound));
            }
            if bound > 0.0 {
                probe_slack = Some(probe_slack.map_or(observed / bound, |r| r.max(observed / bound)));
            }
            coefficients[k - 1].insert(i, c[k - 1]);
        }
    }
    let predict = |noise: &BTreeMap<usize, f64>, k: usize| -> (f64, f64) {
        coefficients[k - 1].iter().fold((0.0, 0.0), |(s, m), (i, c)| (s + c * noise[i], m + (c * noise[i]).abs()))
    };

    // Superposition on random probe pairs.
    let mut superposition_residual = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, u64::MAX - 1));
    for _ in 0..8 {
        let p1: BTreeMap<usize, f64> = set.iter().map(|&i| (i, rng.random_range(-1.0..1.0))).collect();
        let p2: BTreeMap<usize, f64> = set.iter().map(|&i| (i, rng.random_range(-1.0..1.0))).collect();
        let sum: BTreeMap<usize, f64> = set.iter().map(|&i| (i, p1[&i] + p2[&i])).collect();
        let (e1, e2, e12) = (errors_for(&p1)?, errors_for(&p2)?, errors_for(&sum)?);
        for k in 0..n {
            let scale = e1[k].abs() + e2[k].abs() + ABS_SLACK;
            superposition_residual = superposition_residual.max((e12[k] - e1[k] - e2[k]).abs() / scale);
        }
    }
    if superposition_residual > 1e-8 {
        violations.push(violation("superposition", None, None, superposition_residual, 1e-8));
    }

    // Monte Carlo trials.
    let trial = |t: usize| -> Result<(Vec<f64>, f64, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, t as u64));
        let noise: BTreeMap<usize, f64> = set.iter().map(|&i| (i, cfg.noise.sample(&mut rng, eps))).collect();
        let e = errors_for(&noise)?;
        // Largest gap beyond the allowed `1e-8·Σ|C_ik α_i| + 1e-12`.
        let mut excess = f64::NEG_INFINITY;
        let mut gap = 0.0f64;
        for k in 1..=n {
            let (pred, mag) = predict(&noise, k);
            let d = (e[k - 1] - pred).abs();
            gap = gap.max(d);
            excess = excess.max(d - (1e-8 * mag + ABS_SLACK));
        }
        Ok((e, gap, excess))
    };
    let samples: Vec<Result<(Vec<f64>, f64, f64)>> =
        with_threads(cfg.threads, || (0..cfg.trials).into_par_iter().map(trial).collect())?;
    let mut sums = vec![0.0f64; n];
    let mut identity_residual = 0.0f64;
    let mut rows = Vec::with_capacity(cfg.trials);
    for (t, s) in samples.into_iter().enumerate() {
        let (e, gap, excess) = s?;
        identity_residual = identity_residual.max(gap);
        if excess > 0.0 {
            violations.push(violation("identity", Some(t), None, gap, gap - excess));
        }
        for k in 0..n {
            sums[k] += e[k];
        }
        rows.push(e);
    }

    let trials = cfg.trials as f64;
    let mut per_vertex = Vec::with_capacity(n);
    for k in 1..=n {
        let mean = if cfg.trials > 0 { sums[k - 1] / trials } else { 0.0 };
        let sample = if cfg.trials > 1 {
            rows.iter().map(|e| (e[k - 1] - mean).powi(2)).sum::<f64>() / (trials - 1.0)
        } else {
            0.0
        };
        let bound = v_poly.get(k).eval(kappa) * eps;
        let exact = coefficients[k - 1].values().map(|c| c * c).sum::<f64>() * eps;
        let mean_band = if cfg.trials > 0 { 4.0 * (bound / trials).sqrt() } else { f64::INFINITY };
        let z_mean = if exact > 0.0 && cfg.trials > 0 { mean / (exact / trials).sqrt() } else { 0.0 };
        if cfg.trials > 1 {
            if !within(mean.abs(), mean_band) {
                violations.push(violation("mean", None, Some(k), mean.abs(), mean_band));
            }
            let vbound = bound * (1.0 + 6.0 / trials.sqrt());
            if !within(sample, vbound) {
                violations.push(violation("variance", None, Some(k), sample, vbound));
            }
        }
        per_vertex.push(VertexStats { vertex: k, bound, sample, exact, mean, mean_band, z_mean });
    }

    Ok(VerifyReport {
        graph: describe(g),
        set: set.iter().copied().collect(),
        trials: cfg.trials,
        violations,
        worst_slack: WorstSlack { thm16: None, thm52: probe_slack },
        variance: Some(VarianceSection {
            noise: cfg.noise,
            epsilon: eps,
            kappa,
            chain: chain.clone(),
            per_vertex,
            coefficients,
            identity_residual,
            superposition_residual,
        }),
    })
}

/// Exact error growth on the doubling path matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TightnessReport {
    /// `|x_1 − x̂_1| / ε`, exact.
    pub observed_factor: BigRational,
    /// `q_1(κ′)` for the chain from `{n}`, with `κ′ = 2`.
    pub bound_factor: BigUint,
    pub error_vector: ErrorVec,
}

impl TightnessReport {
    pub fn ratio(&self) -> BigRational {
        self.observed_factor.clone() / BigRational::from_integer(self.bound_factor.clone().into())
    }
}

/// Seeds `path_counterexample(n)` at `{n}` with error exactly `+ε` and back-solves
/// in exact arithmetic. The observed factor is `2^{(n−1)/2}`.
pub fn path_tightness(n: usize) -> Result<TightnessReport> {
    let a: PatternMatrix<BigRational> = matrices::path_counterexample(n)?;
    let set: VertexSet = [n].into_iter().collect();
    let (chain, q) = forcing::greedy_chain(a.graph(), &set)?;
    let x = a.known_null().expect("constructor attaches a null vector").to_vec();
    let eps = matrices::rational(1, 1000);
    let m = Measurement::from_truth(&x, &set, eps.clone(), |_| eps.clone())?;
    let r = back_solve(&a, &chain, &m)?;
    let observed_factor = (x[0].clone() - r.x_hat[0].clone()).abs() / eps;
    let kappa = BigUint::from(2u32);
    Ok(TightnessReport {
        bound_factor: q[0].eval_biguint(&kappa),
        observed_factor,
        error_vector: errorvec::PolyVec::from_vec(q),
    })
}

/// `kn_counterexample(n, δ)` read on every vertex but 1, each reading off by
/// `+ε`; returns `|x_1 − x̂_1|` in exact arithmetic, which is `(n−1)ε/δ`.
pub fn kn_tightness(n: usize, delta: &BigRational, eps: &BigRational) -> Result<BigRational> {
    let a = matrices::kn_counterexample(n, delta.clone())?;
    let set: VertexSet = (2..=n).collect();
    let (chain, _) = forcing::greedy_chain(a.graph(), &set)?;
    let x = a.known_null().expect("constructor attaches a null vector").to_vec();
    let m = Measurement::from_truth(&x, &set, eps.clone(), |_| eps.clone())?;
    let r = back_solve(&a, &chain, &m)?;
    Ok((x[0].clone() - r.x_hat[0].clone()).abs())
}
