//! Matrices whose off-diagonal support is exactly the edge set of a graph.
//!
//! [`PatternMatrix`] is generic over the scalar so the same constructors and
//! the back-solve run in `f64` for sampling and in exact rationals where an
//! identity has to hold exactly.

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::{self, SearchLimits};
use crate::gf2::Gf2Matrix;
use crate::graph::{Graph, VertexSet};

/// Field-like scalar used by matrices and the back-solve. Implemented by
/// `f64` and `BigRational`.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + ToPrimitive {
    /// JSON form: IEEE doubles stay numbers, exact values become `"p/q"` strings.
    fn to_json(&self) -> serde_json::Value;
}

impl Scalar for f64 {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

impl Scalar for BigRational {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A square matrix conforming to `S_F(G)`: `A_ij ≠ 0` iff `{i,j}` is an edge,
/// for `i ≠ j`; the diagonal is free.
#[derive(Clone, PartialEq)]
pub struct PatternMatrix<T = f64> {
    graph: Graph,
    entries: Vec<T>,
    known_null: Option<Vec<T>>,
}

impl<T: Scalar> PatternMatrix<T> {
    /// `rows` is row-major, `n × n`. Fails if the support does not match `g`.
    pub fn new(graph: Graph, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = graph.order();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("expected a {n}x{n} matrix")));
        }
        let m = PatternMatrix { graph, entries: rows.into_iter().flatten().collect(), known_null: None };
        m.check_pattern()?;
        Ok(m)
    }

    /// Builds the matrix from off-diagonal weights and picks the diagonal so
    /// that `A·x = 0`: `A_ii = −(Σ_{j≠i} A_ij x_j) / x_i`. Every `x_i` must be
    /// nonzero and every edge weight nonzero.
    pub fn with_null_vector<F>(graph: Graph, mut weight: F, x: Vec<T>) -> Result<Self>
    where
        F: FnMut(usize, usize) -> T,
    {
        let n = graph.order();
        if x.len() != n {
            return Err(Error::Dimension(format!("null vector has {} entries, expected {n}", x.len())));
        }
        if x.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParameter("null vector entries must be nonzero".into()));
        }
        let mut entries = vec![T::zero(); n * n];
        for i in 1..=n {
            for &j in graph.neighbors(i) {
                entries[(i - 1) * n + (j - 1)] = weight(i, j);
            }
        }
        for i in 1..=n {
            let off: T = graph
                .neighbors(i)
                .iter()
                .fold(T::zero(), |acc, &j| acc + entries[(i - 1) * n + (j - 1)].clone() * x[j - 1].clone());
            entries[(i - 1) * n + (i - 1)] = -off / x[i - 1].clone();
        }
        let m = PatternMatrix { graph, entries, known_null: Some(x) };
        m.check_pattern()?;
        Ok(m)
    }

    fn check_pattern(&self) -> Result<()> {
        for i in 1..=self.n() {
            for j in 1..=self.n() {
                if i != j && self.graph.has_edge(i, j) == self.get(i, j).is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "entry ({i},{j}) does not match the graph pattern"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    /// 1-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[(i - 1) * self.n() + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.n();
        &self.entries[(i - 1) * n..i * n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (1..=self.n()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn known_null(&self) -> Option<&[T]> {
        self.known_null.as_deref()
    }

    /// Attaches a null vector after checking `A·x = 0` exactly.
    pub fn set_known_null(&mut self, x: Vec<T>) -> Result<()> {
        if self.mul_vec(&x)?.iter().any(|v| !v.is_zero()) {
            return Err(Error::InvalidParameter("vector is not in the null space".into()));
        }
        self.known_null = Some(x);
        Ok(())
    }

    /// Whether the off-diagonal support matches the graph.
    pub fn conforms(&self) -> bool {
        self.check_pattern().is_ok()
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n() {
            return Err(Error::Dimension(format!("vector has {} entries, expected {}", x.len(), self.n())));
        }
        Ok((1..=self.n())
            .map(|i| self.row(i).iter().zip(x).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }

    /// Multiplicative row-support spread `κ′`: the largest `|A_ij / A_ik|`
    /// over nonzero entries sharing a row; `1` when no row has an entry.
    pub fn kappa_prime(&self) -> T {
        kappa_prime_of_rows((1..=self.n()).map(|i| self.row(i)))
    }

    /// Multiplies every entry (and nothing else) by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        PatternMatrix {
            graph: self.graph.clone(),
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
            known_null: self.known_null.clone(),
        }
    }

    pub fn map<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> PatternMatrix<U> {
        PatternMatrix {
            graph: self.graph.clone(),
            entries: self.entries.iter().map(&f).collect(),
            known_null: self.known_null.as_ref().map(|x| x.iter().map(&f).collect()),
        }
    }

    /// `{"n": …, "rows": [[…]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> =
            (1..=self.n()).map(|i| self.row(i).iter().map(Scalar::to_json).collect()).collect();
        serde_json::json!({ "n": self.n(), "rows": rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n() {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl PatternMatrix<BigRational> {
    pub fn to_f64(&self) -> PatternMatrix<f64> {
        self.map(|a| a.to_f64().expect("rational fits in f64"))
    }
}

impl PatternMatrix<f64> {
    /// `max_i |(A·x)_i| / max_i Σ_j |A_ij|·|x_j|`.
    pub fn relative_residual(&self, x: &[f64]) -> Result<f64> {
        let ax = self.mul_vec(x)?;
        let num = ax.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let den = (1..=self.n())
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a.abs() * b.abs()).sum::<f64>())
            .fold(0.0f64, f64::max);
        Ok(if den == 0.0 { num } else { num / den })
    }
}

impl<T: Scalar> Debug for PatternMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PatternMatrix").field("rows", &self.rows()).field("known_null", &self.known_null).finish()
    }
}

impl<T: Scalar> Serialize for PatternMatrix<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

pub fn kappa_prime_of_rows<'a, T: Scalar + 'a, I>(rows: I) -> T
where
    I: IntoIterator<Item = &'a [T]>,
{
    let mut best = T::one();
    for row in rows {
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for a in row.iter().filter(|a| !a.is_zero()) {
            let m = a.abs();
            if lo.as_ref().is_none_or(|l| m < *l) {
                lo = Some(m.clone());
            }
            if hi.as_ref().is_none_or(|h| m > *h) {
                hi = Some(m);
            }
        }
        if let (Some(lo), Some(hi)) = (lo, hi) {
            let r = hi / lo;
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// Options for [`sample_with_null_vector`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerOptions {
    /// Off-diagonal magnitudes are uniform in `[lo, hi]` with a random sign.
    pub weight_range: (f64, f64),
    /// Mirror `A_ij` into `A_ji`.
    pub symmetric: bool,
}

impl Default for SamplerOptions {
    fn default() -> Self {
        SamplerOptions { weight_range: (0.5, 2.0), symmetric: false }
    }
}

/// A random matrix in `S_ℝ(G)` with a known null vector `x`, `|x_i| ∈ [1, 2]`.
/// The same seed always gives the same matrix.
pub fn sample_with_null_vector(g: &Graph, seed: u64, opts: SamplerOptions) -> Result<PatternMatrix<f64>> {
    let (lo, hi) = opts.weight_range;
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return Err(Error::InvalidParameter(format!("bad weight range [{lo}, {hi}]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let signed = |rng: &mut ChaCha8Rng, a: f64, b: f64| {
        let m = if a == b { a } else { rng.random_range(a..=b) };
        if rng.random_bool(0.5) {
            m
        } else {
            -m
        }
    };
    let n = g.order();
    let x: Vec<f64> = (0..n).map(|_| signed(&mut rng, 1.0, 2.0)).collect();
    let mut w = vec![0.0; n * n];
    for (u, v) in g.edges() {
        let a = signed(&mut rng, lo, hi);
        let b = if opts.symmetric { a } else { signed(&mut rng, lo, hi) };
        w[(u - 1) * n + (v - 1)] = a;
        w[(v - 1) * n + (u - 1)] = b;
    }
    PatternMatrix::with_null_vector(g.clone(), |i, j| w[(i - 1) * n + (j - 1)], x)
}

/// A witness that a set is not zero forcing: a matrix whose columns on
/// `Y = V ∖ derived set` sum to zero in every row.
#[derive(Debug, Clone)]
pub struct Witness {
    pub matrix: PatternMatrix<BigRational>,
    /// The vertices left uncolored by the closure.
    pub uncolored: VertexSet,
}

impl Witness {
    /// `A_{:,Y} · 1`, which is the zero vector for a valid witness.
    pub fn column_sums(&self) -> Vec<BigRational> {
        (1..=self.matrix.n())
            .map(|i| self.uncolored.iter().fold(BigRational::zero(), |acc, &y| acc + self.matrix.get(i, y)))
            .collect()
    }

    /// Rank of `A_{:,Y}` by exact elimination.
    pub fn uncolored_rank(&self) -> usize {
        let cols: Vec<usize> = self.uncolored.iter().copied().collect();
        let sub: Vec<Vec<BigRational>> = (1..=self.matrix.n())
            .map(|i| cols.iter().map(|&c| self.matrix.get(i, c).clone()).collect())
            .collect();
        rank(&sub)
    }
}

/// Builds a witness matrix for a set that is not zero forcing.
///
/// Rows in `Y` carry the Laplacian of the subgraph induced on `Y`. A row in
/// the derived set `X` with `k ≥ 2` neighbors in `Y` gets `1, …, 1, x_{k−1},
/// −(partial sum)` on those columns, where `x_{k−1}` is `1` unless that would
/// make the partial sum zero, in which case `2`. Entries in `X` columns are
/// `1` on edges and `0` on the diagonal.
pub fn witness_matrix(g: &Graph, set: &VertexSet) -> Result<Witness> {
    let trace = forcing::closure(g, set)?;
    if trace.is_complete() {
        return Err(Error::IsZeroForcing(set.iter().copied().collect()));
    }
    let derived = trace.derived_set();
    let uncolored: VertexSet = g.vertices().filter(|v| !derived.contains(v)).collect();
    let n = g.order();
    let one = BigRational::one();
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for i in g.vertices() {
        for &j in g.neighbors(i) {
            if !uncolored.contains(&j) {
                rows[i - 1][j - 1] = one.clone();
            }
        }
        let y_nbrs: Vec<usize> = g.neighbors(i).iter().copied().filter(|j| uncolored.contains(j)).collect();
        if uncolored.contains(&i) {
            for &j in &y_nbrs {
                rows[i - 1][j - 1] = -one.clone();
            }
            rows[i - 1][i - 1] = BigRational::from_integer(BigInt::from(y_nbrs.len()));
        } else if !y_nbrs.is_empty() {
            let k = y_nbrs.len();
            // The closure stopped, so a colored vertex never sees exactly one
            // uncolored neighbor.
            debug_assert!(k >= 2);
            let mut partial = BigRational::zero();
            for &j in &y_nbrs[..k - 2] {
                rows[i - 1][j - 1] = one.clone();
                partial += &one;
            }
            let mut next = one.clone();
            if (&partial + &next).is_zero() {
                next = &one + &one;
            }
            partial += &next;
            rows[i - 1][y_nbrs[k - 2] - 1] = next;
            rows[i - 1][y_nbrs[k - 1] - 1] = -partial;
        }
    }
    let matrix = PatternMatrix::new(g.clone(), rows)?;
    Ok(Witness { matrix, uncolored })
}

/// The `K_n` construction where vertex 1 couples to everything with weight
/// `δ`: `A_1k = A_k1 = δ`, `A_11 = δ²`, every other entry `1`. Every row is a
/// multiple of `(δ, 1, …, 1)`, so `x = (−(n−1)/δ, 1, …, 1)` is a null vector.
pub fn kn_counterexample<T: Scalar>(n: usize, delta: T) -> Result<PatternMatrix<T>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("kn_counterexample needs n >= 2, got {n}")));
    }
    if delta <= T::zero() {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let g = Graph::complete(n);
    let rows: Vec<Vec<T>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match (i == 1, j == 1) {
                    (true, true) => delta.clone() * delta.clone(),
                    (true, false) | (false, true) => delta.clone(),
                    (false, false) => T::one(),
                })
                .collect()
        })
        .collect();
    let mut m = PatternMatrix::new(g, rows)?;
    let others = (1..n).fold(T::zero(), |acc, _| acc + T::one());
    let mut x = vec![T::one(); n];
    x[0] = -others / delta;
    m.known_null = Some(x);
    Ok(m)
}

/// The tridiagonal path matrix with `A_ij = 2^{min(i,j)}` for `|i − j| = 1`
/// and zero diagonal (`n` odd). Its null vector is `v_i = (−2)^{(n−i)/2}` on odd
/// `i` and `0` on even `i`.
pub fn path_counterexample<T: Scalar>(n: usize) -> Result<PatternMatrix<T>> {
    if n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("path_counterexample needs odd n, got {n}")));
    }
    let two = T::one() + T::one();
    let pow = |e: usize| (0..e).fold(T::one(), |acc, _| acc * two.clone());
    let mut rows = vec![vec![T::zero(); n]; n];
    for i in 1..n {
        rows[i - 1][i] = pow(i);
        rows[i][i - 1] = pow(i);
    }
    let mut m = PatternMatrix::new(Graph::path(n), rows)?;
    let v = (1..=n)
        .map(|i| {
            if i % 2 == 0 {
                T::zero()
            } else {
                let e = (n - i) / 2;
                let mag = pow(e);
                if e % 2 == 0 {
                    mag
                } else {
                    -mag
                }
            }
        })
        .collect();
    m.set_known_null(v)?;
    Ok(m)
}

/// Rank by exact Gaussian elimination. Intended for exact scalars; with
/// floats any nonzero rounding residue counts as a pivot.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / pivot.clone();
                for j in c..ncols {
                    let delta = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Outcome of the GF(2) counterexample on `K_6` minus `{1,5}` and `{2,6}`.
#[derive(Debug, Clone, Serialize)]
pub struct F2Report {
    /// `det A[{4,5,6},{1,2,3}]` over GF(2).
    pub minor_nonsingular: bool,
    /// Rank of columns `{1,2,3}` for each of the 64 diagonal assignments,
    /// indexed by the bitmask `x_1 + 2 x_2 + … + 32 x_6`.
    pub column_ranks: Vec<usize>,
    pub independent_for_all_diagonals: bool,
    pub set_456_is_zero_forcing: bool,
    pub zero_forcing_number: usize,
}

impl F2Report {
    /// Whether everything lines up: columns always independent over GF(2),
    /// yet the complement `{4,5,6}` does not force.
    pub fn holds(&self) -> bool {
        self.minor_nonsingular
            && self.independent_for_all_diagonals
            && !self.set_456_is_zero_forcing
            && self.zero_forcing_number == 4
    }
}

pub fn f2_counterexample_check() -> Result<F2Report> {
    let g = Graph::complete_minus_two_disjoint_edges(6)?;
    let build = |mask: u32| -> Result<Gf2Matrix> {
        let mut m = Gf2Matrix::zeros(6, 6)?;
        for i in 1..=6 {
            for j in 1..=6 {
                let bit = if i == j { mask >> (i - 1) & 1 == 1 } else { g.has_edge(i, j) };
                m.set(i - 1, j - 1, bit);
            }
        }
        Ok(m)
    };
    let minor = build(0)?.select(&[3, 4, 5], &[0, 1, 2]);
    let column_ranks = (0..64u32)
        .map(|mask| Ok(build(mask)?.select(&[0, 1, 2, 3, 4, 5], &[0, 1, 2]).rank()))
        .collect::<Result<Vec<_>>>()?;
    let independent_for_all_diagonals = column_ranks.iter().all(|&r| r == 3);
    let set_456: VertexSet = [4, 5, 6].into_iter().collect();
    Ok(F2Report {
        minor_nonsingular: minor.det()?,
        column_ranks,
        independent_for_all_diagonals,
        set_456_is_zero_forcing: forcing::is_zero_forcing_set(&g, &set_456)?,
        zero_forcing_number: forcing::minimum_zero_forcing_sets(&g, SearchLimits::default())?.zero_forcing_number,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn kappa_examples() {
        let zero = PatternMatrix::new(Graph::empty(3).unwrap(), vec![vec![0.0; 3]; 3]).unwrap();
        assert_eq!(zero.kappa_prime(), 1.0);

        let rows: Vec<&[f64]> = vec![&[1.0, 2.0, 0.0, 4.0], &[0.0, 3.0, 0.0, 0.0], &[0.0, 0.0, -7.0, 0.0]];
        assert_eq!(kappa_prime_of_rows(rows), 4.0);

        let g = Graph::path(4);
        let rows = vec![
            vec![1.0, -1.0, 0.0, 0.0],
            vec![1.0, 0.0, 1.0, 0.0],
            vec![0.0, -1.0, 1.0, 1.0],
            vec![0.0, 0.0, 1.0, -1.0],
        ];
        assert_eq!(PatternMatrix::new(g, rows).unwrap().kappa_prime(), 1.0);
    }

    #[test]
    fn pattern_is_enforced() {
        let g = Graph::path(2);
        assert!(PatternMatrix::new(g.clone(), vec![vec![0.0, 0.0], vec![1.0, 0.0]]).is_err());
        assert!(PatternMatrix::new(Graph::empty(2).unwrap(), vec![vec![0.0, 1.0], vec![0.0, 0.0]]).is_err());
        assert!(PatternMatrix::new(g, vec![vec![5.0, 1.0], vec![2.0, 0.0]]).is_ok());
    }

    #[test]
    fn two_by_two_null_vector() {
        let m = PatternMatrix::with_null_vector(Graph::path(2), |_, _| 1.0, vec![1.0, -1.0]).unwrap();
        assert_eq!(m.get(1, 1), &1.0);
        assert_eq!(m.get(2, 2), &1.0);
        assert_eq!(m.mul_vec(&[1.0, -1.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn sampler_is_deterministic_and_accurate() {
        let g = Graph::fig1_grid9();
        let a = sample_with_null_vector(&g, 7, SamplerOptions::default()).unwrap();
        let b = sample_with_null_vector(&g, 7, SamplerOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_with_null_vector(&g, 8, SamplerOptions::default()).unwrap());
        for seed in 0..100 {
            let m = sample_with_null_vector(&g, seed, SamplerOptions::default()).unwrap();
            assert!(m.conforms());
            let x = m.known_null().unwrap();
            assert!(x.iter().all(|v| (1.0..=2.0).contains(&v.abs())));
            assert!(m.relative_residual(x).unwrap() < 1e-10);
        }
    }

    #[test]
    fn symmetric_flag() {
        let g = Graph::fig3_fork();
        let opts = SamplerOptions { symmetric: true, ..Default::default() };
        let m = sample_with_null_vector(&g, 3, opts).unwrap();
        for (u, v) in g.edges() {
            assert_eq!(m.get(u, v), m.get(v, u));
        }
        assert!(sample_with_null_vector(&g, 3, SamplerOptions { weight_range: (0.0, 1.0), symmetric: false }).is_err());
    }

    #[test]
    fn kappa_is_scale_invariant() {
        let g = Graph::fig1_grid9();
        for seed in 0..20 {
            let m = sample_with_null_vector(&g, seed, SamplerOptions::default()).unwrap();
            let k = m.kappa_prime();
            assert!(k >= 1.0);
            for c in [-3.0, 0.5] {
                let ks = m.scaled(&c).kappa_prime();
                assert!((ks - k).abs() <= 1e-12 * k, "{ks} vs {k}");
            }
        }
    }

    #[test]
    fn witness_on_p3() {
        let w = witness_matrix(&Graph::path(3), &set(&[2])).unwrap();
        assert_eq!(w.uncolored, set(&[1, 3]));
        assert!(w.column_sums().iter().all(Zero::is_zero));
        assert!(w.matrix.conforms());
        assert!(w.uncolored_rank() < 2);
    }

    #[test]
    fn witness_on_k6_minus_edges() {
        let g = Graph::complete_minus_two_disjoint_edges(6).unwrap();
        let w = witness_matrix(&g, &set(&[4, 5, 6])).unwrap();
        assert!(!w.uncolored.is_empty());
        assert!(w.column_sums().iter().all(Zero::is_zero));
        assert!(w.uncolored_rank() < w.uncolored.len());
        // Nullity at least one: the indicator of Y is a null vector.
        let mut y = vec![BigRational::zero(); 6];
        for &v in &w.uncolored {
            y[v - 1] = BigRational::one();
        }
        assert!(w.matrix.mul_vec(&y).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn witness_refuses_zero_forcing_sets() {
        assert!(matches!(witness_matrix(&Graph::path(3), &set(&[1])), Err(Error::IsZeroForcing(_))));
    }

    #[test]
    fn kn_construction() {
        let m = kn_counterexample(4, 0.1).unwrap();
        assert!((m.kappa_prime() - 10.0).abs() < 1e-12);
        let exact = kn_counterexample(4, rational(1, 10)).unwrap();
        assert_eq!(exact.kappa_prime(), rational(10, 1));
        let x = exact.known_null().unwrap().to_vec();
        assert!(exact.mul_vec(&x).unwrap().iter().all(Zero::is_zero));
        let flat = kn_counterexample(5, 1.0).unwrap();
        assert!(flat.rows().iter().flatten().all(|&a| a == 1.0));
        assert_eq!(flat.kappa_prime(), 1.0);
        assert!(kn_counterexample(1, 1.0).is_err());
        assert!(kn_counterexample(3, 0.0).is_err());
    }

    #[test]
    fn path_construction() {
        let m: PatternMatrix<BigRational> = path_counterexample(5).unwrap();
        let v: Vec<BigRational> = [4, 0, -2, 0, 1].iter().map(|&a| rational(a, 1)).collect();
        assert_eq!(m.known_null().unwrap(), &v[..]);
        assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        for n in [3, 5, 7, 9, 11] {
            let m: PatternMatrix<BigRational> = path_counterexample(n).unwrap();
            assert_eq!(rank(&m.rows()), n - 1);
            assert_eq!(m.kappa_prime(), rational(2, 1));
        }
        assert!(path_counterexample::<f64>(4).is_err());
    }

    #[test]
    fn f2_report() {
        let r = f2_counterexample_check().unwrap();
        assert!(r.minor_nonsingular);
        assert_eq!(r.column_ranks.len(), 64);
        assert!(r.column_ranks.iter().all(|&x| x == 3));
        assert!(!r.set_456_is_zero_forcing);
        assert_eq!(r.zero_forcing_number, 4);
        assert!(r.holds());
    }

    #[test]
    fn json_and_csv() {
        let m: PatternMatrix<BigRational> = path_counterexample(3).unwrap();
        assert_eq!(m.to_json().to_string(), r#"{"n":3,"rows":[["0","2","0"],["2","0","4"],["0","4","0"]]}"#);
        assert_eq!(m.to_csv(), "0,2,0\n2,0,4\n0,4,0\n");
        let f = m.to_f64();
        assert_eq!(f.to_json().to_string(), r#"{"n":3,"rows":[[0.0,2.0,0.0],[2.0,0.0,4.0],[0.0,4.0,0.0]]}"#);
        let k = kn_counterexample(2, rational(1, 2)).unwrap();
        assert_eq!(k.to_json()["rows"][0][0], "1/4");
    }
}
