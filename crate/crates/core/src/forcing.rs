//! The zero forcing color change rule.
//!
//! A colored vertex with exactly one uncolored neighbor forces (colors) that
//! neighbor. Rounds are synchronized: every force legal at the start of a round
//! happens in that round.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::Poly;

/// The colored sets `S = S_0 ⊆ S_1 ⊆ … ⊆ S_k` of a synchronized run, ending
/// at the first fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringTrace {
    rounds: Vec<VertexSet>,
    order: usize,
}

impl ColoringTrace {
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    pub fn derived_set(&self) -> &VertexSet {
        self.rounds.last().expect("trace has at least the initial set")
    }

    /// Number of rounds that colored something.
    pub fn len(&self) -> usize {
        self.rounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_complete(&self) -> bool {
        self.derived_set().len() == self.order
    }

    /// Round at which `v` became colored, or `None` if it never does.
    pub fn round_of(&self, v: usize) -> Option<usize> {
        self.rounds.iter().position(|r| r.contains(&v))
    }
}

/// Runs the color change rule from `set` until nothing more can be forced.
pub fn closure(g: &Graph, set: &VertexSet) -> Result<ColoringTrace> {
    g.check_set(set)?;
    let n = g.order();
    let mut colored = vec![false; n + 1];
    for &v in set {
        colored[v] = true;
    }
    let mut uncolored_deg: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { g.neighbors(v).iter().filter(|&&u| !colored[u]).count() })
        .collect();
    let mut rounds = vec![set.clone()];
    loop {
        let mut newly = VertexSet::new();
        for u in g.vertices() {
            if colored[u] && uncolored_deg[u] == 1 {
                let v = *g.neighbors(u).iter().find(|&&v| !colored[v]).expect("count is one");
                newly.insert(v);
            }
        }
        if newly.is_empty() {
            break;
        }
        for &v in &newly {
            colored[v] = true;
            for &u in g.neighbors(v) {
                uncolored_deg[u] -= 1;
            }
        }
        let mut next = rounds.last().unwrap().clone();
        next.extend(newly);
        rounds.push(next);
    }
    Ok(ColoringTrace { rounds, order: n })
}

pub fn is_zero_forcing_set(g: &Graph, set: &VertexSet) -> Result<bool> {
    Ok(closure(g, set)?.is_complete())
}

pub fn propagation_time(g: &Graph, set: &VertexSet) -> Result<usize> {
    let trace = closure(g, set)?;
    if !trace.is_complete() {
        return Err(Error::NotZeroForcing(set.iter().copied().collect()));
    }
    Ok(trace.len())
}

/// Caps for [`minimum_zero_forcing_sets`]. Exceeding either is an error, never
/// a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    /// Maximum number of candidate sets whose closure is evaluated.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: 20, max_nodes: 50_000_000 }
    }
}

/// `Z(G)` together with every zero forcing set of that size, in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumSets {
    pub zero_forcing_number: usize,
    pub sets: Vec<VertexSet>,
}

pub fn minimum_zero_forcing_sets(g: &Graph, limits: SearchLimits) -> Result<MinimumSets> {
    let n = g.order();
    if n > limits.max_vertices {
        return Err(Error::SearchTooLarge(format!(
            "{n} vertices exceeds the cap of {}",
            limits.max_vertices
        )));
    }
    let mut fast = FastClosure::new(g);
    let mut nodes = 0u64;
    for k in 1..=n {
        let mut sets = Vec::new();
        let mut combo: Vec<usize> = (1..=k).collect();
        loop {
            nodes += 1;
            if nodes > limits.max_nodes {
                return Err(Error::SearchTooLarge(format!(
                    "more than {} candidate sets examined",
                    limits.max_nodes
                )));
            }
            if fast.forces_all(&combo) {
                sets.push(combo.iter().copied().collect());
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        if !sets.is_empty() {
            return Ok(MinimumSets { zero_forcing_number: k, sets });
        }
    }
    unreachable!("V(G) is always a zero forcing set")
}

/// Advances a strictly increasing k-subset of `1..=n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - 1 - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Reusable buffers for repeated derived-set checks.
struct FastClosure<'g> {
    g: &'g Graph,
    colored: Vec<bool>,
    uncolored_deg: Vec<usize>,
    queue: Vec<usize>,
}

impl<'g> FastClosure<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        FastClosure { g, colored: vec![false; n + 1], uncolored_deg: vec![0; n + 1], queue: Vec::new() }
    }

    fn forces_all(&mut self, set: &[usize]) -> bool {
        let g = self.g;
        self.colored.iter_mut().for_each(|c| *c = false);
        for &v in set {
            self.colored[v] = true;
        }
        for v in g.vertices() {
            self.uncolored_deg[v] = g.neighbors(v).iter().filter(|&&u| !self.colored[u]).count();
        }
        self.queue.clear();
        self.queue.extend(set.iter().copied().filter(|&v| self.uncolored_deg[v] == 1));
        let mut count = set.len();
        while let Some(u) = self.queue.pop() {
            if self.uncolored_deg[u] != 1 {
                continue;
            }
            let v = match g.neighbors(u).iter().find(|&&v| !self.colored[v]) {
                Some(&v) => v,
                None => continue,
            };
            self.colored[v] = true;
            count += 1;
            for &w in g.neighbors(v) {
                self.uncolored_deg[w] -= 1;
                if self.colored[w] && self.uncolored_deg[w] == 1 {
                    self.queue.push(w);
                }
            }
            if self.uncolored_deg[v] == 1 {
                self.queue.push(v);
            }
        }
        count == g.order()
    }
}

/// One force `by → on`, performed at `round`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    pub by: usize,
    pub on: usize,
    pub round: usize,
}

/// Who forces whom, starting from a zero forcing set.
///
/// Identity is the forcer map alone; rounds are always the earliest legal
/// rounds for that map, so two chains with the same forcers compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ForcingChain {
    set: VertexSet,
    /// `forcer[k - 1]` forces `k`; `None` exactly on the initial set.
    forcer: Vec<Option<usize>>,
    round: Vec<usize>,
}

impl ForcingChain {
    /// Validates a forcer map and assigns earliest legal rounds.
    ///
    /// `forcer` is indexed by `label - 1`. It must be `None` exactly on `set`,
    /// name a neighbor otherwise, use each forcer at most once and be
    /// realizable by some legal sequence of single forces.
    pub fn from_forcers(g: &Graph, set: &VertexSet, forcer: Vec<Option<usize>>) -> Result<Self> {
        g.check_set(set)?;
        let n = g.order();
        if forcer.len() != n {
            return Err(Error::InvalidChain(format!("forcer map has {} entries, expected {n}", forcer.len())));
        }
        let mut used = vec![false; n + 1];
        for k in g.vertices() {
            match (set.contains(&k), forcer[k - 1]) {
                (true, Some(i)) => {
                    return Err(Error::InvalidChain(format!("{k} is in the initial set but forced by {i}")))
                }
                (false, None) => return Err(Error::InvalidChain(format!("{k} has no forcer"))),
                (false, Some(i)) => {
                    if !g.has_edge(i, k) {
                        return Err(Error::InvalidChain(format!("{i} -> {k} is not an edge")));
                    }
                    if std::mem::replace(&mut used[i], true) {
                        return Err(Error::InvalidChain(format!("{i} forces more than one vertex")));
                    }
                }
                (true, None) => {}
            }
        }
        // Realize: a designated force stays legal once it becomes legal, so
        // applying them greedily succeeds iff some order does.
        let mut round = vec![usize::MAX; n];
        for &v in set {
            round[v - 1] = 0;
        }
        let mut pending: Vec<usize> = g.vertices().filter(|v| !set.contains(v)).collect();
        while !pending.is_empty() {
            let before = pending.len();
            pending.retain(|&k| {
                let i = forcer[k - 1].expect("checked above");
                let deps = g.closed_neighbors(i);
                let ready = deps.iter().filter(|&&j| j != k).all(|&j| round[j - 1] != usize::MAX);
                if ready {
                    let r = deps.iter().filter(|&&j| j != k).map(|&j| round[j - 1]).max().unwrap_or(0);
                    round[k - 1] = r + 1;
                }
                !ready
            });
            if pending.len() == before {
                return Err(Error::InvalidChain(format!(
                    "forces on {pending:?} can never become legal"
                )));
            }
        }
        Ok(ForcingChain { set: set.clone(), forcer, round })
    }

    /// Builds a chain from explicit `(by, on)` pairs.
    pub fn from_forces(g: &Graph, set: &VertexSet, forces: &[(usize, usize)]) -> Result<Self> {
        let mut forcer = vec![None; g.order()];
        for &(by, on) in forces {
            if on == 0 || on > g.order() {
                return Err(Error::VertexOutOfRange { vertex: on, n: g.order() });
            }
            if forcer[on - 1].replace(by).is_some() {
                return Err(Error::InvalidChain(format!("{on} is forced twice")));
            }
        }
        Self::from_forcers(g, set, forcer)
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.forcer.len()
    }

    pub fn forcer_of(&self, k: usize) -> Option<usize> {
        self.forcer[k - 1]
    }

    pub fn forcers(&self) -> &[Option<usize>] {
        &self.forcer
    }

    pub fn round_of(&self, k: usize) -> usize {
        self.round[k - 1]
    }

    pub fn propagation_time(&self) -> usize {
        self.round.iter().copied().max().unwrap_or(0)
    }

    /// Forces sorted by `(round, on)`, which is a legal replay order.
    pub fn forces(&self) -> Vec<Force> {
        let mut out: Vec<Force> = self
            .forcer
            .iter()
            .enumerate()
            .filter_map(|(idx, f)| f.map(|by| Force { by, on: idx + 1, round: self.round[idx] }))
            .collect();
        out.sort_by_key(|f| (f.round, f.on));
        out
    }

    /// Replays the forces in round order against `g` and checks that each is
    /// legal and that forcer edges form disjoint paths starting in the set.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut colored_at = vec![None; n + 1];
        for &v in &self.set {
            colored_at[v] = Some(0);
        }
        let mut out_deg = vec![0usize; n + 1];
        for f in self.forces() {
            if colored_at[f.on].is_some() {
                return Err(Error::InvalidChain(format!("{} colored twice", f.on)));
            }
            for j in g.closed_neighbors(f.by) {
                if j == f.on {
                    continue;
                }
                match colored_at[j] {
                    Some(r) if r < f.round => {}
                    _ => {
                        return Err(Error::InvalidChain(format!(
                            "{} -> {} at round {} but {j} is not yet colored",
                            f.by, f.on, f.round
                        )))
                    }
                }
            }
            out_deg[f.by] += 1;
            colored_at[f.on] = Some(f.round);
        }
        if out_deg.iter().any(|&d| d > 1) {
            return Err(Error::InvalidChain("a vertex forces twice".into()));
        }
        if colored_at[1..].iter().any(Option::is_none) {
            return Err(Error::InvalidChain("chain does not cover V(G)".into()));
        }
        Ok(())
    }

    /// The forcing paths, each starting at a member of the initial set.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut next = vec![None; self.order() + 1];
        for (idx, f) in self.forcer.iter().enumerate() {
            if let Some(by) = f {
                next[*by] = Some(idx + 1);
            }
        }
        self.set
            .iter()
            .map(|&s| {
                let mut path = vec![s];
                let mut cur = s;
                while let Some(k) = next[cur] {
                    path.push(k);
                    cur = k;
                }
                path
            })
            .collect()
    }
}

impl fmt::Debug for ForcingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forces: Vec<String> =
            self.forces().iter().map(|x| format!("{}->{}@{}", x.by, x.on, x.round)).collect();
        f.debug_struct("ForcingChain").field("set", &self.set).field("forces", &forces).finish()
    }
}

/// `{"S":[...],"forces":[{"by":i,"on":k,"round":r},...]}`.
impl Serialize for ForcingChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ForcingChain", 2)?;
        st.serialize_field("S", &self.set)?;
        st.serialize_field("forces", &self.forces())?;
        st.end()
    }
}

/// Every distinct realizable forcer map for `set`, sorted by forcer map.
///
/// Fails with [`Error::ChainLimitExceeded`] as soon as more than `limit`
/// chains exist, so a returned list is always complete.
pub fn enumerate_forcing_chains(g: &Graph, set: &VertexSet, limit: usize) -> Result<Vec<ForcingChain>> {
    if !is_zero_forcing_set(g, set)? {
        return Err(Error::NotZeroForcing(set.iter().copied().collect()));
    }
    let n = g.order();
    let mut colored = vec![false; n + 1];
    for &v in set {
        colored[v] = true;
    }
    let uncolored_deg =
        (0..=n).map(|v| if v == 0 { 0 } else { g.neighbors(v).iter().filter(|&&u| !colored[u]).count() }).collect();
    let mut search = ChainSearch {
        g,
        colored,
        uncolored_deg,
        forcer: vec![None; n],
        excluded: vec![Vec::new(); n + 1],
        found: Vec::new(),
        limit,
    };
    search.run()?;
    let mut maps = search.found;
    maps.sort();
    maps.into_iter().map(|m| ForcingChain::from_forcers(g, set, m)).collect()
}

/// Depth-first search over "force the smallest decidable vertex now by one of
/// its current forcers, or commit to a forcer that is not available yet".
/// Each realizable forcer map has exactly one path through this tree.
struct ChainSearch<'g> {
    g: &'g Graph,
    colored: Vec<bool>,
    uncolored_deg: Vec<usize>,
    forcer: Vec<Option<usize>>,
    /// Forcers ruled out for a deferred vertex.
    excluded: Vec<Vec<usize>>,
    found: Vec<Vec<Option<usize>>>,
    limit: usize,
}

impl ChainSearch<'_> {
    fn available(&self, k: usize) -> Vec<usize> {
        self.g
            .neighbors(k)
            .iter()
            .copied()
            .filter(|&i| self.colored[i] && self.uncolored_deg[i] == 1 && !self.excluded[k].contains(&i))
            .collect()
    }

    fn color(&mut self, k: usize, by: usize) {
        self.colored[k] = true;
        self.forcer[k - 1] = Some(by);
        for &u in self.g.neighbors(k) {
            self.uncolored_deg[u] -= 1;
        }
    }

    fn uncolor(&mut self, k: usize) {
        self.colored[k] = false;
        self.forcer[k - 1] = None;
        for &u in self.g.neighbors(k) {
            self.uncolored_deg[u] += 1;
        }
    }

    /// Whether everything can still be colored while honoring exclusions.
    fn feasible(&self) -> bool {
        let mut colored = self.colored.clone();
        let mut deg = self.uncolored_deg.clone();
        loop {
            let mut progressed = false;
            for i in self.g.vertices() {
                if !colored[i] || deg[i] != 1 {
                    continue;
                }
                let k = *self.g.neighbors(i).iter().find(|&&k| !colored[k]).expect("deg is one");
                if self.excluded[k].contains(&i) {
                    continue;
                }
                colored[k] = true;
                for &u in self.g.neighbors(k) {
                    deg[u] -= 1;
                }
                progressed = true;
            }
            if !progressed {
                return colored[1..].iter().all(|&c| c);
            }
        }
    }

    fn run(&mut self) -> Result<()> {
        let decision = self
            .g
            .vertices()
            .filter(|&k| !self.colored[k])
            .map(|k| (k, self.available(k)))
            .find(|(_, cands)| !cands.is_empty());
        let Some((k, cands)) = decision else {
            if self.colored[1..].iter().all(|&c| c) {
                if self.found.len() == self.limit {
                    return Err(Error::ChainLimitExceeded { limit: self.limit });
                }
                self.found.push(self.forcer.clone());
            }
            return Ok(());
        };
        for &i in &cands {
            let saved = std::mem::take(&mut self.excluded[k]);
            self.color(k, i);
            let res = self.run();
            self.uncolor(k);
            self.excluded[k] = saved;
            res?;
        }
        let before = self.excluded[k].len();
        self.excluded[k].extend(&cands);
        let res = if self.feasible() { self.run() } else { Ok(()) };
        self.excluded[k].truncate(before);
        res
    }
}

/// The round-synchronized chain that forces each vertex as early as possible,
/// choosing among the candidate forcers `i` of `k` the one minimizing
/// `Σ_{j ∈ N[i]∖{k}} q_j` under `⪯` (ties go to the smaller label).
///
/// Returns the chain with its error polynomial vector `q` (indexed by
/// `label - 1`).
pub fn greedy_chain(g: &Graph, set: &VertexSet) -> Result<(ForcingChain, Vec<Poly>)> {
    if !is_zero_forcing_set(g, set)? {
        return Err(Error::NotZeroForcing(set.iter().copied().collect()));
    }
    let n = g.order();
    let mut colored = vec![false; n + 1];
    let mut q = vec![Poly::zero(); n];
    let mut forcer = vec![None; n];
    for &v in set {
        colored[v] = true;
        q[v - 1] = Poly::one();
    }
    loop {
        // (k, best forcer, best sum) for this round, decided from the state at
        // the start of the round.
        let mut picks: Vec<(usize, usize, Poly)> = Vec::new();
        for k in g.vertices().filter(|&k| !colored[k]) {
            let mut best: Option<(usize, Poly)> = None;
            for &i in g.neighbors(k) {
                if !colored[i] || g.neighbors(i).iter().any(|&j| j != k && !colored[j]) {
                    continue;
                }
                let sum: Poly =
                    g.closed_neighbors(i).iter().filter(|&&j| j != k).map(|&j| &q[j - 1]).sum();
                if best.as_ref().is_none_or(|(_, b)| sum < *b) {
                    best = Some((i, sum));
                }
            }
            if let Some((i, sum)) = best {
                picks.push((k, i, sum));
            }
        }
        if picks.is_empty() {
            break;
        }
        for (k, i, sum) in picks {
            colored[k] = true;
            forcer[k - 1] = Some(i);
            q[k - 1] = sum.mul_t();
        }
    }
    let chain = ForcingChain::from_forcers(g, set, forcer)?;
    Ok((chain, q))
}
