//! Error polynomial vectors `q` and variance polynomial vectors `V`.
//!
//! For a forcing chain, seeds get `q_s = 1` (or the symbol `α_s`) and a vertex
//! `k` forced by `i` gets `q_k = t · Σ_{j ∈ N[i]∖{k}} q_j`. The sum runs over
//! the closed neighborhood of the forcer because the back-solve uses the
//! diagonal entry `A_ii` too. `V_k` is the sum of the squared `α`-coefficients
//! of `q_k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::forcing::{self, ForcingChain};
use crate::graph::{Graph, VertexSet};
use crate::poly::{AlphaForm, Poly};

/// One polynomial per vertex, addressed by 1-based label.
///
/// JSON form is a map from label to polynomial: `{"1": {"coeffs": [...]}, ...}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVec(Vec<Poly>);

/// `q` for a chain or a set.
pub type ErrorVec = PolyVec;
/// `V` for a chain or a set.
pub type VarianceVec = PolyVec;

impl PolyVec {
    pub fn from_vec(entries: Vec<Poly>) -> Self {
        PolyVec(entries)
    }

    pub fn get(&self, v: usize) -> &Poly {
        &self.0[v - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.0.iter().enumerate().map(|(i, p)| (i + 1, p))
    }

    pub fn as_slice(&self) -> &[Poly] {
        &self.0
    }

    /// The `⪯`-largest entry and its vertex; ties report the smallest label.
    pub fn max_entry(&self) -> (usize, &Poly) {
        let mut best = (1, &self.0[0]);
        for (v, p) in self.iter().skip(1) {
            if p > best.1 {
                best = (v, p);
            }
        }
        best
    }

    /// Entrywise `⪯`-minimum with `other`.
    pub fn entrywise_min(&self, other: &PolyVec) -> PolyVec {
        PolyVec(self.0.iter().zip(&other.0).map(|(a, b)| a.min(b).clone()).collect())
    }

    /// Descending-degree strings keyed by label, for tables and golden files.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for PolyVec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, &Poly> = self.iter().collect();
        map.serialize(serializer)
    }
}

/// `α`-form vector of a chain: seeds get their own symbol, the rest follow the
/// forcing recursion in round order.
pub fn alpha_vector_of_chain(g: &Graph, chain: &ForcingChain) -> Vec<AlphaForm> {
    let mut forms = vec![AlphaForm::zero(); g.order()];
    for &s in chain.set() {
        forms[s - 1] = AlphaForm::symbol(s);
    }
    for f in chain.forces() {
        let mut acc = AlphaForm::zero();
        for j in g.closed_neighbors(f.by) {
            if j != f.on {
                acc.add_assign(&forms[j - 1]);
            }
        }
        forms[f.on - 1] = acc.mul_t();
    }
    forms
}

pub fn error_vector_of_chain(g: &Graph, chain: &ForcingChain) -> ErrorVec {
    let mut q = vec![Poly::zero(); g.order()];
    for &s in chain.set() {
        q[s - 1] = Poly::one();
    }
    for f in chain.forces() {
        let sum: Poly = g.closed_neighbors(f.by).iter().filter(|&&j| j != f.on).map(|&j| &q[j - 1]).sum();
        q[f.on - 1] = sum.mul_t();
    }
    PolyVec(q)
}

/// `q^S`, attained by the greedy chain, which is returned as the witness.
pub fn error_vector_of_set(g: &Graph, set: &VertexSet) -> Result<(ErrorVec, ForcingChain)> {
    let (chain, q) = forcing::greedy_chain(g, set)?;
    Ok((PolyVec(q), chain))
}

pub fn variance_vector_of_chain(g: &Graph, chain: &ForcingChain) -> VarianceVec {
    PolyVec(alpha_vector_of_chain(g, chain).iter().map(AlphaForm::sum_of_squares).collect())
}

/// `V^S` with the chains that attain each entry.
#[derive(Debug, Clone)]
pub struct SetVariance {
    pub v: VarianceVec,
    pub chains: Vec<ForcingChain>,
    /// `witness[label - 1]` indexes into `chains`: the first chain attaining
    /// that entry.
    pub witness: Vec<usize>,
    /// Index of a chain attaining every entry at once, if one exists.
    pub single_chain: Option<usize>,
}

impl SetVariance {
    pub fn single_chain_achieves(&self) -> bool {
        self.single_chain.is_some()
    }

    pub fn witness_of(&self, v: usize) -> &ForcingChain {
        &self.chains[self.witness[v - 1]]
    }
}

/// Entrywise `⪯`-minimum of `V` over every forcing chain of `set`.
/// Enumeration beyond `limit` chains is an error.
pub fn variance_vector_of_set(g: &Graph, set: &VertexSet, limit: usize) -> Result<SetVariance> {
    let chains = forcing::enumerate_forcing_chains(g, set, limit)?;
    let per_chain: Vec<VarianceVec> = chains.iter().map(|c| variance_vector_of_chain(g, c)).collect();
    let n = g.order();
    let mut witness = vec![0usize; n];
    for v in 1..=n {
        for (idx, vec) in per_chain.iter().enumerate().skip(1) {
            if vec.get(v) < per_chain[witness[v - 1]].get(v) {
                witness[v - 1] = idx;
            }
        }
    }
    let best = PolyVec((1..=n).map(|v| per_chain[witness[v - 1]].get(v).clone()).collect());
    let single_chain = per_chain.iter().position(|vec| *vec == best);
    Ok(SetVariance { v: best, chains, witness, single_chain })
}
