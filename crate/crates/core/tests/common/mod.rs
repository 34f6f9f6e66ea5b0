//! Reference implementations used only by tests. They share no code with the
//! library beyond the `Graph` adjacency queries and use plain `u128`
//! coefficient vectors instead of `Poly`.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use zforcing::{Graph, Poly, VertexSet};

pub type Coeffs = Vec<u128>;

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

pub fn to_poly(c: &Coeffs) -> Poly {
    Poly::from_coeffs(c.iter().copied())
}

fn trim(mut c: Coeffs) -> Coeffs {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn add(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out = vec![0u128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub fn shift(a: &Coeffs) -> Coeffs {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0];
    out.extend_from_slice(a);
    out
}

pub fn square(a: &Coeffs) -> Coeffs {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; 2 * a.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Eventual dominance, straight from the definition: compare at a point past
/// every possible crossing.
pub fn dominance(a: &Coeffs, b: &Coeffs) -> Ordering {
    let t = BigUint::from(1 + a.iter().sum::<u128>() + b.iter().sum::<u128>());
    let eval = |c: &Coeffs| c.iter().rev().fold(BigUint::ZERO, |acc, x| acc * &t + BigUint::from(*x));
    eval(a).cmp(&eval(b))
}

/// Synchronized color change rule; returns the colored set after each round.
pub fn closure_rounds(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut rounds = vec![s.clone()];
    loop {
        let cur = rounds.last().unwrap().clone();
        let mut next = cur.clone();
        for &u in &cur {
            let white: Vec<usize> = g.neighbors(u).iter().copied().filter(|w| !cur.contains(w)).collect();
            if white.len() == 1 {
                next.insert(white[0]);
            }
        }
        if next == cur {
            return rounds;
        }
        rounds.push(next);
    }
}

pub fn is_zfs(g: &Graph, s: &VertexSet) -> bool {
    closure_rounds(g, s).last().unwrap().len() == g.order()
}

/// All minimum zero forcing sets by trying every subset.
pub fn minimum_sets(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut found = Vec::new();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size > b) {
            continue;
        }
        let s: VertexSet = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if is_zfs(g, &s) {
            if best.is_none_or(|b| size < b) {
                best = Some(size);
                found.clear();
            }
            found.push(s);
        }
    }
    found.sort();
    (best.unwrap_or(0), found)
}

/// Every forcer map reachable by applying legal single forces one at a time,
/// in every possible order. `map[k-1]` is the forcer of `k`.
pub fn chains_by_serialization(g: &Graph, s: &VertexSet) -> BTreeSet<Vec<Option<usize>>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    let mut seen = HashSet::new();
    let mut colored = vec![false; n + 1];
    for &v in s {
        colored[v] = true;
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n + 1];
    fn dfs(
        g: &Graph,
        colored: &mut Vec<bool>,
        used: &mut Vec<bool>,
        map: &mut Vec<Option<usize>>,
        seen: &mut HashSet<Vec<Option<usize>>>,
        out: &mut BTreeSet<Vec<Option<usize>>>,
    ) {
        if !seen.insert(map.clone()) {
            return;
        }
        let n = g.order();
        if (1..=n).all(|v| colored[v]) {
            out.insert(map.clone());
            return;
        }
        for u in 1..=n {
            if !colored[u] || used[u] {
                continue;
            }
            let white: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !colored[w]).collect();
            if white.len() != 1 {
                continue;
            }
            let w = white[0];
            colored[w] = true;
            used[u] = true;
            map[w - 1] = Some(u);
            dfs(g, colored, used, map, seen, out);
            map[w - 1] = None;
            used[u] = false;
            colored[w] = false;
        }
    }
    dfs(g, &mut colored, &mut used, &mut map, &mut seen, &mut out);
    out
}

/// `α`-coefficients per vertex for a forcer map, evaluated in dependency
/// order rather than by rounds.
pub fn alpha_of_map(g: &Graph, s: &VertexSet, map: &[Option<usize>]) -> Vec<BTreeMap<usize, Coeffs>> {
    let n = g.order();
    let mut done: Vec<Option<BTreeMap<usize, Coeffs>>> = vec![None; n];
    for &v in s {
        done[v - 1] = Some(BTreeMap::from([(v, vec![1u128])]));
    }
    while done.iter().any(Option::is_none) {
        let mut progressed = false;
        for k in 1..=n {
            if done[k - 1].is_some() {
                continue;
            }
            let i = map[k - 1].expect("non-seed vertices have a forcer");
            let mut deps: Vec<usize> = g.neighbors(i).iter().copied().filter(|&j| j != k).collect();
            deps.push(i);
            if deps.iter().any(|&j| done[j - 1].is_none()) {
                continue;
            }
            let mut acc: BTreeMap<usize, Coeffs> = BTreeMap::new();
            for j in deps {
                for (src, c) in done[j - 1].as_ref().unwrap() {
                    let e = acc.entry(*src).or_default();
                    *e = add(e, c);
                }
            }
            done[k - 1] = Some(acc.into_iter().map(|(src, c)| (src, shift(&c))).collect());
            progressed = true;
        }
        assert!(progressed, "forcer map has a dependency cycle");
    }
    done.into_iter().map(Option::unwrap).collect()
}

pub fn q_of_map(g: &Graph, s: &VertexSet, map: &[Option<usize>]) -> Vec<Coeffs> {
    alpha_of_map(g, s, map).iter().map(|f| f.values().fold(Vec::new(), |acc, c| add(&acc, c))).collect()
}

pub fn v_of_map(g: &Graph, s: &VertexSet, map: &[Option<usize>]) -> Vec<Coeffs> {
    alpha_of_map(g, s, map).iter().map(|f| f.values().fold(Vec::new(), |acc, c| add(&acc, &square(c)))).collect()
}

/// Entrywise dominance-minimum of a family of vectors.
pub fn entrywise_min(vs: &[Vec<Coeffs>]) -> Vec<Coeffs> {
    let n = vs[0].len();
    (0..n)
        .map(|k| vs.iter().map(|v| v[k].clone()).min_by(dominance).unwrap())
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Seeded corpus of connected graphs with `lo ≤ n ≤ hi`.
pub fn random_corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let n = lo + (i as usize * 7 + seed as usize) % (hi - lo + 1);
            let p = [0.15, 0.3, 0.5][(i % 3) as usize];
            Graph::random_connected(n, p, seed.wrapping_mul(1000).wrapping_add(i))
        })
        .collect()
}
