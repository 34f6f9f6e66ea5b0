//! Simple undirected graphs with 1-based vertex labels.
//!
//! The canonical text format is an edge list:
//!
//! ```text
//! # comments and blank lines are ignored
//! n 3
//! 1 2
//! 2 3
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of 1-based vertex labels, iterated in ascending order.
pub type VertexSet = BTreeSet<usize>;

/// Names accepted by [`Graph::builtin`].
pub const BUILTIN_NAMES: &[&str] = &[
    "path",
    "complete",
    "complete_minus_two_disjoint_edges",
    "forked_path",
    "fig1_grid9",
    "fig3_fork",
    "fig4_leadcoef",
];

/// An immutable simple graph on vertices `1..=n`.
///
/// Neighbor lists are kept sorted so every traversal is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range labels are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            sets[u - 1].insert(v);
            sets[v - 1].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Open neighborhood `N(v)`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`, ascending.
    pub fn closed_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let mut pushed = false;
        for &u in self.neighbors(v) {
            if !pushed && u > v {
                out.push(v);
                pushed = true;
            }
            out.push(u);
        }
        if !pushed {
            out.push(v);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && (1..=self.order()).contains(&u)
            && (1..=self.order()).contains(&v)
            && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, ns)| {
            let u = i + 1;
            ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![1];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Checks that every label of `set` is a vertex of this graph.
    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&&v| v == 0 || v > self.order()) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.order() }),
            None => Ok(()),
        }
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            let line = match line.find('#') {
                Some(p) => &line[..p],
                None => line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(parse_err(format!("expected `n <count>`, found `{line}`")));
                    }
                    let count: usize = fields[1]
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex count `{}`", fields[1])))?;
                    if count == 0 {
                        return Err(parse_err("vertex count must be positive".into()));
                    }
                    n = Some(count);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(parse_err(format!("expected `u v`, found `{line}`")));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, f) in ends.iter_mut().zip(&fields) {
                        *slot = f.parse().map_err(|_| parse_err(format!("bad vertex `{f}`")))?;
                        if *slot == 0 || *slot > count {
                            return Err(parse_err(format!(
                                "vertex {} out of range 1..={count}",
                                *slot
                            )));
                        }
                    }
                    if ends[0] == ends[1] {
                        return Err(parse_err(format!("self-loop at vertex {}", ends[0])));
                    }
                    edges.push((ends[0], ends[1]));
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 1, message: "missing `n <count>` header".into() })?;
        Self::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
            .expect("complete graph edges are valid")
    }

    /// `K_n` with the two disjoint edges `{1,5}` and `{2,6}` removed (`n ≥ 6`).
    pub fn complete_minus_two_disjoint_edges(n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::InvalidParameter(format!(
                "complete_minus_two_disjoint_edges needs n >= 6, got {n}"
            )));
        }
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .filter(|&e| e != (1, 5) && e != (2, 6));
        Self::from_edges(n, edges)
    }

    /// A path `1–2–…–(n−2)` with two leaves `n−1` and `n` hanging off `n−2`.
    pub fn forked_path(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!("forked_path needs n >= 4, got {n}")));
        }
        let edges = (1..n - 2).map(|i| (i, i + 1)).chain([(n - 2, n - 1), (n - 2, n)]);
        Self::from_edges(n, edges)
    }

    /// The 9-vertex grid-like graph used for the three-set comparison.
    pub fn fig1_grid9() -> Self {
        Self::from_edges(
            9,
            [(1, 4), (2, 5), (5, 8), (3, 6), (6, 9), (4, 5), (5, 6), (7, 8), (8, 9), (5, 9)],
        )
        .expect("static edges")
    }

    /// The 8-vertex graph where no single chain of `{1,3,5}` attains every
    /// entry of the variance vector.
    pub fn fig3_fork() -> Self {
        Self::from_edges(8, [(5, 8), (8, 7), (7, 2), (2, 6), (6, 1), (1, 7), (7, 4), (6, 3)])
            .expect("static edges")
    }

    /// The 5-vertex graph whose optimal `q` and `V` have different leading
    /// coefficients.
    pub fn fig4_leadcoef() -> Self {
        Self::from_edges(5, [(1, 2), (2, 3), (3, 5), (5, 4), (4, 2)]).expect("static edges")
    }

    /// Looks up a named family. `n` is required for `path`, `complete`,
    /// `forked_path` and `complete_minus_two_disjoint_edges`, and ignored by
    /// the fixed graphs.
    pub fn builtin(name: &str, n: Option<usize>) -> Result<Self> {
        let need_n = |min: usize| -> Result<usize> {
            let n = n.ok_or_else(|| {
                Error::InvalidParameter(format!("builtin `{name}` requires -n"))
            })?;
            if n < min {
                return Err(Error::InvalidParameter(format!(
                    "builtin `{name}` needs n >= {min}, got {n}"
                )));
            }
            Ok(n)
        };
        match name {
            "path" => Ok(Self::path(need_n(1)?)),
            "complete" => Ok(Self::complete(need_n(1)?)),
            "complete_minus_two_disjoint_edges" => {
                Self::complete_minus_two_disjoint_edges(need_n(6)?)
            }
            "forked_path" => Self::forked_path(need_n(4)?),
            "fig1_grid9" => Ok(Self::fig1_grid9()),
            "fig3_fork" => Ok(Self::fig3_fork()),
            "fig4_leadcoef" => Ok(Self::fig4_leadcoef()),
            other => Err(Error::UnknownGraph(other.to_string())),
        }
    }

    /// A connected graph on `n` vertices: a random spanning tree (each vertex
    /// attaches to an earlier one) plus every other pair independently with
    /// probability `extra_edge_prob`.
    pub fn random_connected(n: usize, extra_edge_prob: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = BTreeSet::new();
        for v in 2..=n {
            let u = rng.random_range(1..v);
            edges.insert((u, v));
        }
        for u in 1..=n {
            for v in u + 1..=n {
                if !edges.contains(&(u, v)) && rng.random_bool(extra_edge_prob) {
                    edges.insert((u, v));
                }
            }
        }
        Self::from_edges(n, edges).expect("generated edges are valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_edge_list(s)
    }
}

/// JSON shape of a graph: `{"n": 3, "edges": [[1,2],[2,3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.order(), edges: g.edges().collect() }
    }
}

/// Parses `"1,6,9"` into a vertex set. Whitespace around labels is allowed.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex label `{part}`")))?;
        if v == 0 {
            return Err(Error::InvalidParameter("vertex labels are 1-based".into()));
        }
        out.insert(v);
    }
    Ok(out)
}

/// Parses `"2,6,9;1,6,9"` into a list of vertex sets.
pub fn parse_vertex_sets(text: &str) -> Result<Vec<VertexSet>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(parse_vertex_set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_single_edge() {
        let g: Graph = "n 2\n1 2".parse().unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn parses_grid9_text() {
        let text = "# nine vertices\nn 9\n1 4\n2 5\n5 8\n3 6\n6 9\n4 5\n5 6\n7 8\n8 9\n5 9\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!((g.order(), g.size()), (9, 10));
        assert_eq!(g, Graph::fig1_grid9());
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        let err = Graph::parse_edge_list("n 3\n1 1").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!(
            Graph::parse_edge_list("n 3\n\n1 4"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(Graph::parse_edge_list("n 3\n1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("3\n1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse_edge_list("n 3\n1 2 3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn crlf_comments_and_duplicates() {
        let g = Graph::parse_edge_list("n 3\r\n1 2 # first\r\n2 1\r\n\r\n2 3\r\n").unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn builtins() {
        let p3 = Graph::builtin("path", Some(3)).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);

        let k = Graph::builtin("complete_minus_two_disjoint_edges", Some(6)).unwrap();
        assert_eq!(k.size(), 13);
        assert!(!k.has_edge(1, 5) && !k.has_edge(2, 6) && k.has_edge(1, 6));

        let fp = Graph::builtin("forked_path", Some(7)).unwrap();
        assert_eq!(
            fp.edges().collect::<Vec<_>>(),
            vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)]
        );

        assert!(matches!(Graph::builtin("petersen", None), Err(Error::UnknownGraph(_))));
        assert!(matches!(Graph::builtin("forked_path", Some(3)), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::builtin("path", None), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = Graph::fig1_grid9();
        assert_eq!(g.closed_neighbors(5), vec![2, 4, 5, 6, 8, 9]);
        assert_eq!(g.closed_neighbors(1), vec![1, 4]);
        assert_eq!(g.closed_neighbors(9), vec![5, 6, 8, 9]);
        assert_eq!(g.max_degree(), 5);
    }

    #[test]
    fn vertex_set_parsing() {
        assert_eq!(parse_vertex_set("1, 6,9").unwrap(), [1, 6, 9].into());
        assert!(parse_vertex_set("0").is_err());
        assert!(parse_vertex_set("a").is_err());
        let sets = parse_vertex_sets("2,6,9;1,6,9;1,4,7").unwrap();
        assert_eq!(sets.len(), 3);
    }

    #[test]
    fn random_connected_is_connected_and_seeded() {
        for seed in 0..20 {
            let g = Graph::random_connected(8, 0.3, seed);
            assert!(g.is_connected());
            assert_eq!(g, Graph::random_connected(8, 0.3, seed));
        }
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..12, raw in proptest::collection::vec((1usize..12, 1usize..12), 0..40)) {
            let edges: Vec<_> = raw.into_iter().filter(|&(u, v)| u <= n && v <= n && u != v).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(&back, &g);
            for u in g.vertices() {
                for v in g.vertices() {
                    prop_assert_eq!(g.neighbors(u).contains(&v), g.edges().any(|e| e == (u.min(v), u.max(v)) && u != v));
                }
            }
        }

        #[test]
        fn family_edge_counts(n in 4usize..40) {
            prop_assert_eq!(Graph::path(n).size(), n - 1);
            let fp = Graph::forked_path(n).unwrap();
            prop_assert_eq!(fp.size(), n - 1);
            prop_assert_eq!(fp.degree(n - 2), 3);
        }
    }
}
