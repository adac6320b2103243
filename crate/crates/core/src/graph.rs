//! Undirected simple graphs and the standard constructions used throughout
//! the crate: complete graphs, paths, cycles, barbells and random samples.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of resamples in [`Graph::random_connected`].
pub const RANDOM_RETRY_CAP: usize = 10_000;

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and symmetric, so structural equality is
/// plain `==`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeOutOfRange { what: "graph", n });
        }
        Ok(Self {
            adj: vec![Vec::new(); n],
        })
    }

    /// Builds a graph from an edge iterator. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            let bad = u.max(v);
            if bad >= n {
                return Err(Error::LabelOutOfRange {
                    line: 0,
                    label: bad,
                    n,
                });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        g.normalize();
        Ok(g)
    }

    fn normalize(&mut self) {
        for row in &mut self.adj {
            row.sort_unstable();
            row.dedup();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|row| row.len() == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Returns a copy with the pair `{u, v}` toggled (added if absent, removed if present).
    pub fn with_toggled(&self, u: usize, v: usize) -> Self {
        assert!(
            u != v && u < self.n() && v < self.n(),
            "invalid pair ({u}, {v})"
        );
        let mut g = self.clone();
        match g.adj[u].binary_search(&v) {
            Ok(i) => {
                g.adj[u].remove(i);
                let j = g.adj[v].binary_search(&u).expect("adjacency is symmetric");
                g.adj[v].remove(j);
            }
            Err(i) => {
                g.adj[u].insert(i, v);
                let j = g.adj[v].binary_search(&u).unwrap_err();
                g.adj[v].insert(j, u);
            }
        }
        g
    }

    /// Parses the line-oriented edge-list format: an optional `n <count>`
    /// header followed by one `u v` pair per line. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_edge = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens[0] == "n" {
                if declared.is_some() || seen_edge || tokens.len() != 2 {
                    return Err(Error::InvalidToken {
                        line,
                        token: trimmed.to_string(),
                    });
                }
                let count = parse_label(tokens[1], line)?;
                if count == 0 {
                    return Err(Error::InvalidToken {
                        line,
                        token: tokens[1].to_string(),
                    });
                }
                declared = Some(count);
                continue;
            }
            if tokens.len() != 2 {
                let token = tokens.get(2).unwrap_or(&tokens[0]).to_string();
                return Err(Error::InvalidToken { line, token });
            }
            let u = parse_label(tokens[0], line)?;
            let v = parse_label(tokens[1], line)?;
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            if let Some(n) = declared {
                let label = u.max(v);
                if label >= n {
                    return Err(Error::LabelOutOfRange { line, label, n });
                }
            }
            seen_edge = true;
            edges.push((u, v));
        }

        let n = match declared {
            Some(n) => n,
            None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
                Some(m) => m + 1,
                None => return Err(Error::InvalidParams("edge list is empty".into())),
            },
        };
        Self::from_edges(n, edges)
    }

    /// Serializes into the edge-list format, header included.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeOutOfRange {
                what: "complete",
                n,
            });
        }
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeOutOfRange { what: "path", n });
        }
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::SizeOutOfRange { what: "cycle", n });
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Star `K_{1,leaves}` with vertex 0 as the center.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Two cliques joined through a path of internal vertices.
    ///
    /// Vertices `0..k1` form the first clique, `k1..k1+p` are the path
    /// vertices `u_1..u_p`, and the last `k2` vertices form the second
    /// clique. `u_1` is adjacent to all of the first clique and `u_p` to all
    /// of the second. With `p = 0` the cliques are joined by the single edge
    /// `{0, k1}`.
    pub fn barbell(params: BarbellParams) -> Result<Self> {
        let BarbellParams { k1, p, k2 } = params;
        if k1 == 0 || k2 == 0 {
            return Err(Error::InvalidParams(format!(
                "barbell cliques must be non-empty (k1 = {k1}, k2 = {k2})"
            )));
        }
        let n = params.n();
        let c2 = k1 + p;
        let mut edges = Vec::new();
        for u in 0..k1 {
            for v in u + 1..k1 {
                edges.push((u, v));
            }
        }
        for u in c2..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        if p == 0 {
            edges.push((0, k1));
        } else {
            for i in k1 + 1..c2 {
                edges.push((i - 1, i));
            }
            edges.extend((0..k1).map(|u| (u, k1)));
            edges.extend((c2..n).map(|v| (c2 - 1, v)));
        }
        Self::from_edges(n, edges)
    }

    /// `KPK_{n1,n2,n3}`: cliques on `n1` and `n3` vertices joined by a path
    /// on `n2` vertices whose endpoints are clique members, so the graph has
    /// `n1 + n2 + n3 - 2` vertices.
    pub fn kpk(n1: usize, n2: usize, n3: usize) -> Result<Self> {
        Self::barbell(BarbellParams::from_kpk(n1, n2, n3)?)
    }

    /// Samples `G(n, p)` with a ChaCha stream seeded by `seed`, resampling
    /// until the result is connected.
    pub fn random_connected(n: usize, edge_probability: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeOutOfRange {
                what: "random_connected",
                n,
            });
        }
        if !(edge_probability > 0.0 && edge_probability <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "edge probability {edge_probability} is not in (0, 1]"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_RETRY_CAP {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < edge_probability {
                        edges.push((u, v));
                    }
                }
            }
            let g = Self::from_edges(n, edges)?;
            if g.is_connected() {
                return Ok(g);
            }
        }
        Err(Error::RetryCapExhausted(RANDOM_RETRY_CAP))
    }
}

fn parse_label(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::InvalidToken {
        line,
        token: token.to_string(),
    })
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Clique sizes and path length of a barbell graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarbellParams {
    pub k1: usize,
    pub p: usize,
    pub k2: usize,
}

impl BarbellParams {
    pub fn new(k1: usize, p: usize, k2: usize) -> Self {
        Self { k1, p, k2 }
    }

    pub fn n(&self) -> usize {
        self.k1 + self.p + self.k2
    }

    /// Shared-endpoint `KPK_{n1,n2,n3}`. The first path vertex together
    /// with the first clique forms `K_{n1}`, so the barbell clique holds
    /// `n1 - 1` vertices and all `n2` path vertices are internal.
    pub fn from_kpk(n1: usize, n2: usize, n3: usize) -> Result<Self> {
        if n1 < 2 || n3 < 2 || n2 < 1 {
            return Err(Error::InvalidParams(format!(
                "KPK needs n1, n3 >= 2 and n2 >= 1 (got {n1}, {n2}, {n3})"
            )));
        }
        Ok(Self::new(n1 - 1, n2, n3 - 1))
    }

    /// Parses `K1,P,K2`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidToken {
                line: 0,
                token: text.to_string(),
            });
        }
        let mut vals = [0usize; 3];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = parse_label(part, 0)?;
        }
        Ok(Self::new(vals[0], vals[1], vals[2]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_builds_path_and_triangle() {
        let p3 = Graph::parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        let k3 = Graph::parse_edge_list("0 1\n0 2\n1 2").unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::parse_edge_list("0 0"),
            Err(Error::SelfLoop { line: 1, vertex: 0 })
        );
        assert!(matches!(
            Graph::parse_edge_list("0 1\n1 x"),
            Err(Error::InvalidToken { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("n 3\n0 3"),
            Err(Error::LabelOutOfRange {
                line: 2,
                label: 3,
                n: 3
            })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 1 2"),
            Err(Error::InvalidToken { line: 1, .. })
        ));
    }

    #[test]
    fn edge_list_header_and_dedup() {
        let g = Graph::parse_edge_list("n 5\n0 1\n1 0\n# comment\n\n3 4\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_connected());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn standard_constructions() {
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::path(5).unwrap().edge_count(), 4);
        assert_eq!(Graph::cycle(6).unwrap().edge_count(), 6);
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(0).is_err());
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn barbell_shapes() {
        assert_eq!(
            Graph::barbell(BarbellParams::new(1, 0, 1)).unwrap(),
            Graph::complete(2).unwrap()
        );
        for p in 0..6 {
            assert_eq!(
                Graph::barbell(BarbellParams::new(1, p, 1)).unwrap(),
                Graph::path(p + 2).unwrap()
            );
        }
        let g = Graph::barbell(BarbellParams::new(3, 2, 3)).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 3 + 3 + 1 + 3 + 3);
        assert!(g.has_edge(0, 3) && g.has_edge(2, 3) && g.has_edge(3, 4));
        assert!(g.has_edge(4, 5) && g.has_edge(4, 7) && !g.has_edge(3, 5));
        assert!(Graph::barbell(BarbellParams::new(0, 2, 3)).is_err());
    }

    #[test]
    fn kpk_shares_path_endpoints() {
        // KPK_{3,2,3}: two triangles joined by an edge between clique members.
        let g = Graph::kpk(3, 2, 3).unwrap();
        assert_eq!(g.n(), 3 + 2 + 3 - 2);
        let expected =
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(g, expected);
        assert!(Graph::kpk(1, 2, 3).is_err());
    }

    #[test]
    fn random_connected_contract() {
        assert_eq!(Graph::random_connected(1, 0.3, 9).unwrap().n(), 1);
        assert_eq!(
            Graph::random_connected(5, 1.0, 123).unwrap(),
            Graph::complete(5).unwrap()
        );
        let a = Graph::random_connected(8, 0.4, 42).unwrap();
        let b = Graph::random_connected(8, 0.4, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert!(Graph::random_connected(4, 0.0, 1).is_err());
        assert!(Graph::random_connected(4, 1.5, 1).is_err());
    }

    #[test]
    fn toggling_is_an_involution() {
        let g = Graph::path(4).unwrap();
        let h = g.with_toggled(0, 3);
        assert!(h.has_edge(3, 0));
        assert_eq!(h.with_toggled(3, 0), g);
        assert!(!g.with_toggled(1, 2).is_connected());
    }

    #[test]
    fn barbell_params_parse() {
        assert_eq!(
            BarbellParams::parse("3,2,3").unwrap(),
            BarbellParams::new(3, 2, 3)
        );
        assert!(BarbellParams::parse("3,2").is_err());
        assert_eq!(
            BarbellParams::from_kpk(4, 3, 5).unwrap(),
            BarbellParams::new(3, 3, 4)
        );
    }
}
