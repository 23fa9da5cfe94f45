//! Simple undirected graphs and degree sequences.
//!
//! Vertices are labeled `0..n`. Adjacency is stored as sorted neighbor
//! lists so that traversals are deterministic. A [`Graph`] is immutable
//! after construction; rewiring operations build new graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Edges may be
    /// given in either endpoint order; duplicates and loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Per-vertex degrees in label order (may contain zeros).
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    /// The degree sequence, sorted non-increasingly. Fails on isolated
    /// vertices since valid sequences have positive entries only.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        DegreeSequence::new(self.degrees())
    }

    /// True iff the graph has exactly one connected component. A single
    /// vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.adj.len() && self.is_connected()
    }

    /// BFS distances from `root`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let n = self.adj.len();
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `from` to `to` (inclusive), breaking ties by
    /// preferring smaller vertex labels at each step.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

/// A non-increasing sequence of positive vertex degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the input non-increasingly. Empty input and zero entries are
    /// rejected: the graph classes considered here have no isolated
    /// vertices, and a single vertex cannot carry a positive degree.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if degrees.contains(&0) {
            return Err(Error::ZeroDegree);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// True iff the sequence is realized by some tree: all entries
    /// positive and the sum equals `2(n - 1)`.
    pub fn is_tree_sequence(&self) -> bool {
        self.sum() == 2 * (self.len() - 1)
    }

    /// True iff some connected simple graph realizes the sequence:
    /// even degree sum, the Erdős–Gallai inequalities, and enough edges
    /// to span all vertices.
    pub fn is_connected_graphical(&self) -> bool {
        let n = self.len();
        let sum = self.sum();
        if sum % 2 != 0 || sum / 2 < n - 1 {
            return false;
        }
        self.erdos_gallai()
    }

    fn erdos_gallai(&self) -> bool {
        let d = &self.0;
        let n = d.len();
        let mut prefix = vec![0usize; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] + d[i];
        }
        for k in 1..=n {
            // t = first index >= k with d[t] < k; entries before it contribute k each.
            let t = d.partition_point(|&x| x >= k).max(k);
            let rhs = k * (k - 1) + k * (t - k) + (prefix[n] - prefix[t]);
            if prefix[k] > rhs {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses comma- or whitespace-separated positive integers in any
    /// order; the result is normalized to non-increasing.
    fn from_str(s: &str) -> Result<Self> {
        let mut degrees = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let d: usize = tok.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid degree {tok:?}"),
            })?;
            degrees.push(d);
        }
        DegreeSequence::new(degrees)
    }
}
