//! Degree-preserving rewiring moves and a Perron-guided hill climb.
//!
//! Two local moves drive everything here. *Switching* replaces edges
//! `v1u1, v2u2` by `v1v2, u1u2`, preserving every vertex degree; the
//! Rayleigh quotient of a fixed vector `f` changes by exactly
//! `2 (f(v1) - f(u2)) (f(v2) - f(u1))`. *Shifting* replaces `u v1` by
//! `u v2`, moving one unit of degree from `v1` to `v2`; with a Perron
//! vector and `f(v2) >= f(v1)` the spectral radius strictly increases.
//!
//! [`shifting_test`] and [`switching_test`] look for certificates that a
//! graph cannot maximize the spectral radius in its degree class, using
//! partner choices that provably keep the rewired graph connected.
//! [`hill_climb`] iterates those certificates and falls back to a
//! first-improvement scan over all connected switches, so it terminates
//! exactly at graphs with no improving degree-preserving move.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::spectral::{default_max_iter, perron, PerronResult};

/// Strict-inequality tolerance for Perron-entry comparisons; near-ties
/// are treated as ties so solver noise cannot drive rewiring churn.
pub const STRICT_TOL: f64 = 1e-9;

/// A hill-climb step must raise the spectral radius by more than this.
pub const GAIN_TOL: f64 = 1e-10;

/// Predicted sign of the Rayleigh-quotient change of a move, evaluated
/// at the Perron vector of the graph the move was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicted {
    /// Certified strict increase of the spectral radius.
    Strict,
    /// Non-negative Rayleigh change; the radius cannot drop.
    NonNegative,
    /// No certificate; accepted only after recomputing the radius.
    Unknown,
}

/// A degree-multiset-preserving rewiring move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// Replace `v1 u1` and `v2 u2` by `v1 v2` and `u1 u2`.
    Switch { v1: usize, u1: usize, v2: usize, u2: usize },
    /// Replace each `from w` (for `w` in `moved`) by `to w`; `from` and
    /// `to` swap degrees, every other degree is unchanged.
    ShiftSet { from: usize, to: usize, moved: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Move {
    pub kind: MoveKind,
    pub predicted: Predicted,
}

/// Applies a switch: both named edges must exist, both replacement edges
/// must be absent, and no replacement may be a loop. Degrees are
/// preserved per vertex; connectivity is the caller's concern.
pub fn switch_edges(
    g: &Graph,
    (v1, u1): (usize, usize),
    (v2, u2): (usize, usize),
) -> Result<Graph> {
    let n = g.vertex_count();
    for x in [v1, u1, v2, u2] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if !g.has_edge(v1, u1) {
        return Err(Error::MissingEdge { u: v1, v: u1 });
    }
    if !g.has_edge(v2, u2) {
        return Err(Error::MissingEdge { u: v2, v: u2 });
    }
    if v1 == v2 {
        return Err(Error::SelfLoop(v1));
    }
    if u1 == u2 {
        return Err(Error::SelfLoop(u1));
    }
    if g.has_edge(v1, v2) {
        return Err(Error::EdgeExists { u: v1, v: v2 });
    }
    if g.has_edge(u1, u2) {
        return Err(Error::EdgeExists { u: u1, v: u2 });
    }
    let mut edges = g.edges();
    edges.retain(|&e| e != norm(v1, u1) && e != norm(v2, u2));
    edges.push(norm(v1, v2));
    edges.push(norm(u1, u2));
    let out = Graph::from_edges(n, &edges)?;
    debug_assert_eq!(out.degrees(), g.degrees());
    Ok(out)
}

/// Applies a shift: `u v1` must exist, `u v2` must not, and `u != v2`.
/// Afterwards `d(v1)` drops by one and `d(v2)` rises by one.
pub fn shift_edge(g: &Graph, u: usize, v1: usize, v2: usize) -> Result<Graph> {
    let n = g.vertex_count();
    for x in [u, v1, v2] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if !g.has_edge(u, v1) {
        return Err(Error::MissingEdge { u, v: v1 });
    }
    if u == v2 {
        return Err(Error::SelfLoop(u));
    }
    if g.has_edge(u, v2) {
        return Err(Error::EdgeExists { u, v: v2 });
    }
    let mut edges = g.edges();
    edges.retain(|&e| e != norm(u, v1));
    edges.push(norm(u, v2));
    Graph::from_edges(n, &edges)
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Applies any [`Move`] to a graph.
pub fn apply_move(g: &Graph, mv: &Move) -> Result<Graph> {
    match &mv.kind {
        MoveKind::Switch { v1, u1, v2, u2 } => switch_edges(g, (*v1, *u1), (*v2, *u2)),
        MoveKind::ShiftSet { from, to, moved } => {
            let mut cur = g.clone();
            for &w in moved {
                cur = shift_edge(&cur, w, *from, *to)?;
            }
            debug_assert_eq!(
                sorted(cur.degrees()),
                sorted(g.degrees()),
                "shift set must preserve the degree multiset"
            );
            Ok(cur)
        }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn f_rank_order(f: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..f.len()).collect();
    idx.sort_by(|&a, &b| f[b].partial_cmp(&f[a]).unwrap().then(a.cmp(&b)));
    idx
}

/// Looks for vertices `u, v` with `d(u) > d(v)` but `f(u) < f(v)`. Such
/// a pair certifies that `g` is not a maximizer: moving `c = d(u) - d(v)`
/// edges from `u` to `v` (avoiding neighbors of `v`) swaps the two
/// degrees and strictly increases the spectral radius.
///
/// The moved neighbors are chosen to keep the graph connected: the first
/// hop of a shortest `u`-`v` path is kept whenever possible, and when it
/// cannot be kept every remaining neighbor of `u` is adjacent to `v`, so
/// `u` stays attached either way.
pub fn shifting_test(g: &Graph, result: &PerronResult) -> Option<Move> {
    let f = result.f.values();
    let by_f_desc = f_rank_order(f);
    for &v in &by_f_desc {
        for &u in by_f_desc.iter().rev() {
            if u == v || g.degree(u) <= g.degree(v) || f[u] >= f[v] - STRICT_TOL {
                continue;
            }
            let c = g.degree(u) - g.degree(v);
            let mut eligible: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| w != v && !g.has_edge(v, w))
                .collect();
            // counting: |N(u) \ (N(v) + v)| >= d(u) - d(v) in a simple graph
            debug_assert!(eligible.len() >= c);
            let path = g.shortest_path(u, v).expect("connected");
            let hop = path[1];
            if let Some(i) = eligible.iter().position(|&w| w == hop) {
                // move the entry vertex of the u-v path last
                eligible.remove(i);
                eligible.push(hop);
            }
            let moved: Vec<usize> = eligible.into_iter().take(c).collect();
            let mv = Move {
                kind: MoveKind::ShiftSet { from: u, to: v, moved },
                predicted: Predicted::Strict,
            };
            match apply_move(g, &mv) {
                Ok(next) if next.is_connected() => return Some(mv),
                _ => continue,
            }
        }
    }
    None
}

/// Looks for `vu` in `E` and `vx` not in `E` with `f(u) < f(x) <= f(v)`
/// and `f(v) >= f(w)` for every neighbor `w` of `x`. Such a triple
/// certifies that `g` is not a maximizer: switching `vu, xw` to `vx, uw`
/// strictly increases the spectral radius for a partner `w` chosen, via
/// a shortest `v`-`x` path, so that the result stays connected.
pub fn switching_test(g: &Graph, result: &PerronResult) -> Option<Move> {
    let f = result.f.values();
    let by_f_desc = f_rank_order(f);
    for &v in &by_f_desc {
        let mut us: Vec<usize> = g.neighbors(v).to_vec();
        us.sort_by(|&a, &b| f[a].partial_cmp(&f[b]).unwrap().then(a.cmp(&b)));
        for &u in &us {
            for &x in &by_f_desc {
                if x == v || x == u || g.has_edge(v, x) {
                    continue;
                }
                if f[u] >= f[x] - STRICT_TOL || f[x] > f[v] + STRICT_TOL {
                    continue;
                }
                if g.neighbors(x).iter().any(|&w| f[w] > f[v] + STRICT_TOL) {
                    continue;
                }
                let path = g.shortest_path(v, x).expect("connected");
                let t = path[path.len() - 2];
                let vu_on_path = path[1] == u;
                let candidates: Vec<usize> = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&p| p != u && !g.has_edge(u, p))
                    .collect();
                let w = if vu_on_path {
                    // prefer a partner off the path; otherwise the path
                    // neighbor t itself cannot be adjacent to u
                    candidates
                        .iter()
                        .copied()
                        .find(|&p| p != t)
                        .or_else(|| candidates.iter().copied().find(|&p| p == t))
                } else {
                    candidates
                        .iter()
                        .copied()
                        .find(|&p| p == t)
                        .or_else(|| candidates.first().copied())
                };
                let Some(w) = w else { continue };
                let mv = Move {
                    kind: MoveKind::Switch { v1: v, u1: u, v2: x, u2: w },
                    predicted: Predicted::Strict,
                };
                match apply_move(g, &mv) {
                    Ok(next) if next.is_connected() => return Some(mv),
                    _ => continue,
                }
            }
        }
    }
    None
}

fn predicted_from_product(product: f64) -> Predicted {
    if product > STRICT_TOL {
        Predicted::Strict
    } else if product >= -STRICT_TOL {
        Predicted::NonNegative
    } else {
        Predicted::Unknown
    }
}

/// All valid switches of `g` whose result is connected, in a fixed
/// deterministic order (edge pairs lexicographically, two pairings each).
fn connected_switches(g: &Graph) -> Vec<(Move, Graph)> {
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            // removing {a,b} and {c,d}: new edges {a,v2} and {b,u2}
            for (v2, u2) in [(c, d), (d, c)] {
                if a == v2 || b == u2 || g.has_edge(a, v2) || g.has_edge(b, u2) {
                    continue;
                }
                let mv = Move {
                    kind: MoveKind::Switch { v1: a, u1: b, v2, u2 },
                    predicted: Predicted::Unknown,
                };
                if let Ok(next) = apply_move(g, &mv) {
                    if next.is_connected() {
                        out.push((mv, next));
                    }
                }
            }
        }
    }
    out
}

/// First-improvement or best-improvement step selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    First,
    Best,
}

/// One accepted hill-climb step.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub mv: Move,
    /// Spectral radius after applying the move.
    pub lambda: f64,
}

/// Result of a hill climb.
#[derive(Clone, Debug)]
pub struct Climb {
    pub graph: Graph,
    pub lambda: f64,
    pub trace: Vec<TraceStep>,
}

/// Maximizes the spectral radius by local search over degree-preserving
/// moves. Each step first tries the shifting and switching certificates,
/// then scans all connected switches; a move is accepted only if the
/// recomputed radius rises by more than [`GAIN_TOL`], so the trace is
/// strictly increasing and the degree multiset is invariant. Stops at a
/// fixpoint or after `max_steps`.
pub fn hill_climb(g0: &Graph, max_steps: usize, strategy: Strategy) -> Result<Climb> {
    let degree_multiset = sorted(g0.degrees());
    let tol = crate::spectral::DEFAULT_TOL;
    let iters = default_max_iter(g0.vertex_count());
    let mut graph = g0.clone();
    let mut res = perron(&graph, tol, iters)?;
    let mut lambda = res.lambda;
    let mut trace = Vec::new();

    for _ in 0..max_steps {
        let mut accepted: Option<(Move, Graph, f64)> = None;

        // certificate moves first: provably strict when they numerically pan out
        for candidate in [shifting_test(&graph, &res), switching_test(&graph, &res)]
            .into_iter()
            .flatten()
        {
            let next = apply_move(&graph, &candidate)?;
            let next_lambda = perron(&next, tol, iters)?.lambda;
            if next_lambda > lambda + GAIN_TOL
                && accepted.as_ref().is_none_or(|(_, _, best)| next_lambda > *best)
            {
                accepted = Some((candidate, next, next_lambda));
                if strategy == Strategy::First {
                    break;
                }
            }
        }

        if accepted.is_none() || strategy == Strategy::Best {
            // exhaustive scan over connected switches
            for (mut mv, next) in connected_switches(&graph) {
                let next_lambda = perron(&next, tol, iters)?.lambda;
                if next_lambda > lambda + GAIN_TOL
                    && accepted.as_ref().is_none_or(|(_, _, best)| next_lambda > *best)
                {
                    if let MoveKind::Switch { v1, u1, v2, u2 } = mv.kind {
                        let f = res.f.values();
                        mv.predicted =
                            predicted_from_product((f[v1] - f[u2]) * (f[v2] - f[u1]));
                    }
                    accepted = Some((mv, next, next_lambda));
                    if strategy == Strategy::First {
                        break;
                    }
                }
            }
        }

        let Some((mv, next, next_lambda)) = accepted else {
            break;
        };
        assert!(
            next_lambda > lambda + GAIN_TOL,
            "accepted move must strictly increase the spectral radius"
        );
        assert_eq!(
            sorted(next.degrees()),
            degree_multiset,
            "degree multiset must be invariant across the climb"
        );
        graph = next;
        lambda = next_lambda;
        res = perron(&graph, tol, iters)?;
        trace.push(TraceStep { mv, lambda });
    }

    Ok(Climb { graph, lambda, trace })
}

/// Builds a uniformly shuffled labeled tree realizing a tree sequence,
/// by decoding a random arrangement of the fixed code multiset in which
/// vertex `i` appears `d_i - 1` times.
pub fn random_tree<R: Rng>(pi: &DegreeSequence, rng: &mut R) -> Result<Graph> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence(pi.to_string()));
    }
    let d = pi.degrees();
    let n = pi.len();
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]);
    }
    let mut code = Vec::with_capacity(n - 2);
    for (i, &di) in d.iter().enumerate() {
        code.extend(std::iter::repeat_n(i, di - 1));
    }
    code.shuffle(rng);
    decode_pruefer(&code, n)
}

pub(crate) fn decode_pruefer(code: &[usize], n: usize) -> Result<Graph> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut degree = vec![1usize; n];
    for &a in code {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in code {
        let Reverse(u) = leaves.pop().expect("valid code");
        edges.push((u, a));
        degree[u] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u, v));
    Graph::from_edges(n, &edges)
}

/// Builds a pseudo-random connected realization of a connected-graphical
/// sequence: a Havel–Hakimi construction, repaired to connectivity by
/// cycle-edge switches, then shuffled by connectivity-preserving random
/// switches. Deterministic for a fixed seed.
pub fn random_connected_realization(pi: &DegreeSequence, seed: u64) -> Result<Graph> {
    if !pi.is_connected_graphical() {
        return Err(Error::NotConnectedGraphical);
    }
    let mut g = havel_hakimi(pi)?;
    g = repair_connectivity(g)?;
    debug_assert!(g.is_connected());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 10 * g.edge_count().max(4);
    for _ in 0..attempts {
        let edges = g.edges();
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        let (p, q) = if rng.random_bool(0.5) {
            ((a, c), (b, d))
        } else {
            ((a, d), (b, c))
        };
        if p.0 == p.1 || q.0 == q.1 || g.has_edge(p.0, p.1) || g.has_edge(q.0, q.1) {
            continue;
        }
        let mut edges2 = edges.clone();
        edges2.retain(|&e| e != (a, b) && e != (c, d));
        edges2.push(norm(p.0, p.1));
        edges2.push(norm(q.0, q.1));
        let candidate = Graph::from_edges(g.vertex_count(), &edges2)?;
        if candidate.is_connected() {
            g = candidate;
        }
    }
    Ok(g)
}

fn havel_hakimi(pi: &DegreeSequence) -> Result<Graph> {
    let n = pi.len();
    let mut residual: Vec<(usize, usize)> = pi.degrees().iter().copied().zip(0..n).collect();
    let mut edges = Vec::with_capacity(pi.sum() / 2);
    loop {
        residual.sort_unstable_by(|a, b| b.cmp(a));
        let (r, v) = residual[0];
        if r == 0 {
            break;
        }
        if r >= residual.len() {
            return Err(Error::NotConnectedGraphical);
        }
        for k in 1..=r {
            let (rk, w) = residual[k];
            if rk == 0 {
                return Err(Error::NotConnectedGraphical);
            }
            edges.push(norm(v, w));
            residual[k].0 -= 1;
        }
        residual[0].0 = 0;
    }
    Graph::from_edges(n, &edges)
}

/// Merges components by switching a cycle edge of one component with any
/// edge of another; cycle edges exist whenever there are at least two
/// components and enough edges to span the graph.
fn repair_connectivity(mut g: Graph) -> Result<Graph> {
    loop {
        let comp = components(&g);
        let ncomp = comp.iter().max().map_or(0, |&c| c + 1);
        if ncomp <= 1 {
            return Ok(g);
        }
        let cycle_edge = find_cycle_edge(&g).ok_or(Error::NotConnectedGraphical)?;
        let (a, b) = cycle_edge;
        let other = g
            .edges()
            .into_iter()
            .find(|&(c, d)| comp[c] != comp[a] && comp[d] != comp[a])
            .ok_or(Error::NotConnectedGraphical)?;
        let (c, d) = other;
        let mut edges = g.edges();
        edges.retain(|&e| e != (a, b) && e != (c, d));
        edges.push(norm(a, c));
        edges.push(norm(b, d));
        g = Graph::from_edges(g.vertex_count(), &edges)?;
    }
}

fn components(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// An edge lying on a cycle: any non-tree edge of a DFS forest.
fn find_cycle_edge(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push(w);
                } else if parent[v] != w && w != v {
                    return Some(norm(v, w));
                }
            }
        }
    }
    None
}
