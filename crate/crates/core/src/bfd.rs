//! Breadth-first orderings with decreasing degrees (BFD-orderings).
//!
//! A BFD-ordering is a breadth-first vertex ordering in which (B1)
//! children inherit the order of their parents and (B2) degrees are
//! non-increasing along the order. For a tree degree sequence the graph
//! admitting such an ordering is unique up to isomorphism and maximizes
//! the spectral radius among all trees with that sequence; for general
//! connected graphs the ordering is a necessary condition for
//! maximizers, checked here against the Perron vector.

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::spectral::VertexFunction;

/// Tolerance treating nearly equal Perron entries as ties, so solver
/// noise cannot reorder symmetric vertices.
pub const F_TIE_TOL: f64 = 1e-9;

/// A breadth-first layering of a connected graph: the visit order, the
/// parent of every non-root vertex, and BFS heights.
#[derive(Clone, Debug)]
pub struct BfdOrdering {
    /// `order[i]` is the vertex in position `i`.
    pub order: Vec<usize>,
    /// `parent[v]` is `None` exactly for the root.
    pub parent: Vec<Option<usize>>,
    /// `height[v]` is the BFS distance from the root.
    pub height: Vec<usize>,
}

impl BfdOrdering {
    pub fn root(&self) -> usize {
        self.order[0]
    }

    /// Inverse permutation: `positions()[v]` is the position of `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Which defining property a candidate ordering violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfdProperty {
    /// Children must appear in the order of their parents.
    B1,
    /// Degrees must be non-increasing along the order.
    B2,
}

/// Verdict of [`is_bfd_ordering`] for a structurally valid layering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BfdVerdict {
    Ok,
    Violation { property: BfdProperty, pair: (usize, usize) },
}

/// Builds the unique tree with a BFD-ordering for a tree sequence.
///
/// Vertex `i` receives the i-th largest degree: the root takes `d0`
/// children and every later vertex in order takes the next `d_i - 1`
/// unassigned vertices as children. Linear in `n` once sorted.
pub fn construct_bfd_tree(pi: &DegreeSequence) -> Result<(Graph, BfdOrdering)> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence(format!(
            "{pi} has degree sum {} but a tree on {} vertices needs {}",
            pi.sum(),
            pi.len(),
            2 * (pi.len() - 1)
        )));
    }
    let d = pi.degrees();
    let n = pi.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut parent = vec![None; n];
    let mut height = vec![0; n];
    let mut next = 1;
    for v in 0..n {
        let children = if v == 0 { d[0] } else { d[v] - 1 };
        for _ in 0..children {
            debug_assert!(next < n);
            edges.push((v, next));
            parent[next] = Some(v);
            height[next] = height[v] + 1;
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    let graph = Graph::from_edges(n, &edges)?;
    let ordering = BfdOrdering {
        order: (0..n).collect(),
        parent,
        height,
    };
    Ok((graph, ordering))
}

/// Builds the spider for a sequence of the form `(k, 2, ..., 2, 1^k)`:
/// one center of degree `k` with `k` pendant paths whose lengths differ
/// by at most one. Isomorphic to the BFD-tree of the same sequence.
pub fn spider(pi: &DegreeSequence) -> Result<Graph> {
    let d = pi.degrees();
    let n = pi.len();
    let k = d[0];
    let ones = d.iter().filter(|&&x| x == 1).count();
    if k < 2 || ones != k || n < k + 1 || d[1..n - ones].iter().any(|&x| x != 2) {
        return Err(Error::NotSpiderSequence);
    }
    let total = n - 1;
    let long = total.div_ceil(k);
    let short = total / k;
    let longs = total % k;
    let mut edges = Vec::with_capacity(total);
    let mut next = 1;
    for leg in 0..k {
        let len = if leg < longs { long } else { short };
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Checks B1 and B2 for a candidate ordering. A candidate that is not a
/// valid breadth-first layering of `g` (wrong heights, wrong parents,
/// non-contiguous layers) is an error, distinct from a B1/B2 violation.
pub fn is_bfd_ordering(g: &Graph, ord: &BfdOrdering) -> Result<BfdVerdict> {
    let n = g.vertex_count();
    validate_layering(g, ord)?;
    let pos = ord.positions();
    // B1: parent positions must be non-decreasing along the order.
    for i in 2..n {
        let a = ord.order[i - 1];
        let b = ord.order[i];
        if let (Some(pa), Some(pb)) = (ord.parent[a], ord.parent[b]) {
            if pos[pa] > pos[pb] {
                return Ok(BfdVerdict::Violation {
                    property: BfdProperty::B1,
                    pair: (a, b),
                });
            }
        }
    }
    // B2: degrees non-increasing along the order.
    for i in 1..n {
        let a = ord.order[i - 1];
        let b = ord.order[i];
        if g.degree(a) < g.degree(b) {
            return Ok(BfdVerdict::Violation {
                property: BfdProperty::B2,
                pair: (a, b),
            });
        }
    }
    Ok(BfdVerdict::Ok)
}

fn validate_layering(g: &Graph, ord: &BfdOrdering) -> Result<()> {
    let n = g.vertex_count();
    if ord.order.len() != n || ord.parent.len() != n || ord.height.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering sized for {} vertices, graph has {n}",
            ord.order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &ord.order {
        if v >= n || seen[v] {
            return Err(Error::InvalidOrdering("order is not a permutation".into()));
        }
        seen[v] = true;
    }
    let root = ord.order[0];
    if ord.parent[root].is_some() {
        return Err(Error::InvalidOrdering("root must have no parent".into()));
    }
    let dist = g.bfs_distances(root);
    let pos = ord.positions();
    for v in 0..n {
        if ord.height[v] != dist[v] {
            return Err(Error::InvalidOrdering(format!(
                "height of {v} is {} but its BFS distance from {root} is {}",
                ord.height[v], dist[v]
            )));
        }
    }
    for v in 0..n {
        if v == root {
            continue;
        }
        let p = ord.parent[v].ok_or_else(|| {
            Error::InvalidOrdering(format!("non-root vertex {v} has no parent"))
        })?;
        if !g.has_edge(p, v) {
            return Err(Error::InvalidOrdering(format!(
                "parent edge {{{p}, {v}}} is not in the graph"
            )));
        }
        if ord.height[v] != ord.height[p] + 1 {
            return Err(Error::InvalidOrdering(format!(
                "vertex {v} is not one layer below its parent {p}"
            )));
        }
        if pos[p] >= pos[v] {
            return Err(Error::InvalidOrdering(format!(
                "parent {p} does not precede child {v}"
            )));
        }
        // the parent must be the earliest previous-layer neighbor
        let least = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| ord.height[w] + 1 == ord.height[v])
            .min_by_key(|&w| pos[w])
            .unwrap();
        if least != p {
            return Err(Error::InvalidOrdering(format!(
                "parent of {v} must be its earliest previous-layer neighbor {least}, found {p}"
            )));
        }
    }
    for i in 1..n {
        if ord.height[ord.order[i - 1]] > ord.height[ord.order[i]] {
            return Err(Error::InvalidOrdering(
                "heights must be non-decreasing along the order".into(),
            ));
        }
    }
    Ok(())
}

/// Breadth-first search from `root`, appending newly discovered
/// neighbors under the supplied comparison key.
fn bfs_ordering<K, F>(g: &Graph, root: usize, key: F) -> BfdOrdering
where
    K: Ord,
    F: Fn(usize) -> K,
{
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut height = vec![0; n];
    let mut seen = vec![false; n];
    order.push(root);
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut fresh: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !seen[w])
            .collect();
        fresh.sort_by_key(|&w| key(w));
        for w in fresh {
            seen[w] = true;
            parent[w] = Some(v);
            height[w] = height[v] + 1;
            order.push(w);
        }
    }
    BfdOrdering { order, parent, height }
}

/// Quantizes an `f` value for ordering: ties within [`F_TIE_TOL`] fall
/// back to the vertex index, keeping symmetric vertices deterministic.
fn f_rank(values: &[f64]) -> Vec<usize> {
    let n = values.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .unwrap()
            .then(a.cmp(&b))
    });
    // group near-equal values so that sorting by rank treats them as ties
    let mut rank = vec![0; n];
    let mut group = 0;
    for i in 0..n {
        if i > 0 && values[idx[i - 1]] - values[idx[i]] > F_TIE_TOL {
            group = i;
        }
        rank[idx[i]] = group;
    }
    rank
}

/// Searches for a BFD-ordering of a connected graph.
///
/// With a Perron vector: breadth-first from the maximum of `f`, children
/// sorted by degree (descending), then `f` (descending, ties within
/// [`F_TIE_TOL`] by index). Without: every vertex is tried as root with
/// children sorted by degree then index, and the first ordering that
/// satisfies B1 and B2 is returned.
pub fn find_bfd_ordering(g: &Graph, f: Option<&VertexFunction>) -> Result<Option<BfdOrdering>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    match f {
        Some(f) => {
            if f.len() != n {
                return Err(Error::LengthMismatch {
                    got: f.len(),
                    expected: n,
                });
            }
            let fmax = f.values().iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let root = (0..n).find(|&v| f[v] >= fmax - F_TIE_TOL).unwrap();
            let rank = f_rank(f.values());
            let ord = bfs_ordering(g, root, |w| (std::cmp::Reverse(g.degree(w)), rank[w], w));
            match is_bfd_ordering(g, &ord)? {
                BfdVerdict::Ok => Ok(Some(ord)),
                BfdVerdict::Violation { .. } => Ok(None),
            }
        }
        None => {
            for root in 0..n {
                let ord = bfs_ordering(g, root, |w| (std::cmp::Reverse(g.degree(w)), w));
                if matches!(is_bfd_ordering(g, &ord)?, BfdVerdict::Ok) {
                    return Ok(Some(ord));
                }
            }
            Ok(None)
        }
    }
}

/// True iff the ordering never places a strictly larger `f` value after
/// a smaller one: no pair with `f(u) > f(v) + tol` while `v` precedes `u`.
pub fn perron_consistency_check(g: &Graph, ord: &BfdOrdering, f: &VertexFunction) -> bool {
    let n = g.vertex_count();
    if f.len() != n || ord.order.len() != n {
        return false;
    }
    let mut running_min = f64::INFINITY;
    for &v in &ord.order {
        if f[v] > running_min + F_TIE_TOL {
            return false;
        }
        running_min = running_min.min(f[v]);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::spectral::{default_max_iter, perron, DEFAULT_TOL};

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p3_is_the_only_tree_on_three_vertices() {
        let (g, ord) = construct_bfd_tree(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(ord.root(), 0);
        assert_eq!(ord.height, vec![0, 1, 1]);
    }

    #[test]
    fn k2_works() {
        let (g, _) = construct_bfd_tree(&seq(&[1, 1])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_non_tree_sequence() {
        assert!(matches!(
            construct_bfd_tree(&seq(&[4, 4, 3, 3, 2, 1, 1])),
            Err(Error::NotTreeSequence(_))
        ));
    }

    #[test]
    fn construction_realizes_the_sequence() {
        let pi = seq(&[4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let (g, ord) = construct_bfd_tree(&pi).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence().unwrap(), pi);
        assert!(matches!(is_bfd_ordering(&g, &ord).unwrap(), BfdVerdict::Ok));
    }

    #[test]
    fn matches_published_example_tree() {
        let pi = seq(&[4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let (g, _) = construct_bfd_tree(&pi).unwrap();
        let reference = Graph::from_edges(
            19,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
                (3, 10), (3, 11), (4, 12), (4, 13), (5, 14), (5, 15), (6, 16), (7, 17), (8, 18),
            ],
        )
        .unwrap();
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&reference).unwrap()
        );
    }

    #[test]
    fn large_construction_is_fast_and_valid() {
        // path-like sequence with n = 10_000
        let mut d = vec![2; 10_000];
        d[0] = 1;
        d[1] = 1;
        let pi = seq(&d);
        let (g, _) = construct_bfd_tree(&pi).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence().unwrap(), pi);
    }

    #[test]
    fn spiders() {
        let k13 = spider(&seq(&[3, 1, 1, 1])).unwrap();
        assert_eq!(k13.edges(), vec![(0, 1), (0, 2), (0, 3)]);

        let s = spider(&seq(&[3, 2, 2, 1, 1, 1])).unwrap();
        let mut leg_lengths = leg_profile(&s);
        leg_lengths.sort_unstable();
        assert_eq!(leg_lengths, vec![1, 2, 2]);

        let p4 = spider(&seq(&[2, 2, 1, 1])).unwrap();
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap()
        );

        assert!(matches!(
            spider(&seq(&[3, 3, 2, 1, 1, 1, 1])),
            Err(Error::NotSpiderSequence)
        ));
        assert!(matches!(spider(&seq(&[2, 1, 1, 1, 1])), Err(Error::NotSpiderSequence)));
    }

    fn leg_profile(g: &Graph) -> Vec<usize> {
        // walk each pendant path from the center (vertex of max degree)
        let center = (0..g.vertex_count()).max_by_key(|&v| g.degree(v)).unwrap();
        g.neighbors(center)
            .iter()
            .map(|&start| {
                let mut len = 1;
                let mut prev = center;
                let mut cur = start;
                while g.degree(cur) == 2 {
                    let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect()
    }

    #[test]
    fn spider_agrees_with_bfd_construction() {
        for k in 2..=6 {
            for n in (k + 1)..=14 {
                let mut d = vec![2; n];
                d[0] = k;
                for x in d.iter_mut().rev().take(k) {
                    *x = 1;
                }
                let pi = seq(&d);
                if !pi.is_tree_sequence() {
                    continue;
                }
                let s = spider(&pi).unwrap();
                let (t, _) = construct_bfd_tree(&pi).unwrap();
                assert_eq!(
                    canonical_form(&s).unwrap(),
                    canonical_form(&t).unwrap(),
                    "spider and BFD-tree differ for {pi}"
                );
            }
        }
    }

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn k23_violates_b2_for_every_rooting() {
        let g = k23();
        for root in 0..5 {
            let ord = bfs_ordering(&g, root, |w| (std::cmp::Reverse(g.degree(w)), w));
            match is_bfd_ordering(&g, &ord).unwrap() {
                BfdVerdict::Violation { property: BfdProperty::B2, .. } => {}
                other => panic!("rooting at {root} gave {other:?}"),
            }
        }
        assert!(find_bfd_ordering(&g, None).unwrap().is_none());
    }

    #[test]
    fn fig1_right_identity_order_is_bfd() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (4, 6)],
        )
        .unwrap();
        let ord = BfdOrdering {
            order: (0..7).collect(),
            parent: vec![None, Some(0), Some(0), Some(0), Some(0), Some(1), Some(4)],
            height: vec![0, 1, 1, 1, 1, 2, 2],
        };
        assert_eq!(is_bfd_ordering(&g, &ord).unwrap(), BfdVerdict::Ok);
    }

    #[test]
    fn invalid_layering_is_an_error_not_a_violation() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let ord = BfdOrdering {
            order: vec![0, 2, 1],
            parent: vec![None, Some(0), Some(1)],
            height: vec![0, 1, 2],
        };
        assert!(matches!(is_bfd_ordering(&g, &ord), Err(Error::InvalidOrdering(_))));
    }

    #[test]
    fn find_ordering_on_p3_roots_at_center() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let ord = find_bfd_ordering(&g, None).unwrap().unwrap();
        assert_eq!(ord.root(), 1);
        assert_eq!(ord.order, vec![1, 0, 2]);
    }

    #[test]
    fn find_ordering_fig1_left_with_perron_vector() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        let r = perron(&g, DEFAULT_TOL, default_max_iter(7)).unwrap();
        let ord = find_bfd_ordering(&g, Some(&r.f)).unwrap().expect("is a BFD graph");
        // f(0) = f(1) by symmetry; index tie-break roots at 0
        assert_eq!(ord.root(), 0);
        assert!(perron_consistency_check(&g, &ord, &r.f));
    }

    #[test]
    fn consistency_detects_swaps() {
        let pi = seq(&[3, 2, 2, 1, 1, 1]);
        let (g, ord) = construct_bfd_tree(&pi).unwrap();
        let r = perron(&g, DEFAULT_TOL, default_max_iter(6)).unwrap();
        assert!(perron_consistency_check(&g, &ord, &r.f));
        let mut swapped = ord.order.clone();
        // vertex 3 (a leaf) before vertex 1 (degree 2): f(1) > f(3)
        let p1 = swapped.iter().position(|&v| v == 1).unwrap();
        let p3 = swapped.iter().position(|&v| v == 3).unwrap();
        swapped.swap(p1, p3);
        let bad = BfdOrdering { order: swapped, ..ord };
        assert!(!perron_consistency_check(&g, &bad, &r.f));
    }
}
