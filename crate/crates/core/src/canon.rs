//! Canonical forms for isomorphism testing on small graphs.
//!
//! [`canonical_form`] refines vertices by iterated neighborhood coloring
//! and then brute-forces the minimum adjacency code over all orderings
//! that respect the stable color classes. Two graphs receive equal codes
//! iff they are isomorphic. This is deliberately desk-scale machinery:
//! correctness over speed, with a hard cap on the search space.
//!
//! [`tree_code`] is a much faster rooted-subtree code for trees, used by
//! the enumerators when deduplicating large tree streams.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Opaque isomorphism-invariant byte code. Equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

const SEARCH_CAP: u128 = 10_000_000;

/// Minimum adjacency code over all color-class-respecting vertex
/// orderings. Fails only when the class-respecting search space exceeds
/// an internal cap (highly symmetric graphs well beyond desk scale).
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    let n = g.vertex_count();
    let colors = stable_colors(g);
    let num_colors = colors.iter().max().copied().unwrap_or(0) + 1;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); num_colors];
    for v in 0..n {
        classes[colors[v]].push(v);
    }

    let mut space: u128 = 1;
    for class in &classes {
        for k in 1..=class.len() as u128 {
            space = space.saturating_mul(k);
        }
    }
    if space > SEARCH_CAP {
        return Err(Error::CanonicalTooLarge(space));
    }

    let mut matrix = vec![false; n * n];
    for (u, v) in g.edges() {
        matrix[u * n + v] = true;
        matrix[v * n + u] = true;
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(8);
    let mut best: Option<Vec<u8>> = None;
    let mut ordering = Vec::with_capacity(n);
    min_code_rec(&classes, 0, &mut ordering, &matrix, n, nbytes, &mut best);

    let mut code = Vec::with_capacity(nbytes + 1);
    code.push(n as u8);
    code.extend_from_slice(&best.expect("at least one ordering"));
    Ok(CanonicalCode(code))
}

/// True iff the two graphs are isomorphic.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Iterated color refinement to a stable partition. Initial colors are
/// degree ranks; a round splits classes by the multiset of neighbor
/// colors. Color ids are ranks of sorted signatures, so they are
/// invariant under isomorphism.
fn stable_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut unique_degrees: Vec<usize> = g.degrees();
    unique_degrees.sort_unstable_by(|a, b| b.cmp(a));
    unique_degrees.dedup();
    let mut colors: Vec<usize> = (0..n)
        .map(|v| unique_degrees.iter().position(|&d| d == g.degree(v)).unwrap())
        .collect();
    let mut num_colors = unique_degrees.len();

    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut unique = sigs.clone();
        unique.sort();
        unique.dedup();
        if unique.len() == num_colors {
            return colors;
        }
        num_colors = unique.len();
        for v in 0..n {
            colors[v] = unique.binary_search(&sigs[v]).unwrap();
        }
    }
}

fn min_code_rec(
    classes: &[Vec<usize>],
    class_idx: usize,
    ordering: &mut Vec<usize>,
    matrix: &[bool],
    n: usize,
    nbytes: usize,
    best: &mut Option<Vec<u8>>,
) {
    if class_idx == classes.len() {
        let code = pack_code(ordering, matrix, n, nbytes);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let mut perm = classes[class_idx].clone();
    loop {
        let len_before = ordering.len();
        ordering.extend_from_slice(&perm);
        min_code_rec(classes, class_idx + 1, ordering, matrix, n, nbytes, best);
        ordering.truncate(len_before);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn pack_code(ordering: &[usize], matrix: &[bool], n: usize, nbytes: usize) -> Vec<u8> {
    let mut code = vec![0u8; nbytes];
    let mut bit = 0;
    for i in 0..n {
        let row = ordering[i] * n;
        for &vj in &ordering[i + 1..n] {
            if matrix[row + vj] {
                code[bit >> 3] |= 0x80 >> (bit & 7);
            }
            bit += 1;
        }
    }
    code
}

/// Advances `items` to its next lexicographic permutation, returning
/// `false` after the last one. Handles repeated elements.
pub(crate) fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Linear-time canonical code for trees: the sorted rooted-subtree code
/// taken at the centroid (or the smaller of the two centroid rootings).
pub fn tree_code(g: &Graph) -> Result<Vec<u8>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let centroids = centroids(g);
    let mut best: Option<Vec<u8>> = None;
    for &c in &centroids {
        let code = rooted_code(g, c);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    Ok(best.unwrap())
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return vec![0];
    }
    // subtree sizes from an iterative DFS rooted at 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for v in 0..n {
        let mut worst = n - size[v];
        for &w in g.neighbors(v) {
            if parent[w] == v {
                worst = worst.max(size[w]);
            }
        }
        match worst.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = worst;
                out = vec![v];
            }
            std::cmp::Ordering::Equal => out.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    let n = g.vertex_count();
    // iterative post-order: children codes are sorted and wrapped in ( )
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children_codes[v]);
        kids.sort();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for kid in kids {
            code.extend_from_slice(&kid);
        }
        code.push(b')');
        if parent[v] != usize::MAX {
            children_codes[parent[v]].push(code.clone());
        }
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}
