//! Exhaustive ground truth at desk scale.
//!
//! Enumerates one representative per isomorphism class of the trees or
//! connected graphs realizing a degree sequence, locates the graphs of
//! largest and smallest spectral radius, and runs the certification
//! sweeps used by `verify`. Brute force is the point here: the
//! enumerators are the independent oracle against which the constructive
//! results are checked.

use std::collections::HashSet;

use crate::bfd::{construct_bfd_tree, find_bfd_ordering, perron_consistency_check};
use crate::canon::{canonical_form, next_permutation, tree_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::io::write_graph6;
use crate::majorization::{chain, compare, monotonicity_check, SeqOrder};
use crate::spectral::{default_max_iter, perron, DEFAULT_TOL};
use crate::transforms::decode_pruefer;

/// Largest `n` accepted by [`enumerate_trees`] unless overridden.
pub const DEFAULT_MAX_TREE_N: usize = 12;
/// Largest `n` accepted by [`enumerate_connected_graphs`] unless overridden.
pub const DEFAULT_MAX_CONNECTED_N: usize = 8;

/// Which realization class an oracle query ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Trees,
    Connected,
}

/// Number of labeled trees in which vertex `i` has degree `d_i`:
/// the multinomial `(n-2)! / prod (d_i - 1)!`.
pub fn count_labeled_trees(pi: &DegreeSequence) -> Result<u64> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence(pi.to_string()));
    }
    let n = pi.len() as u64;
    if n == 2 {
        return Ok(1);
    }
    let numerator: u64 = (1..=n - 2).product();
    let denominator: u64 = pi
        .degrees()
        .iter()
        .map(|&d| (1..d as u64).product::<u64>())
        .product();
    Ok(numerator / denominator)
}

/// One representative per isomorphism class of the trees realizing a
/// tree sequence, via distinct arrangements of the code multiset in
/// which vertex `i` appears `d_i - 1` times, deduplicated by tree code.
/// Representatives appear in lexicographic code order.
pub fn enumerate_trees(pi: &DegreeSequence, max_n: usize) -> Result<Vec<Graph>> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence(pi.to_string()));
    }
    let n = pi.len();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    if n == 2 {
        return Ok(vec![Graph::from_edges(2, &[(0, 1)])?]);
    }
    let mut code = Vec::with_capacity(n - 2);
    for (i, &d) in pi.degrees().iter().enumerate() {
        code.extend(std::iter::repeat_n(i, d - 1));
    }
    code.sort_unstable();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let g = decode_pruefer(&code, n)?;
        if seen.insert(tree_code(&g)?) {
            out.push(g);
        }
        if !next_permutation(&mut code) {
            break;
        }
    }
    Ok(out)
}

/// Number of decoded labeled trees for a sequence, by walking the same
/// multiset permutations as [`enumerate_trees`] without deduplication.
pub fn count_decoded_trees(pi: &DegreeSequence, max_n: usize) -> Result<u64> {
    if !pi.is_tree_sequence() {
        return Err(Error::NotTreeSequence(pi.to_string()));
    }
    let n = pi.len();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    if n == 2 {
        return Ok(1);
    }
    let mut code = Vec::with_capacity(n - 2);
    for (i, &d) in pi.degrees().iter().enumerate() {
        code.extend(std::iter::repeat_n(i, d - 1));
    }
    code.sort_unstable();
    let mut count = 1u64;
    while next_permutation(&mut code) {
        count += 1;
    }
    Ok(count)
}

/// One representative per isomorphism class of the connected graphs in
/// which vertex `i` has degree `d_i`, by backtracking over neighbor
/// choices in lexicographic order with residual-degree pruning.
/// Also returns the number of labeled connected realizations visited.
pub fn enumerate_connected_graphs_counted(
    pi: &DegreeSequence,
    max_n: usize,
) -> Result<(Vec<Graph>, u64)> {
    if !pi.is_connected_graphical() {
        return Err(Error::NotConnectedGraphical);
    }
    let n = pi.len();
    if n > max_n {
        return Err(Error::EnumerationLimit { n, limit: max_n });
    }
    let mut residual: Vec<usize> = pi.degrees().to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    let mut labeled = 0u64;
    backtrack(n, 0, &mut residual, &mut edges, &mut seen, &mut out, &mut labeled)?;
    Ok((out, labeled))
}

/// [`enumerate_connected_graphs_counted`] without the labeled count.
pub fn enumerate_connected_graphs(pi: &DegreeSequence, max_n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_graphs_counted(pi, max_n)?.0)
}

fn backtrack(
    n: usize,
    u: usize,
    residual: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    seen: &mut HashSet<CanonicalCode>,
    out: &mut Vec<Graph>,
    labeled: &mut u64,
) -> Result<()> {
    if u == n {
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            *labeled += 1;
            if seen.insert(canonical_form(&g)?) {
                out.push(g);
            }
        }
        return Ok(());
    }
    let need = residual[u];
    if need == 0 {
        return backtrack(n, u + 1, residual, edges, seen, out, labeled);
    }
    let candidates: Vec<usize> = (u + 1..n).filter(|&w| residual[w] > 0).collect();
    if need > candidates.len() {
        return Ok(());
    }
    let mut choice = vec![0usize; need];
    pick_combination(
        n, u, &candidates, need, 0, 0, &mut choice, residual, edges, seen, out, labeled,
    )
}

#[allow(clippy::too_many_arguments)]
fn pick_combination(
    n: usize,
    u: usize,
    candidates: &[usize],
    need: usize,
    depth: usize,
    start: usize,
    choice: &mut Vec<usize>,
    residual: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    seen: &mut HashSet<CanonicalCode>,
    out: &mut Vec<Graph>,
    labeled: &mut u64,
) -> Result<()> {
    if depth == need {
        for &w in choice.iter() {
            residual[w] -= 1;
            edges.push((u, w));
        }
        residual[u] = 0;
        backtrack(n, u + 1, residual, edges, seen, out, labeled)?;
        residual[u] = need;
        for &w in choice.iter() {
            residual[w] += 1;
            edges.pop();
        }
        return Ok(());
    }
    // not enough candidates left to finish the combination
    for i in start..candidates.len() {
        if candidates.len() - i < need - depth {
            break;
        }
        choice[depth] = candidates[i];
        pick_combination(
            n, u, candidates, need, depth + 1, i + 1, choice, residual, edges, seen, out, labeled,
        )?;
    }
    Ok(())
}

/// Extremal summary of one degree class.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub sequence: DegreeSequence,
    /// Labeled realizations with the fixed degree assignment `d_i -> i`
    /// (all labeled trees, or all connected labeled graphs).
    pub count_labeled: u64,
    pub count_iso_classes: usize,
    pub argmax: Graph,
    pub lambda_max: f64,
    pub argmin: Graph,
    pub lambda_min: f64,
}

/// Enumerates a class and reports the graphs of largest and smallest
/// spectral radius. Exact λ ties are broken toward the smaller canonical
/// code so reports are reproducible.
pub fn extremal_report(
    pi: &DegreeSequence,
    class: GraphClass,
    max_n: usize,
) -> Result<EnumerationReport> {
    let (reps, count_labeled) = match class {
        GraphClass::Trees => {
            let reps = enumerate_trees(pi, max_n)?;
            (reps, count_labeled_trees(pi)?)
        }
        GraphClass::Connected => enumerate_connected_graphs_counted(pi, max_n)?,
    };
    let mut best: Option<(f64, usize)> = None;
    let mut worst: Option<(f64, usize)> = None;
    let lambdas: Vec<f64> = reps
        .iter()
        .map(|g| {
            debug_assert!(g.is_connected());
            debug_assert_eq!(&g.degree_sequence().unwrap(), pi);
            perron(g, DEFAULT_TOL, default_max_iter(g.vertex_count())).map(|r| r.lambda)
        })
        .collect::<Result<_>>()?;
    for (i, &lambda) in lambdas.iter().enumerate() {
        let better = |cur: &Option<(f64, usize)>, want_max: bool| -> Result<bool> {
            let Some((cur_l, cur_i)) = *cur else { return Ok(true) };
            if (lambda - cur_l).abs() <= 1e-12 {
                return Ok(canonical_form(&reps[i])? < canonical_form(&reps[cur_i])?);
            }
            Ok(if want_max { lambda > cur_l } else { lambda < cur_l })
        };
        if better(&best, true)? {
            best = Some((lambda, i));
        }
        if better(&worst, false)? {
            worst = Some((lambda, i));
        }
    }
    let (lambda_max, imax) = best.expect("class is non-empty");
    let (lambda_min, imin) = worst.expect("class is non-empty");
    Ok(EnumerationReport {
        sequence: pi.clone(),
        count_labeled,
        count_iso_classes: reps.len(),
        argmax: reps[imax].clone(),
        lambda_max,
        argmin: reps[imin].clone(),
        lambda_min,
    })
}

/// All tree sequences on `n` vertices (partitions of `2(n-1)` into `n`
/// positive non-increasing parts), in descending lexicographic order.
pub fn all_tree_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut parts = Vec::with_capacity(n);
    gen_partitions(2 * (n - 1), n, n - 1, &mut parts, &mut |p| {
        out.push(DegreeSequence::new(p.to_vec()).expect("positive parts"));
    });
    out
}

/// All connected-graphical sequences on `n` vertices, in descending
/// lexicographic order.
pub fn all_connected_graphical_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let lo = 2 * (n - 1);
    let hi = n * (n - 1);
    for sum in (lo..=hi).filter(|s| s % 2 == 0) {
        let mut parts = Vec::with_capacity(n);
        gen_partitions(sum, n, n - 1, &mut parts, &mut |p| {
            let pi = DegreeSequence::new(p.to_vec()).expect("positive parts");
            if pi.is_connected_graphical() {
                out.push(pi);
            }
        });
    }
    out.sort_by(|a, b| b.degrees().cmp(a.degrees()));
    out
}

fn gen_partitions(
    sum: usize,
    parts: usize,
    max_part: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if parts == 0 {
        if sum == 0 {
            emit(acc);
        }
        return;
    }
    // remaining parts are at least 1 each and at most `cap` each
    let cap = max_part.min(sum.saturating_sub(parts - 1));
    for part in (1..=cap).rev() {
        if part * parts < sum {
            break;
        }
        acc.push(part);
        gen_partitions(sum - part, parts - 1, part, acc, emit);
        acc.pop();
    }
}

/// A sweep failure: the sequence, what went wrong, and a graph6 witness.
#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub sequence: DegreeSequence,
    pub detail: String,
    pub witness_graph6: Option<String>,
}

/// Aggregate result of a certification sweep.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one sequence for the necessary-condition sweep: the maximizer
/// of the connected class must admit a Perron-consistent BFD-ordering.
pub fn check_connected_maximizer_is_bfd(
    pi: &DegreeSequence,
    max_n: usize,
) -> Result<Option<SweepFailure>> {
    let report = extremal_report(pi, GraphClass::Connected, max_n)?;
    let g = &report.argmax;
    let res = perron(g, DEFAULT_TOL, default_max_iter(g.vertex_count()))?;
    let fail = |detail: String| -> Result<Option<SweepFailure>> {
        Ok(Some(SweepFailure {
            sequence: pi.clone(),
            detail,
            witness_graph6: Some(write_graph6(g)?),
        }))
    };
    match find_bfd_ordering(g, Some(&res.f))? {
        None => fail("maximizer admits no BFD-ordering".into()),
        Some(ord) => {
            if !perron_consistency_check(g, &ord, &res.f) {
                fail("BFD-ordering is not consistent with the Perron vector".into())
            } else {
                Ok(None)
            }
        }
    }
}

/// Checks one sequence for the uniqueness sweep: the constructed tree
/// must be the unique spectral-radius maximizer among all trees.
pub fn check_tree_maximizer_is_constructed(
    pi: &DegreeSequence,
    max_n: usize,
) -> Result<Option<SweepFailure>> {
    let reps = enumerate_trees(pi, max_n)?;
    let (built, _) = construct_bfd_tree(pi)?;
    let built_code = canonical_form(&built)?;
    let mut best = f64::NEG_INFINITY;
    let mut lambdas = Vec::with_capacity(reps.len());
    for g in &reps {
        let lambda = perron(g, DEFAULT_TOL, default_max_iter(g.vertex_count()))?.lambda;
        best = best.max(lambda);
        lambdas.push(lambda);
    }
    let near_best: Vec<usize> = (0..reps.len())
        .filter(|&i| lambdas[i] >= best - 1e-9)
        .collect();
    if near_best.len() != 1 {
        return Ok(Some(SweepFailure {
            sequence: pi.clone(),
            detail: format!("{} trees attain the maximum within 1e-9", near_best.len()),
            witness_graph6: Some(write_graph6(&reps[near_best[0]])?),
        }));
    }
    let argmax = &reps[near_best[0]];
    if canonical_form(argmax)? != built_code {
        return Ok(Some(SweepFailure {
            sequence: pi.clone(),
            detail: "enumeration maximizer differs from the constructed tree".into(),
            witness_graph6: Some(write_graph6(argmax)?),
        }));
    }
    Ok(None)
}

/// Checks all comparable pairs of tree sequences on `n` vertices:
/// strictly larger sequences must give strictly larger spectral radii,
/// and the elementary chain between them must be valid and monotone.
pub fn check_majorization_on(n: usize) -> Result<SweepReport> {
    let seqs = all_tree_sequences(n);
    let mut lambdas = Vec::with_capacity(seqs.len());
    for pi in &seqs {
        let (tree, _) = construct_bfd_tree(pi)?;
        lambdas.push(perron(&tree, DEFAULT_TOL, default_max_iter(n))?.lambda);
    }
    let mut report = SweepReport::default();
    for i in 0..seqs.len() {
        for j in 0..seqs.len() {
            if i == j {
                continue;
            }
            if compare(&seqs[i], &seqs[j])? != SeqOrder::Less {
                continue;
            }
            report.checked += 1;
            if lambdas[i] >= lambdas[j] - 1e-10 {
                report.failures.push(SweepFailure {
                    sequence: seqs[i].clone(),
                    detail: format!(
                        "{} below {} but lambda {:.12} !< {:.12}",
                        seqs[i], seqs[j], lambdas[i], lambdas[j]
                    ),
                    witness_graph6: None,
                });
                continue;
            }
            let c = chain(&seqs[i], &seqs[j])?;
            if !monotonicity_check(&c)? {
                report.failures.push(SweepFailure {
                    sequence: seqs[i].clone(),
                    detail: format!("chain toward {} is not strictly monotone", seqs[j]),
                    witness_graph6: None,
                });
            }
        }
    }
    Ok(report)
}

/// Sweep for the necessary condition on connected maximizers, over all
/// connected-graphical sequences with `2 <= n <= max_n`.
pub fn verify_theorem1(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 2..=max_n {
        for pi in all_connected_graphical_sequences(n) {
            report.checked += 1;
            if let Some(f) = check_connected_maximizer_is_bfd(&pi, max_n)? {
                report.failures.push(f);
            }
        }
    }
    Ok(report)
}

/// Sweep for uniqueness of the constructed tree maximizer, over all tree
/// sequences with `4 <= n <= max_n`.
pub fn verify_theorem2(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 4..=max_n {
        for pi in all_tree_sequences(n) {
            report.checked += 1;
            if let Some(f) = check_tree_maximizer_is_constructed(&pi, max_n)? {
                report.failures.push(f);
            }
        }
    }
    Ok(report)
}

/// Sweep for strict monotonicity under majorization, over all comparable
/// pairs of tree sequences with `2 <= n <= max_n`.
pub fn verify_theorem3(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 2..=max_n {
        let sub = check_majorization_on(n)?;
        report.checked += sub.checked;
        report.failures.extend(sub.failures);
    }
    Ok(report)
}
