//! The majorization partial order on degree sequences and step chains.
//!
//! For non-increasing sequences of equal length, `a` is below `b` when
//! every prefix sum of `a` is at most the corresponding prefix sum of
//! `b`. Between two comparable tree sequences, [`chain`] produces the
//! elementary chain in which consecutive sequences differ in exactly two
//! positions by plus and minus one; the spectral radius of the
//! corresponding maximizing trees is strictly monotone along it.

use crate::bfd::construct_bfd_tree;
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::spectral::{default_max_iter, perron, DEFAULT_TOL};

/// Outcome of comparing two degree sequences under prefix-sum dominance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Compares `a` and `b` by prefix-sum dominance. Errors on a length
/// mismatch; sequences are already stored non-increasingly.
pub fn compare(a: &DegreeSequence, b: &DegreeSequence) -> Result<SeqOrder> {
    if a.len() != b.len() {
        return Err(Error::SequenceLengthMismatch(a.len(), b.len()));
    }
    let mut any_less = false;
    let mut any_greater = false;
    let mut sa = 0usize;
    let mut sb = 0usize;
    for (&da, &db) in a.degrees().iter().zip(b.degrees()) {
        sa += da;
        sb += db;
        if sa < sb {
            any_less = true;
        }
        if sa > sb {
            any_greater = true;
        }
    }
    Ok(match (any_less, any_greater) {
        (false, false) => SeqOrder::Equal,
        (true, false) => SeqOrder::Less,
        (false, true) => SeqOrder::Greater,
        (true, true) => SeqOrder::Incomparable,
    })
}

/// A chain of tree sequences in which each consecutive pair differs in
/// exactly two positions by plus and minus one, strictly ascending.
#[derive(Clone, Debug)]
pub struct MajorizationChain {
    pub sequences: Vec<DegreeSequence>,
}

impl MajorizationChain {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }
}

/// Builds the elementary chain from `from` up to `to`.
///
/// Repeatedly: at the first position `j` where the current sequence
/// differs from `to` (necessarily from below), add one at `j`, subtract
/// one at `j + 1`, and re-sort non-increasingly. Both endpoints are
/// included. Every intermediate is validated to be a tree sequence and
/// strictly above its predecessor; a violation is a logic error and
/// panics loudly rather than returning a corrupt chain.
pub fn chain(from: &DegreeSequence, to: &DegreeSequence) -> Result<MajorizationChain> {
    for s in [from, to] {
        if !s.is_tree_sequence() {
            return Err(Error::NotTreeSequence(s.to_string()));
        }
    }
    match compare(from, to)? {
        SeqOrder::Less => {}
        other => {
            return Err(Error::NotComparable(format!(
                "{from} vs {to}: {other:?}, expected strictly below"
            )))
        }
    }
    let n = from.len();
    // each step raises the total prefix-sum deficit by at least one
    let bound: usize = {
        let (mut sa, mut sb, mut total) = (0usize, 0usize, 0usize);
        for (&da, &db) in from.degrees().iter().zip(to.degrees()) {
            sa += da;
            sb += db;
            total += sb - sa;
        }
        total
    };
    let mut sequences = vec![from.clone()];
    let mut cur: Vec<usize> = from.degrees().to_vec();
    let target = to.degrees();
    for _step in 0..bound {
        if cur == target {
            break;
        }
        let j = (0..n).find(|&i| cur[i] != target[i]).expect("differs");
        assert!(
            cur[j] < target[j],
            "first differing position must be below the target"
        );
        assert!(j + 1 < n && cur[j + 1] >= 2, "decrement must keep degrees positive");
        cur[j] += 1;
        cur[j + 1] -= 1;
        cur.sort_unstable_by(|a, b| b.cmp(a));
        let next = DegreeSequence::new(cur.clone()).expect("positive entries");
        assert!(next.is_tree_sequence(), "intermediate {next} is not a tree sequence");
        assert_eq!(
            compare(sequences.last().unwrap(), &next).unwrap(),
            SeqOrder::Less,
            "chain must ascend strictly"
        );
        sequences.push(next);
    }
    assert_eq!(cur, target, "chain must reach the target sequence");
    Ok(MajorizationChain { sequences })
}

/// True iff the spectral radii of the maximizing trees are strictly
/// increasing along the chain, with margin `1e-10`.
pub fn monotonicity_check(chain: &MajorizationChain) -> Result<bool> {
    let mut prev = f64::NEG_INFINITY;
    for pi in &chain.sequences {
        let (tree, _) = construct_bfd_tree(pi)?;
        let lambda = perron(&tree, DEFAULT_TOL, default_max_iter(pi.len()))?.lambda;
        if lambda <= prev + 1e-10 && prev != f64::NEG_INFINITY {
            return Ok(false);
        }
        prev = lambda;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            compare(&seq(&[2, 2, 1, 1]), &seq(&[3, 1, 1, 1])).unwrap(),
            SeqOrder::Less
        );
        assert_eq!(
            compare(&seq(&[3, 1, 1, 1]), &seq(&[2, 2, 1, 1])).unwrap(),
            SeqOrder::Greater
        );
        let pi = seq(&[3, 2, 2, 1, 1, 1]);
        assert_eq!(compare(&pi, &pi).unwrap(), SeqOrder::Equal);
        assert!(matches!(
            compare(&seq(&[3, 3, 1, 1, 1, 1]), &seq(&[4, 2, 2, 1, 1])),
            Err(Error::SequenceLengthMismatch(6, 5))
        ));
    }

    #[test]
    fn incomparable_tree_sequences() {
        // n = 9 tree sequences with crossing prefix sums
        let a = seq(&[4, 4, 2, 1, 1, 1, 1, 1, 1]);
        let b = seq(&[5, 2, 2, 2, 1, 1, 1, 1, 1]);
        assert!(a.is_tree_sequence() && b.is_tree_sequence());
        assert_eq!(compare(&a, &b).unwrap(), SeqOrder::Incomparable);
    }

    #[test]
    fn single_step_chain() {
        let c = chain(&seq(&[2, 2, 2, 1, 1]), &seq(&[3, 2, 1, 1, 1])).unwrap();
        assert_eq!(c.sequences.len(), 2);
        assert_eq!(c.sequences[1].degrees(), &[3, 2, 1, 1, 1]);
    }

    #[test]
    fn path_to_star_chain() {
        let c = chain(&seq(&[2, 2, 2, 2, 1, 1]), &seq(&[5, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(c.sequences.len(), 4);
        for pair in c.sequences.windows(2) {
            assert_eq!(compare(&pair[0], &pair[1]).unwrap(), SeqOrder::Less);
            assert!(pair[1].is_tree_sequence());
            // exactly two positions differ, by +1 and -1
            let diffs: Vec<i64> = pair[0]
                .degrees()
                .iter()
                .zip(pair[1].degrees())
                .map(|(&x, &y)| y as i64 - x as i64)
                .filter(|&d| d != 0)
                .collect();
            let mut sorted = diffs.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![-1, 1]);
        }
        assert!(monotonicity_check(&c).unwrap());
    }

    #[test]
    fn chain_rejects_equal_and_incomparable() {
        let pi = seq(&[2, 2, 1, 1]);
        assert!(matches!(chain(&pi, &pi), Err(Error::NotComparable(_))));
        let a = seq(&[4, 4, 2, 1, 1, 1, 1, 1, 1]);
        let b = seq(&[5, 2, 2, 2, 1, 1, 1, 1, 1]);
        assert!(matches!(chain(&a, &b), Err(Error::NotComparable(_))));
        assert!(matches!(
            chain(&seq(&[3, 1, 1, 1]), &seq(&[2, 2, 1, 1])),
            Err(Error::NotComparable(_))
        ));
        assert!(matches!(
            chain(&seq(&[2, 2, 2, 1, 1]), &seq(&[3, 3, 2, 2, 2])),
            Err(Error::NotTreeSequence(_))
        ));
    }

    #[test]
    fn p4_to_star_lambda_grows() {
        let c = chain(&seq(&[2, 2, 1, 1]), &seq(&[3, 1, 1, 1])).unwrap();
        assert!(monotonicity_check(&c).unwrap());
    }

    #[test]
    fn vacuous_chain_is_monotone() {
        let c = MajorizationChain {
            sequences: vec![seq(&[2, 2, 1, 1])],
        };
        assert!(monotonicity_check(&c).unwrap());
    }
}
