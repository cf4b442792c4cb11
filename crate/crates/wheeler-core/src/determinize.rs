//! Wheeler-preserving determinization.
//!
//! The states of the output are the intervals of input states reached by
//! each readable word, discovered by forward BFS from the singleton interval
//! holding the initial state. Keeping intervals instead of arbitrary subsets
//! is what bounds the output at `2n - 1 - |alphabet|` states.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::automaton::{StateLabel, StateLabeledNfa};
use crate::order::{check_wheeler, StateInterval, Violation, WheelerOrder};

/// An output state of the determinization: a label-homogeneous interval of
/// input states (as order positions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalState {
    pub interval: StateInterval,
    pub label: StateLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeterminizeError {
    /// The claimed order fails the Wheeler axioms.
    NotWheeler(Vec<Violation>),
    /// No state carries this symbol rank, so the size bound does not apply.
    UnlabeledSymbol(usize),
}

impl fmt::Display for DeterminizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeterminizeError::NotWheeler(vs) => {
                write!(f, "input order is not Wheeler ({} violations)", vs.len())
            }
            DeterminizeError::UnlabeledSymbol(sym) => {
                write!(f, "no state is labeled with symbol rank {sym}")
            }
        }
    }
}

impl core::error::Error for DeterminizeError {}

/// Determinizes a Wheeler NFA into a Wheeler DFA over interval states.
///
/// Requires a valid order and that every alphabet symbol labels at least one
/// state; the output then has at most `2n - 1 - |alphabet|` states, accepts
/// the same language, and its returned order is again Wheeler.
pub fn wheeler_determinize(
    a: &StateLabeledNfa,
    ord: &WheelerOrder,
) -> Result<(StateLabeledNfa, WheelerOrder), DeterminizeError> {
    let violations = check_wheeler(a, ord);
    if !violations.is_empty() {
        return Err(DeterminizeError::NotWheeler(violations));
    }
    for sym in 0..a.alphabet().len() {
        if !(0..a.state_count()).any(|q| a.label(q) == Some(sym)) {
            return Err(DeterminizeError::UnlabeledSymbol(sym));
        }
    }
    Ok(determinize_unchecked(a, ord))
}

/// Determinization core without precondition checks. The caller must ensure
/// `ord` is a Wheeler order for `a`, otherwise reached state sets need not
/// be intervals and this panics.
pub(crate) fn determinize_unchecked(
    a: &StateLabeledNfa,
    ord: &WheelerOrder,
) -> (StateLabeledNfa, WheelerOrder) {
    let k = a.alphabet().len();
    let start = IntervalState { interval: StateInterval::new(0, 0), label: None };
    let mut ids: BTreeMap<(StateLabel, usize, usize), usize> = BTreeMap::new();
    ids.insert((None, 0, 0), 0);
    let mut states = vec![start];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let cur = states[head];
        for sym in 0..k {
            let mut image: Vec<usize> = Vec::new();
            for pos in cur.interval.positions() {
                let q = ord.state_at(pos);
                for t in a.successors_by(q, sym) {
                    image.push(ord.position(t));
                }
            }
            image.sort_unstable();
            image.dedup();
            if image.is_empty() {
                continue;
            }
            let (lo, hi) = (image[0], *image.last().unwrap());
            assert_eq!(
                image.len(),
                hi - lo + 1,
                "image of an interval under a Wheeler order must be an interval"
            );
            let key = (Some(sym), lo, hi);
            let next = *ids.entry(key).or_insert_with(|| {
                states.push(IntervalState {
                    interval: StateInterval::new(lo, hi),
                    label: Some(sym),
                });
                states.len() - 1
            });
            edges.push((head, next));
        }
        head += 1;
    }

    let finals: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, st)| {
            st.interval
                .positions()
                .any(|pos| a.is_final(ord.state_at(pos)))
        })
        .map(|(i, _)| i)
        .collect();
    let labels: Vec<StateLabel> = states.iter().map(|st| st.label).collect();
    let out = StateLabeledNfa::new(a.alphabet().clone(), labels, &edges, &finals).unwrap();

    // Interval order: ascending (lo + hi) within ascending label rank. Two
    // distinct intervals of a prefix/suffix family never share lo + hi.
    let mut perm: Vec<usize> = (0..states.len()).collect();
    perm.sort_by_key(|&i| {
        let st = &states[i];
        (st.label, st.interval.lo + st.interval.hi)
    });
    let out_ord = WheelerOrder::from_perm(perm).expect("initial interval sorts first");
    (out, out_ord)
}

/// The extremal prefix/suffix family over a linear order of `n` elements:
/// one maximal interval plus all of its proper prefixes and suffixes, of
/// size exactly `2n - 1`. Intervals are returned as inclusive position
/// pairs.
pub fn tight_interval_family(n: usize) -> Vec<(usize, usize)> {
    assert!(n >= 1);
    let mut family = vec![(0, n - 1)];
    for hi in 0..n - 1 {
        family.push((0, hi));
    }
    for lo in 1..n {
        family.push((lo, n - 1));
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::OrderedAlphabet;

    #[test]
    fn already_deterministic_input_is_isomorphic() {
        // Path automaton of "ab": intervals stay singletons.
        let al = OrderedAlphabet::new(&['a', 'b']).unwrap();
        let a = StateLabeledNfa::new(
            al,
            vec![None, Some(0), Some(1)],
            &[(0, 1), (1, 2)],
            &[2],
        )
        .unwrap();
        let ord = WheelerOrder::identity(3);
        let (det, det_ord) = wheeler_determinize(&a, &ord).unwrap();
        assert_eq!(det.state_count(), 3);
        assert!(crate::order::order_isomorphic(&a, &ord, &det, &det_ord));
    }

    #[test]
    fn unary_nfa_with_nested_intervals() {
        // # -> a1, # -> a2, a1 -> a1; a2 is reached by "a" only while a1 is
        // reached by every a^k, so the unique Wheeler order is #, a2, a1.
        let al = OrderedAlphabet::new(&['a']).unwrap();
        let a = StateLabeledNfa::new(
            al,
            vec![None, Some(0), Some(0)],
            &[(0, 1), (0, 2), (1, 1)],
            &[1, 2],
        )
        .unwrap();
        let ord = WheelerOrder::from_perm(vec![0, 2, 1]).unwrap();
        assert!(check_wheeler(&a, &ord).is_empty());
        let (det, det_ord) = wheeler_determinize(&a, &ord).unwrap();
        // Intervals: {#}, {a2,a1}, {a1}; bound 2n - 1 - |alphabet| = 4.
        assert_eq!(det.state_count(), 3);
        assert!(det.state_count() <= 2 * 3 - 1 - 1);
        assert!(check_wheeler(&det, &det_ord).is_empty());
        for k in 0..5 {
            let w = crate::alphabet::Word::from_ranks(vec![0; k]);
            assert_eq!(det.accepts(&w), k >= 1, "a^{k}");
        }
    }

    #[test]
    fn missing_symbol_is_reported() {
        let al = OrderedAlphabet::new(&['a', 'b']).unwrap();
        let a = StateLabeledNfa::new(al, vec![None, Some(0)], &[(0, 1)], &[1]).unwrap();
        let ord = WheelerOrder::identity(2);
        assert_eq!(
            wheeler_determinize(&a, &ord),
            Err(DeterminizeError::UnlabeledSymbol(1))
        );
    }

    #[test]
    fn tight_family_size_and_prefix_suffix_property() {
        for n in 1..8 {
            let fam = tight_interval_family(n);
            assert_eq!(fam.len(), 2 * n - 1);
            // Pairwise distinct lo+hi keys order the family linearly.
            let mut keys: Vec<usize> = fam.iter().map(|&(lo, hi)| lo + hi).collect();
            keys.sort_unstable();
            keys.dedup();
            assert_eq!(keys.len(), fam.len());
            // Containment implies prefix or suffix.
            for &(lo1, hi1) in &fam {
                for &(lo2, hi2) in &fam {
                    if lo2 <= lo1 && hi1 <= hi2 && (lo1, hi1) != (lo2, hi2) {
                        assert!(lo1 == lo2 || hi1 == hi2);
                    }
                }
            }
        }
    }
}
