//! Wheeler orders: validation against the two Wheeler axioms, the interval
//! of states reached by a word, the convex set of words reaching a state,
//! and reducedness.
//!
//! For a state-labeled automaton, a total order `<` on states is a Wheeler
//! order when the initial state is the minimum with no incoming edges and,
//! for any edges `u1 -> v1` and `u2 -> v2`,
//!
//! * (i) `label(v1) < label(v2)` implies `v1 < v2`, and
//! * (ii) `label(v1) = label(v2)` and `u1 < u2` imply `v1 <= v2`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::Word;
use crate::automaton::{state_to_edge_labeled, StateLabeledNfa};
use crate::ops::language_equiv;

/// A total order on the states of an automaton, as a permutation of
/// `0..n` whose first entry is the initial state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelerOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

/// Errors rejected when building a [`WheelerOrder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderError {
    NotAPermutation,
    InitialNotFirst,
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::NotAPermutation => write!(f, "order is not a permutation of the states"),
            OrderError::InitialNotFirst => write!(f, "order must start with the initial state 0"),
        }
    }
}

impl core::error::Error for OrderError {}

impl WheelerOrder {
    /// Builds an order from the ascending sequence of states.
    pub fn from_perm(perm: Vec<usize>) -> Result<Self, OrderError> {
        let n = perm.len();
        if perm.first() != Some(&0) {
            return Err(OrderError::InitialNotFirst);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &q) in perm.iter().enumerate() {
            if q >= n || pos[q] != usize::MAX {
                return Err(OrderError::NotAPermutation);
            }
            pos[q] = i;
        }
        Ok(WheelerOrder { perm, pos })
    }

    /// The identity order on `n` states.
    pub fn identity(n: usize) -> Self {
        WheelerOrder { perm: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// State at position `i`.
    pub fn state_at(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Position of state `q`.
    pub fn position(&self, q: usize) -> usize {
        self.pos[q]
    }

    /// States in ascending order.
    pub fn states(&self) -> &[usize] {
        &self.perm
    }

    /// Induced order on the sub-automaton keeping exactly `keep` (ascending
    /// state ids, containing 0), matching the renumbering of
    /// `StateLabeledNfa::restrict_to`.
    pub(crate) fn restrict_to(&self, keep: &[usize]) -> WheelerOrder {
        let mut new_id = vec![usize::MAX; self.perm.len()];
        for (i, &q) in keep.iter().enumerate() {
            new_id[q] = i;
        }
        let perm: Vec<usize> = self
            .perm
            .iter()
            .filter(|&&q| new_id[q] != usize::MAX)
            .map(|&q| new_id[q])
            .collect();
        WheelerOrder::from_perm(perm).expect("restriction of a permutation")
    }
}

/// A nonempty interval of positions in a [`WheelerOrder`], both ends
/// inclusive. Absence (the empty interval) is modeled with `Option`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateInterval {
    pub lo: usize,
    pub hi: usize,
}

impl StateInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        StateInterval { lo, hi }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.lo <= pos && pos <= self.hi
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// A violated Wheeler axiom, with the edges witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An edge enters the initial state, so it cannot be the order minimum.
    InitialNotMin { edge: (usize, usize) },
    /// Axiom (i): `first` targets a smaller label than `second` but does not
    /// precede it.
    LabelOrder { first: (usize, usize), second: (usize, usize) },
    /// Axiom (ii): equally-labeled targets out of order against the sources.
    SameLabelMonotonicity { first: (usize, usize), second: (usize, usize) },
    /// A state with incoming edges carrying two different symbols (only
    /// possible for edge-labeled inputs checked via the CLI).
    NotInputConsistent { state: usize, labels: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitialNotMin { edge } => {
                write!(f, "edge {}->{} enters the initial state", edge.0, edge.1)
            }
            Violation::LabelOrder { first, second } => write!(
                f,
                "edges {}->{} and {}->{} break label monotonicity",
                first.0, first.1, second.0, second.1
            ),
            Violation::SameLabelMonotonicity { first, second } => write!(
                f,
                "edges {}->{} and {}->{} break same-label monotonicity",
                first.0, first.1, second.0, second.1
            ),
            Violation::NotInputConsistent { state, labels } => write!(
                f,
                "state {state} has incoming labels with ranks {} and {}",
                labels.0, labels.1
            ),
        }
    }
}

/// Checks `ord` against the Wheeler axioms and reports every violation,
/// ordered by the witnessing edge positions. Quadratic in the edge count.
pub fn check_wheeler(a: &StateLabeledNfa, ord: &WheelerOrder) -> Vec<Violation> {
    assert_eq!(ord.len(), a.state_count(), "order size mismatch");
    let mut out = Vec::new();
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    for &(p, q) in &edges {
        if q == 0 {
            out.push(Violation::InitialNotMin { edge: (p, q) });
        }
    }
    // Sort edge pairs by order positions for deterministic reporting.
    edges.sort_by_key(|&(p, q)| (ord.position(p), ord.position(q)));
    for (i, &(u1, v1)) in edges.iter().enumerate() {
        for &(u2, v2) in &edges[i + 1..] {
            let (l1, l2) = (a.label(v1), a.label(v2));
            if l1 != l2 {
                let ((ua, va), (ub, vb)) = if l1 < l2 { ((u1, v1), (u2, v2)) } else { ((u2, v2), (u1, v1)) };
                if ord.position(va) >= ord.position(vb) {
                    out.push(Violation::LabelOrder { first: (ua, va), second: (ub, vb) });
                }
            } else if v1 != v2 {
                let (p1, p2) = (ord.position(u1), ord.position(u2));
                if p1 < p2 && ord.position(v1) > ord.position(v2) {
                    out.push(Violation::SameLabelMonotonicity {
                        first: (u1, v1),
                        second: (u2, v2),
                    });
                } else if p2 < p1 && ord.position(v2) > ord.position(v1) {
                    out.push(Violation::SameLabelMonotonicity {
                        first: (u2, v2),
                        second: (u1, v1),
                    });
                }
            }
        }
    }
    out
}

/// True when `ord` is a Wheeler order for `a`.
pub fn is_wheeler_order(a: &StateLabeledNfa, ord: &WheelerOrder) -> bool {
    check_wheeler(a, ord).is_empty()
}

/// The interval of order positions reached from the initial state by `w`
/// (`None` when `w` is not readable). Relies on the Wheeler property: the
/// image of an interval under one symbol is an interval.
pub fn reach_interval(a: &StateLabeledNfa, ord: &WheelerOrder, w: &Word) -> Option<StateInterval> {
    let mut cur = StateInterval::new(0, 0);
    for &sym in w.ranks() {
        if sym >= a.alphabet().len() {
            return None;
        }
        let mut image: Vec<usize> = Vec::new();
        for pos in cur.positions() {
            let q = ord.state_at(pos);
            for t in a.successors_by(q, sym) {
                image.push(ord.position(t));
            }
        }
        image.sort_unstable();
        image.dedup();
        let (&lo, &hi) = match (image.first(), image.last()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return None,
        };
        debug_assert_eq!(image.len(), hi - lo + 1, "image of an interval must be an interval");
        cur = StateInterval::new(lo, hi);
    }
    Some(cur)
}

/// A convexity counterexample: three readable words in colex order whose
/// outer two reach the state while the middle one misses it.
pub type CounterexampleTriple = (Word, Word, Word, usize);

/// Bounded empirical check that the set of words reaching each state is
/// convex among the readable words of length at most `max_len`, in colex
/// order. Returns every counterexample triple, tagged with the offending
/// state. The result depends only on the automaton: an automaton admitting
/// any Wheeler order yields an empty report.
pub fn incoming_convexity_report(
    a: &StateLabeledNfa,
    max_len: usize,
) -> Vec<CounterexampleTriple> {
    let words = crate::oracles::enumerate_prefixes(a, max_len);
    let n = a.state_count();
    // reaches[i] = set of states reached by words[i]
    let reaches: Vec<Vec<usize>> = words.iter().map(|w| a.run(w)).collect();
    let mut out = Vec::new();
    for u in 0..n {
        let member: Vec<bool> = reaches.iter().map(|set| set.binary_search(&u).is_ok()).collect();
        let first = member.iter().position(|&m| m);
        let last = member.iter().rposition(|&m| m);
        if let (Some(first), Some(last)) = (first, last) {
            for mid in first + 1..last {
                if !member[mid] {
                    // Report with the nearest enclosing members.
                    let before = (first..mid).rev().find(|&i| member[i]).unwrap();
                    let after = (mid + 1..=last).find(|&i| member[i]).unwrap();
                    out.push((
                        words[before].clone(),
                        words[mid].clone(),
                        words[after].clone(),
                        u,
                    ));
                }
            }
        }
    }
    out
}

/// Decides whether the Wheeler automaton is reduced: distinct states are
/// reached by distinct word sets. Each pair of states is compared by
/// determinizing the automaton re-targeted at either state and testing
/// language equivalence.
pub fn is_reduced(a: &StateLabeledNfa, ord: &WheelerOrder) -> bool {
    let n = a.state_count();
    for u in 0..n {
        for v in u + 1..n {
            if a.label(u) != a.label(v) {
                continue; // differently-labeled states never share words
            }
            if incoming_language(a, ord, u).is_some_and(|du| {
                incoming_language(a, ord, v).is_some_and(|dv| language_equiv(&du, &dv))
            }) {
                return false;
            }
        }
    }
    true
}

/// DFA for the set of words reaching `target`, or `None` when unreachable.
fn incoming_language(
    a: &StateLabeledNfa,
    ord: &WheelerOrder,
    target: usize,
) -> Option<crate::automaton::EdgeLabeledDfa> {
    let retargeted = a.with_finals(&[target]).expect("same shape");
    let (trimmed, keep) = retargeted.trim_with_map();
    if trimmed.is_empty_language() && target != 0 {
        return None;
    }
    let sub_ord = ord.restrict_to(&keep);
    let (det, _) = crate::determinize::determinize_unchecked(&trimmed, &sub_ord);
    Some(state_to_edge_labeled(&det).expect("determinization output is deterministic"))
}

/// True when the two ordered automata are identical after renaming states
/// along their orders (position i of one maps to position i of the other).
pub fn order_isomorphic(
    a1: &StateLabeledNfa,
    o1: &WheelerOrder,
    a2: &StateLabeledNfa,
    o2: &WheelerOrder,
) -> bool {
    let n = a1.state_count();
    if n != a2.state_count() || a1.alphabet() != a2.alphabet() {
        return false;
    }
    for i in 0..n {
        let (q1, q2) = (o1.state_at(i), o2.state_at(i));
        if a1.label(q1) != a2.label(q2) || a1.is_final(q1) != a2.is_final(q2) {
            return false;
        }
    }
    let edges1: BTreeSet<(usize, usize)> = a1
        .edges()
        .map(|(p, q)| (o1.position(p), o1.position(q)))
        .collect();
    let edges2: BTreeSet<(usize, usize)> = a2
        .edges()
        .map(|(p, q)| (o2.position(p), o2.position(q)))
        .collect();
    edges1 == edges2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{colex_compare, OrderedAlphabet};

    fn alpha(s: &str) -> OrderedAlphabet {
        OrderedAlphabet::new(&s.chars().collect::<Vec<_>>()).unwrap()
    }

    /// The 7-state automaton for ax*b|zx*d with its left-to-right order.
    fn axb_zxd() -> (StateLabeledNfa, WheelerOrder) {
        let al = alpha("abdxz");
        let (a, b, d, x, z) = (0, 1, 2, 3, 4);
        let nfa = StateLabeledNfa::new(
            al,
            vec![None, Some(a), Some(b), Some(d), Some(x), Some(x), Some(z)],
            &[
                (0, 1),
                (1, 2),
                (1, 4),
                (0, 6),
                (4, 2),
                (4, 4),
                (5, 5),
                (6, 5),
                (6, 3),
                (5, 3),
            ],
            &[2, 3],
        )
        .unwrap();
        (nfa, WheelerOrder::identity(7))
    }

    #[test]
    fn left_to_right_order_is_wheeler() {
        let (nfa, ord) = axb_zxd();
        assert_eq!(check_wheeler(&nfa, &ord), Vec::new());
    }

    #[test]
    fn swapping_x_states_breaks_the_order() {
        let (nfa, _) = axb_zxd();
        let ord = WheelerOrder::from_perm(vec![0, 1, 2, 3, 5, 4, 6]).unwrap();
        let violations = check_wheeler(&nfa, &ord);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::SameLabelMonotonicity { .. })));
    }

    #[test]
    fn reach_interval_steps_through_words() {
        let (nfa, ord) = axb_zxd();
        let al = nfa.alphabet().clone();
        let ax = al.word_from_str("ax").unwrap();
        assert_eq!(reach_interval(&nfa, &ord, &ax), Some(StateInterval::new(4, 4)));
        assert_eq!(
            reach_interval(&nfa, &ord, &Word::empty()),
            Some(StateInterval::new(0, 0))
        );
        let bb = al.word_from_str("bb").unwrap();
        assert_eq!(reach_interval(&nfa, &ord, &bb), None);
    }

    #[test]
    fn convexity_report_empty_on_valid_order() {
        let (nfa, _) = axb_zxd();
        assert!(incoming_convexity_report(&nfa, 8).is_empty());
    }

    #[test]
    fn convexity_report_flags_interleaved_incoming_sets() {
        // State 1 is reached by "a" and "xa" while "ba" (strictly between
        // them in colex order) reaches only state 4.
        let al = alpha("abx");
        let nfa = StateLabeledNfa::new(
            al,
            vec![None, Some(0), Some(1), Some(2), Some(0)],
            &[(0, 1), (3, 1), (0, 2), (0, 3), (2, 4)],
            &[1, 4],
        )
        .unwrap();
        let report = incoming_convexity_report(&nfa, 6);
        assert!(!report.is_empty());
        let alp = nfa.alphabet().clone();
        let (before, mid, after, state) = &report[0];
        assert_eq!(
            (
                alp.format_word(before).as_str(),
                alp.format_word(mid).as_str(),
                alp.format_word(after).as_str(),
                *state
            ),
            ("a", "ba", "xa", 1)
        );
    }

    #[test]
    fn exw_is_reduced() {
        let (nfa, ord) = axb_zxd();
        assert!(is_reduced(&nfa, &ord));
    }

    #[test]
    fn duplicated_state_is_not_reduced() {
        // Two a-states with identical incoming edges from the initial state.
        let al = alpha("a");
        let nfa = StateLabeledNfa::new(
            al,
            vec![None, Some(0), Some(0)],
            &[(0, 1), (0, 2)],
            &[1, 2],
        )
        .unwrap();
        let ord = WheelerOrder::identity(3);
        assert!(check_wheeler(&nfa, &ord).is_empty());
        assert!(!is_reduced(&nfa, &ord));
    }

    #[test]
    fn colex_duality_membership() {
        // u in I_alpha iff alpha in I_u, spot-checked via run().
        let (nfa, ord) = axb_zxd();
        let words = crate::oracles::enumerate_prefixes(&nfa, 5);
        for w in &words {
            let states = nfa.run(w);
            let interval = reach_interval(&nfa, &ord, w).unwrap();
            let by_interval: Vec<usize> = {
                let mut v: Vec<usize> =
                    interval.positions().map(|p| ord.state_at(p)).collect();
                v.sort_unstable();
                v
            };
            assert_eq!(states, by_interval);
        }
    }

    #[test]
    fn prefix_suffix_family_on_enumerated_words() {
        // For I_u contained in I_v, I_u is a prefix or suffix of I_v in
        // colex order of the enumerated words.
        let (nfa, _) = axb_zxd();
        let words = crate::oracles::enumerate_prefixes(&nfa, 8);
        let n = nfa.state_count();
        let member: Vec<Vec<bool>> = (0..n)
            .map(|u| words.iter().map(|w| nfa.run(w).binary_search(&u).is_ok()).collect())
            .collect();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let contained =
                    member[u].iter().zip(&member[v]).all(|(&mu, &mv)| !mu || mv);
                if !contained {
                    continue;
                }
                let first_v = member[v].iter().position(|&m| m).unwrap();
                let last_v = member[v].iter().rposition(|&m| m).unwrap();
                let first_u = member[u].iter().position(|&m| m);
                let last_u = member[u].iter().rposition(|&m| m);
                if let (Some(fu), Some(lu)) = (first_u, last_u) {
                    assert!(
                        fu == first_v || lu == last_v,
                        "I_{u} is neither a prefix nor a suffix of I_{v}"
                    );
                }
            }
        }
    }

    #[test]
    fn singleton_reach_positions_are_monotone_in_colex() {
        // On a WDFA, alpha before beta implies pos(delta(s,alpha)) <=
        // pos(delta(s,beta)); enumerate_prefixes returns ascending words.
        let (nfa, ord) = axb_zxd();
        let words = crate::oracles::enumerate_prefixes(&nfa, 8);
        for (i, wa) in words.iter().enumerate() {
            for wb in &words[i + 1..] {
                debug_assert_eq!(colex_compare(wa, wb), core::cmp::Ordering::Less);
                let (ia, ib) = (
                    reach_interval(&nfa, &ord, wa).unwrap(),
                    reach_interval(&nfa, &ord, wb).unwrap(),
                );
                assert!(ia.lo <= ib.lo, "reach positions must be monotone");
            }
        }
    }
}
