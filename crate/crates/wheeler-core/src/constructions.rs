//! Generators and closure constructions: path automata, colex-interval
//! languages, the DFA/WDFA blow-up family, finite-set concatenation and
//! union, prefix closures, and the star family governed by primitivity.
//!
//! Constructors return plain automata; whether a result is Wheeler is the
//! test suite's business, so the same code paths also build the
//! counterexample fixtures.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::alphabet::{colex_compare, OrderedAlphabet, Word};
use crate::automaton::{EdgeLabeledDfa, StateLabel, StateLabeledNfa};
use crate::ops::{minimize, product, ProductMode};
use crate::order::WheelerOrder;

/// Linear automaton accepting exactly `{w}`, one state per prefix, ordered
/// by (label, colex rank of the reaching prefix). The order is the unique
/// Wheeler order of the path automaton.
pub fn gen_path_automaton(
    alphabet: &OrderedAlphabet,
    w: &Word,
) -> (StateLabeledNfa, WheelerOrder) {
    assert!(!w.is_empty(), "path automaton needs a nonempty word");
    assert!(w.is_over(alphabet), "word uses symbols outside the alphabet");
    let n = w.len() + 1;
    let labels: Vec<StateLabel> =
        core::iter::once(None).chain(w.ranks().iter().map(|&r| Some(r))).collect();
    let edges: Vec<(usize, usize)> = (0..w.len()).map(|i| (i, i + 1)).collect();
    let a = StateLabeledNfa::new(alphabet.clone(), labels, &edges, &[n - 1]).unwrap();
    // State i > 0 is reached exactly by the length-i prefix of w.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&p, &q| {
        a.label(p).cmp(&a.label(q)).then_with(|| {
            let (wp, wq) = (prefix(w, p), prefix(w, q));
            colex_compare(&wp, &wq)
        })
    });
    let ord = WheelerOrder::from_perm(perm).expect("initial sorts first");
    (a, ord)
}

fn prefix(w: &Word, len: usize) -> Word {
    Word::from_ranks(w.ranks()[..len].to_vec())
}

/// A colex interval of nonempty-bounded shape. `LeftRay` is everything
/// strictly below its endpoint, `RightRay` everything strictly above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalSpec {
    Open(Word, Word),
    ClosedLeft(Word, Word),
    ClosedRight(Word, Word),
    Closed(Word, Word),
    LeftRay(Word),
    RightRay(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalSpecError {
    EmptyEndpoint,
    EndpointsOutOfOrder,
}

impl fmt::Display for IntervalSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalSpecError::EmptyEndpoint => write!(f, "interval endpoints must be nonempty"),
            IntervalSpecError::EndpointsOutOfOrder => {
                write!(f, "left endpoint must not exceed the right endpoint")
            }
        }
    }
}

impl core::error::Error for IntervalSpecError {}

impl IntervalSpec {
    pub fn validate(&self) -> Result<(), IntervalSpecError> {
        let (lo, hi) = self.endpoints();
        for e in [lo, hi].into_iter().flatten() {
            if e.is_empty() {
                return Err(IntervalSpecError::EmptyEndpoint);
            }
        }
        if let (Some(lo), Some(hi)) = self.endpoints() {
            if colex_compare(lo, hi) == Ordering::Greater {
                return Err(IntervalSpecError::EndpointsOutOfOrder);
            }
        }
        Ok(())
    }

    pub fn endpoints(&self) -> (Option<&Word>, Option<&Word>) {
        match self {
            IntervalSpec::Open(lo, hi)
            | IntervalSpec::ClosedLeft(lo, hi)
            | IntervalSpec::ClosedRight(lo, hi)
            | IntervalSpec::Closed(lo, hi) => (Some(lo), Some(hi)),
            IntervalSpec::LeftRay(hi) => (None, Some(hi)),
            IntervalSpec::RightRay(lo) => (Some(lo), None),
        }
    }

    /// Membership per the colex order, the defining semantics.
    pub fn contains(&self, w: &Word) -> bool {
        let lower = |lo: &Word, strict: bool| match colex_compare(lo, w) {
            Ordering::Less => true,
            Ordering::Equal => !strict,
            Ordering::Greater => false,
        };
        let upper = |hi: &Word, strict: bool| match colex_compare(w, hi) {
            Ordering::Less => true,
            Ordering::Equal => !strict,
            Ordering::Greater => false,
        };
        match self {
            IntervalSpec::Open(lo, hi) => lower(lo, true) && upper(hi, true),
            IntervalSpec::ClosedLeft(lo, hi) => lower(lo, false) && upper(hi, true),
            IntervalSpec::ClosedRight(lo, hi) => lower(lo, true) && upper(hi, false),
            IntervalSpec::Closed(lo, hi) => lower(lo, false) && upper(hi, false),
            IntervalSpec::LeftRay(hi) => upper(hi, true),
            IntervalSpec::RightRay(lo) => lower(lo, true),
        }
    }
}

/// Minimal DFA accepting exactly the interval language.
///
/// Words longer than both endpoints compare through their suffix window
/// alone, so a DFA tracking the last `max endpoint length + 1` symbols
/// (exact short words before that) decides membership; it is then trimmed
/// and minimized.
pub fn gen_interval(spec: &IntervalSpec, alphabet: &OrderedAlphabet) -> EdgeLabeledDfa {
    spec.validate().expect("invalid interval spec");
    let (lo, hi) = spec.endpoints();
    let longest = lo.map_or(0, Word::len).max(hi.map_or(0, Word::len));
    let window = longest + 1;
    let k = alphabet.len();

    // States are the suffix windows; short words map to themselves.
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    ids.insert(Vec::new(), 0);
    let mut transitions = Vec::new();
    let mut head = 0;
    while head < words.len() {
        let cur = words[head].clone();
        for sym in 0..k {
            let mut next = cur.clone();
            next.push(sym);
            if next.len() > window {
                next.remove(0);
            }
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                words.push(next);
                words.len() - 1
            });
            transitions.push((head, sym, id));
        }
        head += 1;
    }
    let finals: Vec<usize> = words
        .iter()
        .enumerate()
        .filter(|(_, state)| {
            if state.len() < window {
                // Reached only by this exact word.
                spec.contains(&Word::from_ranks(state.to_vec()))
            } else {
                window_member(spec, state)
            }
        })
        .map(|(i, _)| i)
        .collect();
    let raw = EdgeLabeledDfa::new(alphabet.clone(), words.len(), &transitions, &finals).unwrap();
    minimize(&raw)
}

/// Membership of every word whose suffix window is `state` (all such words
/// are strictly longer than both endpoints, so equality with an endpoint is
/// impossible and the window decides each comparison).
fn window_member(spec: &IntervalSpec, state: &[usize]) -> bool {
    // Long word w vs endpoint e: if the |e|-suffix equals e then e is a
    // proper suffix of w and w is strictly greater; otherwise the suffix
    // comparison decides.
    let against = |e: &Word| -> Ordering {
        let suffix = &state[state.len() - e.len()..];
        let suffix = Word::from_ranks(suffix.to_vec());
        match colex_compare(&suffix, e) {
            Ordering::Equal => Ordering::Greater,
            o => o,
        }
    };
    let (lo, hi) = spec.endpoints();
    let above_lo = lo.is_none_or(|lo| against(lo) == Ordering::Greater);
    let below_hi = hi.is_none_or(|hi| against(hi) == Ordering::Less);
    above_lo && below_hi
}

/// The DFA/WDFA pair of the exponential-gap family: words `c B e` and
/// `d B f` over all binary blocks `B` of length `m`.
#[derive(Debug, Clone)]
pub struct LmFamily {
    pub dfa: EdgeLabeledDfa,
    pub wdfa: StateLabeledNfa,
    pub order: WheelerOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmOutOfRange(pub usize);

impl fmt::Display for LmOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block length {} outside the supported range 1..=4", self.0)
    }
}

impl core::error::Error for LmOutOfRange {}

/// Builds the family member for block length `m` (desk scale: `1..=4`).
/// The DFA has `4m + 5` states; the WDFA unravels the binary blocks into
/// full trees, giving `1 + 2^(m+2)` states ordered by the colex rank of
/// their unique incoming word.
pub fn gen_lm(m: usize) -> Result<LmFamily, LmOutOfRange> {
    if !(1..=4).contains(&m) {
        return Err(LmOutOfRange(m));
    }
    let alphabet = OrderedAlphabet::new(&['a', 'b', 'c', 'd', 'e', 'f']).unwrap();
    let (a, b, c, d, e, f) = (0usize, 1, 2, 3, 4, 5);

    // DFA: source, two branch heads, two ladders of (a, b) state pairs, two
    // sinks. 4m + 5 states.
    let dfa = {
        let n = 4 * m + 5;
        let c_head = 1;
        let d_head = 2;
        let c_pair = |i: usize| (3 + 4 * (i - 1), 4 + 4 * (i - 1)); // (a_i, b_i)
        let d_pair = |i: usize| (5 + 4 * (i - 1), 6 + 4 * (i - 1));
        let e_sink = n - 2;
        let f_sink = n - 1;
        let mut t = vec![(0, c, c_head), (0, d, d_head)];
        for (head, pair, last, sink_sym, sink) in [
            (c_head, c_pair as fn(usize) -> (usize, usize), c_pair(m), e, e_sink),
            (d_head, d_pair as fn(usize) -> (usize, usize), d_pair(m), f, f_sink),
        ] {
            let (a1, b1) = pair(1);
            t.push((head, a, a1));
            t.push((head, b, b1));
            for i in 1..m {
                let (ai, bi) = pair(i);
                let (an, bn) = pair(i + 1);
                for s in [ai, bi] {
                    t.push((s, a, an));
                    t.push((s, b, bn));
                }
            }
            let (am, bm) = last;
            t.push((am, sink_sym, sink));
            t.push((bm, sink_sym, sink));
        }
        EdgeLabeledDfa::new(alphabet.clone(), n, &t, &[e_sink, f_sink]).unwrap()
    };

    // WDFA: full binary trees per branch; every node is identified by its
    // unique incoming word.
    let wdfa_parts = {
        #[derive(Clone)]
        struct Node {
            word: Vec<usize>,
            label: usize,
        }
        let mut nodes: Vec<Node> = Vec::new();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let add = |nodes: &mut Vec<Node>, index: &mut BTreeMap<Vec<usize>, usize>, word: Vec<usize>| {
            let label = *word.last().unwrap();
            let id = nodes.len() + 1; // 0 is the initial state
            index.insert(word.clone(), id);
            nodes.push(Node { word, label });
            id
        };
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut finals: Vec<usize> = Vec::new();
        for (branch, sink_sym) in [(c, e), (d, f)] {
            let head = add(&mut nodes, &mut index, vec![branch]);
            edges.push((0, head));
            // Breadth-first over binary blocks.
            let mut frontier = vec![head];
            for _ in 0..m {
                let mut next = Vec::new();
                for &p in &frontier {
                    for sym in [a, b] {
                        let mut word = nodes[p - 1].word.clone();
                        word.push(sym);
                        let id = add(&mut nodes, &mut index, word);
                        edges.push((p, id));
                        next.push(id);
                    }
                }
                frontier = next;
            }
            let mut sink_word = vec![branch];
            sink_word.push(sink_sym);
            let sink = add(&mut nodes, &mut index, sink_word);
            finals.push(sink);
            for &p in &frontier {
                edges.push((p, sink));
            }
        }
        let labels: Vec<StateLabel> =
            core::iter::once(None).chain(nodes.iter().map(|nd| Some(nd.label))).collect();
        let wdfa = StateLabeledNfa::new(alphabet.clone(), labels, &edges, &finals).unwrap();
        // Order states by (label, colex of the incoming word).
        let mut perm: Vec<usize> = (0..wdfa.state_count()).collect();
        perm.sort_by(|&p, &q| {
            wdfa.label(p).cmp(&wdfa.label(q)).then_with(|| {
                let wp = Word::from_ranks(nodes[p - 1].word.clone());
                let wq = Word::from_ranks(nodes[q - 1].word.clone());
                colex_compare(&wp, &wq)
            })
        });
        let order = WheelerOrder::from_perm(perm).unwrap();
        (wdfa, order)
    };

    Ok(LmFamily { dfa, wdfa: wdfa_parts.0, order: wdfa_parts.1 })
}

/// Right concatenation with an explicit finite set, then minimized.
pub fn concat_finite(w: &EdgeLabeledDfa, fin: &[Word]) -> EdgeLabeledDfa {
    let base = w.state_count();
    let mut nfa = EdgeNfa {
        states: base,
        edges: w.transitions().collect(),
        finals: Vec::new(),
    };
    let originals: Vec<usize> = w.finals().collect();
    let mut words: Vec<&Word> = fin.iter().collect();
    words.sort_by(|x, y| colex_compare(x, y));
    words.dedup();
    for f in words {
        if f.is_empty() {
            nfa.finals.extend_from_slice(&originals);
            continue;
        }
        // A fresh chain reading f, entered from every original final.
        let mut chain = Vec::with_capacity(f.len());
        for _ in 0..f.len() {
            chain.push(nfa.states);
            nfa.states += 1;
        }
        for &q in &originals {
            nfa.edges.push((q, f.ranks()[0], chain[0]));
        }
        for (i, &sym) in f.ranks().iter().enumerate().skip(1) {
            nfa.edges.push((chain[i - 1], sym, chain[i]));
        }
        nfa.finals.push(*chain.last().unwrap());
    }
    minimize(&nfa.determinize(w.alphabet()))
}

/// Union with an explicit finite set, then minimized.
pub fn union_finite(w: &EdgeLabeledDfa, fin: &[Word]) -> EdgeLabeledDfa {
    let trie = finite_language_dfa(w.alphabet(), fin);
    if trie.is_empty_language() {
        return minimize(w);
    }
    minimize(&product(w, &trie, ProductMode::Union).expect("same alphabet"))
}

/// Trie-shaped DFA for an explicit finite language (trimmed; the empty set
/// yields the canonical empty-language automaton).
pub fn finite_language_dfa(alphabet: &OrderedAlphabet, words: &[Word]) -> EdgeLabeledDfa {
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    ids.insert(Vec::new(), 0);
    let mut count = 1;
    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    for w in words {
        let mut prefix = Vec::new();
        let mut cur = 0usize;
        for &sym in w.ranks() {
            prefix.push(sym);
            let next = *ids.entry(prefix.clone()).or_insert_with(|| {
                count += 1;
                count - 1
            });
            if !transitions.contains(&(cur, sym, next)) {
                transitions.push((cur, sym, next));
            }
            cur = next;
        }
        finals.push(cur);
    }
    EdgeLabeledDfa::new(alphabet.clone(), count, &transitions, &finals)
        .unwrap()
        .trim()
}

/// Marks every state final: the automaton then accepts the prefix closure
/// of its language. The order is untouched.
pub fn pref_closure(a: &StateLabeledNfa, ord: &WheelerOrder) -> (StateLabeledNfa, WheelerOrder) {
    let all: Vec<usize> = (0..a.state_count()).collect();
    (a.with_finals(&all).unwrap(), ord.clone())
}

/// Complements the final set within the state set: accepts the readable
/// non-members `Pref(L) \ L`. Involutive; the order is untouched. The
/// result may have dead states (trim if needed).
pub fn pref_minus(a: &StateLabeledNfa, ord: &WheelerOrder) -> (StateLabeledNfa, WheelerOrder) {
    let flipped: Vec<usize> = (0..a.state_count()).filter(|&q| !a.is_final(q)).collect();
    (a.with_finals(&flipped).unwrap(), ord.clone())
}

/// True when `w` is not a proper power of a shorter word. Scans for an
/// occurrence of `w` inside `w · w` at an interior position; primitive words
/// occur only at the two ends.
///
/// Panics on the empty word.
pub fn is_primitive(w: &Word) -> bool {
    assert!(!w.is_empty(), "primitivity is defined for nonempty words");
    let n = w.len();
    let doubled: Vec<usize> = w.ranks().iter().chain(w.ranks()).copied().collect();
    !(1..n).any(|shift| doubled[shift..shift + n] == *w.ranks())
}

/// DFA for `left · mid* · right`, determinized and minimized. The language
/// is Wheeler exactly when `mid` is primitive.
pub fn gen_star_family(
    alphabet: &OrderedAlphabet,
    left: &Word,
    mid: &Word,
    right: &Word,
) -> EdgeLabeledDfa {
    assert!(!mid.is_empty(), "the starred word must be nonempty");
    let mut nfa = EdgeNfa { states: 1, edges: Vec::new(), finals: Vec::new() };
    // left chain into the loop anchor.
    let mut cur = 0usize;
    for &sym in left.ranks() {
        let next = nfa.fresh();
        nfa.edges.push((cur, sym, next));
        cur = next;
    }
    let anchor = cur;
    // mid loop back to the anchor.
    let mut loop_cur = anchor;
    for (i, &sym) in mid.ranks().iter().enumerate() {
        let next = if i + 1 == mid.len() { anchor } else { nfa.fresh() };
        nfa.edges.push((loop_cur, sym, next));
        loop_cur = next;
    }
    // right chain from the anchor.
    let mut cur = anchor;
    for &sym in right.ranks() {
        let next = nfa.fresh();
        nfa.edges.push((cur, sym, next));
        cur = next;
    }
    nfa.finals.push(cur);
    minimize(&nfa.determinize(alphabet))
}

/// Minimal edge-labeled NFA used as plumbing by the constructors.
struct EdgeNfa {
    states: usize,
    edges: Vec<(usize, usize, usize)>,
    finals: Vec<usize>,
}

impl EdgeNfa {
    fn fresh(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    /// Plain subset construction.
    fn determinize(&self, alphabet: &OrderedAlphabet) -> EdgeLabeledDfa {
        let k = alphabet.len();
        let mut succ: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; self.states];
        for &(p, sym, q) in &self.edges {
            succ[p][sym].push(q);
        }
        let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut subsets: Vec<Vec<usize>> = vec![vec![0]];
        ids.insert(vec![0], 0);
        let mut transitions = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let cur = subsets[head].clone();
            for sym in 0..k {
                let mut next: Vec<usize> =
                    cur.iter().flat_map(|&q| succ[q][sym].iter().copied()).collect();
                next.sort_unstable();
                next.dedup();
                if next.is_empty() {
                    continue;
                }
                let id = *ids.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    subsets.len() - 1
                });
                transitions.push((head, sym, id));
            }
            head += 1;
        }
        let finals: Vec<usize> = subsets
            .iter()
            .enumerate()
            .filter(|(_, set)| set.iter().any(|q| self.finals.contains(q)))
            .map(|(i, _)| i)
            .collect();
        EdgeLabeledDfa::new(alphabet.clone(), subsets.len(), &transitions, &finals).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::check_wheeler;

    fn alpha(s: &str) -> OrderedAlphabet {
        OrderedAlphabet::new(&s.chars().collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn banana_path_layout() {
        let al = alpha("abn");
        let w = al.word_from_str("banana").unwrap();
        let (a, ord) = gen_path_automaton(&al, &w);
        assert_eq!(a.state_count(), 7);
        assert!(check_wheeler(&a, &ord).is_empty());
        // Order # a a a b n n: labels along the order.
        let labels: Vec<Option<char>> = ord
            .states()
            .iter()
            .map(|&q| a.label(q).map(|r| al.char_at(r)))
            .collect();
        assert_eq!(
            labels,
            [None, Some('a'), Some('a'), Some('a'), Some('b'), Some('n'), Some('n')]
        );
        // The a-states sort by their reaching prefixes ba < bana < banana.
        assert_eq!(&ord.states()[1..4], &[2, 4, 6]);
    }

    #[test]
    fn single_letter_path() {
        let al = alpha("a");
        let w = al.word_from_str("a").unwrap();
        let (a, ord) = gen_path_automaton(&al, &w);
        assert_eq!(a.state_count(), 2);
        assert!(check_wheeler(&a, &ord).is_empty());
    }

    #[test]
    fn aba_path_orders_a_states_by_prefix() {
        let al = alpha("ab");
        let w = al.word_from_str("aba").unwrap();
        let (a, ord) = gen_path_automaton(&al, &w);
        // order # a a b with "a" before "aba".
        assert_eq!(ord.states(), &[0, 1, 3, 2]);
        assert!(check_wheeler(&a, &ord).is_empty());
    }

    #[test]
    fn left_ray_membership_matches_colex() {
        let al = alpha("ab");
        let hi = al.word_from_str("ba").unwrap();
        let spec = IntervalSpec::LeftRay(hi);
        let d = gen_interval(&spec, &al);
        for w in &all_words(al.len(), 4) {
            assert_eq!(d.accepts(w), spec.contains(w), "{}", al.format_word(w));
        }
    }

    /// Every word over `k` symbols up to `max_len`.
    fn all_words(k: usize, max_len: usize) -> Vec<Word> {
        let mut all = vec![Word::empty()];
        let mut level = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &level {
                for sym in 0..k {
                    let mut nw = w.clone();
                    nw.push(sym);
                    next.push(nw);
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        all
    }

    #[test]
    fn degenerate_closed_interval_is_a_singleton() {
        let al = alpha("ab");
        let ab = al.word_from_str("ab").unwrap();
        let spec = IntervalSpec::Closed(ab.clone(), ab.clone());
        let d = gen_interval(&spec, &al);
        assert!(d.accepts(&ab));
        assert!(!d.accepts(&al.word_from_str("a").unwrap()));
        assert!(!d.accepts(&al.word_from_str("bab").unwrap()));
    }

    #[test]
    fn lm_sizes() {
        for (m, dfa_n, wdfa_n) in [(1usize, 9usize, 9usize), (2, 13, 17), (3, 17, 33)] {
            let fam = gen_lm(m).unwrap();
            assert_eq!(fam.dfa.state_count(), dfa_n, "m={m} dfa");
            assert_eq!(fam.wdfa.state_count(), wdfa_n, "m={m} wdfa");
            assert!(check_wheeler(&fam.wdfa, &fam.order).is_empty(), "m={m} order");
        }
        assert!(gen_lm(0).is_err());
        assert!(gen_lm(5).is_err());
    }

    #[test]
    fn lm_languages_agree() {
        let fam = gen_lm(2).unwrap();
        let al = fam.dfa.alphabet().clone();
        for (text, member) in [
            ("cabe", true),
            ("caae", true),
            ("dbbf", true),
            ("cabf", false),
            ("cae", false),
            ("ce", false),
        ] {
            let w = al.word_from_str(text).unwrap();
            assert_eq!(fam.dfa.accepts(&w), member, "dfa {text}");
            assert_eq!(fam.wdfa.accepts(&w), member, "wdfa {text}");
        }
    }

    #[test]
    fn concat_with_empty_word_keeps_language() {
        let al = alpha("ab");
        let d = EdgeLabeledDfa::new(al, 3, &[(0, 1, 2), (2, 1, 2), (2, 0, 1)], &[1]).unwrap();
        let c = concat_finite(&d, &[Word::empty()]);
        assert!(crate::ops::language_equiv(&c, &minimize(&d)));
    }

    #[test]
    fn concat_appends_words() {
        // b+a . {b} = b+ab
        let al = alpha("ab");
        let d = EdgeLabeledDfa::new(al.clone(), 3, &[(0, 1, 2), (2, 1, 2), (2, 0, 1)], &[1]).unwrap();
        let c = concat_finite(&d, &[al.word_from_str("b").unwrap()]);
        assert!(c.accepts(&al.word_from_str("bab").unwrap()));
        assert!(c.accepts(&al.word_from_str("bbab").unwrap()));
        assert!(!c.accepts(&al.word_from_str("ba").unwrap()));
    }

    #[test]
    fn union_with_empty_set_keeps_language() {
        let al = alpha("ab");
        let d = EdgeLabeledDfa::new(al, 3, &[(0, 1, 2), (2, 1, 2), (2, 0, 1)], &[1]).unwrap();
        let u = union_finite(&d, &[]);
        assert!(crate::ops::language_equiv(&u, &d));
    }

    #[test]
    fn prefix_closure_and_complement() {
        let al = alpha("ab");
        let w = al.word_from_str("ab").unwrap();
        let (a, ord) = gen_path_automaton(&al, &w);
        let (closed, _) = pref_closure(&a, &ord);
        for (text, member) in [("", true), ("a", true), ("ab", true), ("b", false)] {
            assert_eq!(closed.accepts(&al.word_from_str(text).unwrap()), member, "{text}");
        }
        let (minus, ord2) = pref_minus(&a, &ord);
        for (text, member) in [("", true), ("a", true), ("ab", false)] {
            assert_eq!(minus.accepts(&al.word_from_str(text).unwrap()), member, "{text}");
        }
        let (back, _) = pref_minus(&minus, &ord2);
        assert_eq!(back, a);
    }

    #[test]
    fn primitivity() {
        let al = alpha("ab");
        let word = |s: &str| al.word_from_str(s).unwrap();
        assert!(!is_primitive(&word("aa")));
        assert!(is_primitive(&word("ab")));
        assert!(!is_primitive(&word("abab")));
        assert!(is_primitive(&word("aba")));
        // Brute-force divisor cross-check up to length 6.
        let all = all_words(2, 6);
        for w in all.iter().filter(|w| !w.is_empty()) {
            let brute = !(1..w.len()).any(|d| {
                w.len() % d == 0 && Word::from_ranks(w.ranks()[..d].to_vec()).repeat(w.len() / d) == *w
            });
            assert_eq!(is_primitive(w), brute, "{}", al.format_word(w));
        }
    }

    #[test]
    fn star_family_shapes() {
        let al = alpha("abx");
        let word = |s: &str| al.word_from_str(s).unwrap();
        // a x* b
        let d = gen_star_family(&al, &word("a"), &word("x"), &word("b"));
        assert!(d.accepts(&word("ab")));
        assert!(d.accepts(&word("axxb")));
        assert!(!d.accepts(&word("axa")));
        // (aa)* via empty flanks
        let d2 = gen_star_family(&al, &Word::empty(), &word("aa"), &Word::empty());
        for k in 0..8 {
            assert_eq!(d2.accepts(&Word::from_ranks(vec![0; k])), k % 2 == 0, "a^{k}");
        }
    }
}
