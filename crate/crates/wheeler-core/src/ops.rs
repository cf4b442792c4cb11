//! Standard regular-language plumbing on edge-labeled DFAs: completion,
//! boolean products, minimization, and language equivalence with witnesses.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::Word;
use crate::automaton::EdgeLabeledDfa;

/// Boolean combination computed by [`product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Intersect,
    Union,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetMismatch;

impl fmt::Display for AlphabetMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operands use different alphabets")
    }
}

impl core::error::Error for AlphabetMismatch {}

/// Adds a non-final sink absorbing every missing transition. Identity when
/// the DFA is already complete.
pub fn complete_with_sink(d: &EdgeLabeledDfa) -> EdgeLabeledDfa {
    let n = d.state_count();
    let k = d.alphabet().len();
    let missing = (0..n).any(|q| (0..k).any(|s| d.step(q, s).is_none()));
    if !missing {
        return d.clone();
    }
    let sink = n;
    let mut transitions: Vec<(usize, usize, usize)> = d.transitions().collect();
    for q in 0..n {
        for s in 0..k {
            if d.step(q, s).is_none() {
                transitions.push((q, s, sink));
            }
        }
    }
    for s in 0..k {
        transitions.push((sink, s, sink));
    }
    let finals: Vec<usize> = d.finals().collect();
    EdgeLabeledDfa::new(d.alphabet().clone(), n + 1, &transitions, &finals).unwrap()
}

/// Product construction for intersection or union. Union completes both
/// operands with a sink first; the result is trimmed.
pub fn product(
    d1: &EdgeLabeledDfa,
    d2: &EdgeLabeledDfa,
    mode: ProductMode,
) -> Result<EdgeLabeledDfa, AlphabetMismatch> {
    if d1.alphabet() != d2.alphabet() {
        return Err(AlphabetMismatch);
    }
    let (a, b) = match mode {
        ProductMode::Intersect => (d1.clone(), d2.clone()),
        ProductMode::Union => (complete_with_sink(d1), complete_with_sink(d2)),
    };
    let k = a.alphabet().len();
    let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut order: Vec<(usize, usize)> = vec![(0, 0)];
    ids.insert((0, 0), 0);
    let mut transitions = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let (p, q) = order[head];
        for sym in 0..k {
            if let (Some(p2), Some(q2)) = (a.step(p, sym), b.step(q, sym)) {
                let next = *ids.entry((p2, q2)).or_insert_with(|| {
                    order.push((p2, q2));
                    order.len() - 1
                });
                transitions.push((head, sym, next));
            }
        }
        head += 1;
    }
    let finals: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| match mode {
            ProductMode::Intersect => a.is_final(p) && b.is_final(q),
            ProductMode::Union => a.is_final(p) || b.is_final(q),
        })
        .map(|(i, _)| i)
        .collect();
    let raw = EdgeLabeledDfa::new(a.alphabet().clone(), order.len(), &transitions, &finals).unwrap();
    Ok(raw.trim())
}

/// Minimum partial DFA for the language of `d`, unique up to isomorphism.
/// No complete-sink state is retained: states with empty right language are
/// dropped.
pub fn minimize(d: &EdgeLabeledDfa) -> EdgeLabeledDfa {
    let d = d.trim();
    if d.is_empty_language() {
        return d;
    }
    let c = complete_with_sink(&d);
    let n = c.state_count();
    let k = c.alphabet().len();

    // Moore refinement: split classes by (finality, successor classes).
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(c.is_final(q))).collect();
    loop {
        let mut sig_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut next_class = vec![0usize; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            for s in 0..k {
                sig.push(class[c.step(q, s).unwrap()]);
            }
            let fresh = sig_ids.len();
            next_class[q] = *sig_ids.entry(sig).or_insert(fresh);
        }
        if next_class == class {
            break;
        }
        class = next_class;
    }

    // Quotient, then trim to drop the dead class introduced by the sink.
    let class_count = class.iter().max().unwrap() + 1;
    let renum: Vec<usize> = {
        // Keep the initial state's class at id 0; number the rest by first
        // occurrence so the output is deterministic.
        let mut map = vec![usize::MAX; class_count];
        let mut next = 0;
        map[class[0]] = next;
        next += 1;
        for q in 0..n {
            if map[class[q]] == usize::MAX {
                map[class[q]] = next;
                next += 1;
            }
        }
        map
    };
    let mut transitions = Vec::new();
    let mut seen = vec![false; class_count];
    for q in 0..n {
        if seen[class[q]] {
            continue;
        }
        seen[class[q]] = true;
        for s in 0..k {
            let t = c.step(q, s).unwrap();
            transitions.push((renum[class[q]], s, renum[class[t]]));
        }
    }
    let finals: Vec<usize> = (0..n).filter(|&q| c.is_final(q)).map(|q| renum[class[q]]).collect();
    EdgeLabeledDfa::new(c.alphabet().clone(), class_count, &transitions, &finals)
        .unwrap()
        .trim()
}

/// Shortest word accepted by exactly one of the two DFAs, or `None` when the
/// languages are equal. Panics when the alphabets differ.
pub fn distinguishing_word(d1: &EdgeLabeledDfa, d2: &EdgeLabeledDfa) -> Option<Word> {
    assert_eq!(d1.alphabet(), d2.alphabet(), "operands use different alphabets");
    let k = d1.alphabet().len();
    // BFS over pairs of optional states; None is the implicit reject state.
    type P = (Option<usize>, Option<usize>);
    let mut seen: BTreeMap<P, Option<(P, usize)>> = BTreeMap::new();
    let start: P = (Some(0), Some(0));
    seen.insert(start, None);
    let mut queue = vec![start];
    let mut head = 0;
    let final_of = |d: &EdgeLabeledDfa, q: Option<usize>| q.is_some_and(|q| d.is_final(q));
    while head < queue.len() {
        let (p, q) = queue[head];
        if final_of(d1, p) != final_of(d2, q) {
            // Reconstruct the path backwards.
            let mut word = Vec::new();
            let mut cur = (p, q);
            while let Some(&Some((prev, sym))) = seen.get(&cur) {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Some(Word::from_ranks(word));
        }
        for sym in 0..k {
            let np = p.and_then(|p| d1.step(p, sym));
            let nq = q.and_then(|q| d2.step(q, sym));
            if np.is_none() && nq.is_none() {
                continue;
            }
            if !seen.contains_key(&(np, nq)) {
                seen.insert((np, nq), Some(((p, q), sym)));
                queue.push((np, nq));
            }
        }
        head += 1;
    }
    None
}

/// True when both DFAs accept the same language.
pub fn language_equiv(d1: &EdgeLabeledDfa, d2: &EdgeLabeledDfa) -> bool {
    distinguishing_word(d1, d2).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::OrderedAlphabet;

    fn alpha(s: &str) -> OrderedAlphabet {
        OrderedAlphabet::new(&s.chars().collect::<Vec<_>>()).unwrap()
    }

    /// b*a over {a, b}
    fn bstar_a() -> EdgeLabeledDfa {
        let al = alpha("ab");
        EdgeLabeledDfa::new(al, 2, &[(0, 1, 0), (0, 0, 1)], &[1]).unwrap()
    }

    /// b+a over {a, b}
    fn bplus_a() -> EdgeLabeledDfa {
        let al = alpha("ab");
        EdgeLabeledDfa::new(al, 3, &[(0, 1, 2), (2, 1, 2), (2, 0, 1)], &[1]).unwrap()
    }

    #[test]
    fn intersection_of_bstar_a_and_bplus_a() {
        let p = product(&bstar_a(), &bplus_a(), ProductMode::Intersect).unwrap();
        let al = p.alphabet().clone();
        for (w, want) in [("ba", true), ("bba", true), ("a", false), ("b", false)] {
            assert_eq!(p.accepts(&al.word_from_str(w).unwrap()), want, "{w}");
        }
        assert!(language_equiv(&p, &bplus_a()));
    }

    #[test]
    fn disjoint_intersection_is_empty() {
        let al = alpha("ab");
        let just_a = EdgeLabeledDfa::new(al.clone(), 2, &[(0, 0, 1)], &[1]).unwrap();
        let just_b = EdgeLabeledDfa::new(al, 2, &[(0, 1, 1)], &[1]).unwrap();
        let p = product(&just_a, &just_b, ProductMode::Intersect).unwrap();
        assert!(p.is_empty_language());
    }

    #[test]
    fn union_accepts_both() {
        let p = product(&bstar_a(), &bplus_a(), ProductMode::Union).unwrap();
        assert!(language_equiv(&p, &bstar_a()));
    }

    #[test]
    fn minimize_is_idempotent_and_preserves_language() {
        let d = bplus_a();
        let m = minimize(&d);
        assert!(language_equiv(&d, &m));
        assert_eq!(minimize(&m).state_count(), m.state_count());
    }

    #[test]
    fn distinguishing_word_for_bstar_a_vs_bplus_a() {
        let w = distinguishing_word(&bstar_a(), &bplus_a()).unwrap();
        assert_eq!(bstar_a().alphabet().format_word(&w), "a");
    }

    #[test]
    fn equivalent_to_self() {
        let d = bstar_a();
        assert!(language_equiv(&d, &d));
    }
}
