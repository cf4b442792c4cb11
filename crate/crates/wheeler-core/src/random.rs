//! Seeded random fixtures: Wheeler NFAs built order-first, plain DFAs, and
//! unary DFAs. Used by the cross-validation suites and the CLI generators.

use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use crate::alphabet::{OrderedAlphabet, Word};
use crate::automaton::{EdgeLabeledDfa, StateLabel, StateLabeledNfa};
use crate::order::{check_wheeler, WheelerOrder};

/// A random Wheeler NFA together with a valid order.
///
/// States are laid out in label-sorted position order and, per symbol,
/// edges are drawn as a monotone staircase (sources of a later target never
/// precede sources of an earlier one), which satisfies both Wheeler axioms
/// by construction. The automaton is then trimmed, its alphabet shrunk to
/// the surviving labels, and resampled until at least two states remain.
pub fn random_wheeler_nfa(
    rng: &mut impl Rng,
    max_states: usize,
    alphabet: &OrderedAlphabet,
) -> (StateLabeledNfa, WheelerOrder) {
    assert!(max_states >= 2);
    loop {
        let n = rng.random_range(2..=max_states);
        let k = rng.random_range(1..=alphabet.len().min(n - 1));
        // Nonempty label-class sizes summing to n - 1.
        let mut sizes = vec![1usize; k];
        for _ in 0..(n - 1 - k) {
            let i = rng.random_range(0..k);
            sizes[i] += 1;
        }
        let mut labels: Vec<StateLabel> = vec![None];
        for (sym, &size) in sizes.iter().enumerate() {
            labels.extend(core::iter::repeat_n(Some(sym), size));
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut lo = 1usize;
        for &size in &sizes {
            let class = lo..lo + size;
            // Monotone staircase: per target (ascending), a window of
            // sources starting no earlier than the previous window's end.
            let mut floor = 0usize;
            for target in class.clone() {
                if floor >= n {
                    break;
                }
                if rng.random_bool(0.9) {
                    let span = rng.random_range(0..=(n - 1 - floor).min(2));
                    let chosen: Vec<usize> = (floor..=floor + span)
                        .filter(|_| rng.random_bool(0.7))
                        .collect();
                    let chosen = if chosen.is_empty() { vec![floor] } else { chosen };
                    for &src in &chosen {
                        edges.push((src, target));
                    }
                    floor = *chosen.last().unwrap();
                }
                // Otherwise the target keeps no incoming edge from this
                // staircase and will be dropped by trim.
                if rng.random_bool(0.3) {
                    floor = (floor + 1).min(n - 1);
                }
            }
            lo += size;
        }
        let finals: Vec<usize> = (1..n).filter(|_| rng.random_bool(0.4)).collect();
        let Ok(raw) = StateLabeledNfa::new(alphabet.clone(), labels, &edges, &finals) else {
            continue;
        };
        let (trimmed, keep) = raw.trim_with_map();
        if trimmed.state_count() < 2 {
            continue;
        }
        let shrunk = shrink_alphabet(&trimmed);
        let ord = WheelerOrder::identity(raw.state_count()).restrict_to(&keep);
        debug_assert!(check_wheeler(&shrunk, &ord).is_empty());
        return (shrunk, ord);
    }
}

/// Rebuilds the automaton over exactly the symbols its labels use, keeping
/// their relative order.
fn shrink_alphabet(a: &StateLabeledNfa) -> StateLabeledNfa {
    let used: Vec<usize> = {
        let mut v: Vec<usize> = a.labels().iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if used.len() == a.alphabet().len() {
        return a.clone();
    }
    let chars: Vec<char> = used.iter().map(|&r| a.alphabet().char_at(r)).collect();
    let alphabet = OrderedAlphabet::new(&chars).expect("nonempty by construction");
    let remap = |old: usize| used.binary_search(&old).unwrap();
    let labels: Vec<StateLabel> = a.labels().iter().map(|l| l.map(remap)).collect();
    let edges: Vec<(usize, usize)> = a.edges().collect();
    let finals: Vec<usize> = a.finals().collect();
    StateLabeledNfa::new(alphabet, labels, &edges, &finals).unwrap()
}

/// A random trimmed DFA with a nonempty language.
pub fn random_dfa(
    rng: &mut impl Rng,
    max_states: usize,
    alphabet: &OrderedAlphabet,
) -> EdgeLabeledDfa {
    assert!(max_states >= 1);
    loop {
        let n = rng.random_range(1..=max_states);
        let k = alphabet.len();
        let mut transitions = Vec::new();
        for q in 0..n {
            for sym in 0..k {
                if rng.random_bool(0.7) {
                    transitions.push((q, sym, rng.random_range(0..n)));
                }
            }
        }
        let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.3)).collect();
        let d = EdgeLabeledDfa::new(alphabet.clone(), n, &transitions, &finals)
            .unwrap()
            .trim();
        if !d.is_empty_language() {
            return d;
        }
    }
}

/// A random trimmed DFA over a one-letter alphabet.
pub fn random_unary_dfa(rng: &mut impl Rng, max_states: usize) -> EdgeLabeledDfa {
    let alphabet = OrderedAlphabet::new(&['a']).unwrap();
    random_dfa(rng, max_states, &alphabet)
}

/// Random words up to `max_len` symbols (the empty word is possible).
pub fn random_words(
    rng: &mut impl Rng,
    alphabet: &OrderedAlphabet,
    count: usize,
    max_len: usize,
) -> Vec<Word> {
    (0..count)
        .map(|_| {
            let len = rng.random_range(0..=max_len);
            Word::from_ranks((0..len).map(|_| rng.random_range(0..alphabet.len())).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn wheeler_nfas_come_with_valid_orders() {
        let al = OrderedAlphabet::new(&['a', 'b', 'c']).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (a, ord) = random_wheeler_nfa(&mut rng, 10, &al);
            assert!(a.validate().is_empty());
            assert!(check_wheeler(&a, &ord).is_empty());
            // Every surviving symbol labels a state.
            for sym in 0..a.alphabet().len() {
                assert!((0..a.state_count()).any(|q| a.label(q) == Some(sym)));
            }
        }
    }

    #[test]
    fn random_dfas_are_trim_and_nonempty() {
        let al = OrderedAlphabet::new(&['a', 'b']).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = random_dfa(&mut rng, 5, &al);
            assert!(d.validate().is_empty());
            assert!(!d.is_empty_language());
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let al = OrderedAlphabet::new(&['a', 'b']).unwrap();
        let d1 = random_dfa(&mut ChaCha8Rng::seed_from_u64(42), 6, &al);
        let d2 = random_dfa(&mut ChaCha8Rng::seed_from_u64(42), 6, &al);
        assert_eq!(d1, d2);
    }
}
