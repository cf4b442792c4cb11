//! Forward refinement: the coarsest forward-stable ordered partition of a
//! state-labeled NFA, the sorted quotient automaton it induces, and the
//! polynomial-time Wheelerness decision for reduced NFAs.
//!
//! A partition is forward-stable when, for every block C, block C' and
//! symbol e, the e-image of C either contains C' or misses it entirely. The
//! refinement starts from `<{initial}, Q_a1, ..., Q_ak>` and repeatedly
//! splits blocks against a modifier block, placing the image part before the
//! unreached part and after the reached part; after any split the modifier
//! scan restarts from the first block with all reached flags cleared.

use alloc::vec;
use alloc::vec::Vec;

use crate::automaton::{StateLabel, StateLabeledNfa};
use crate::order::{check_wheeler, Violation, WheelerOrder};

/// An ordered partition of the state set into disjoint nonempty blocks, each
/// carrying the algorithm's "reached" flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
    reached: Vec<bool>,
}

impl OrderedPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn reached(&self, block: usize) -> bool {
        self.reached[block]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_all_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Block index of each state.
    pub fn class_map(&self, n: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &q in block {
                map[q] = i;
            }
        }
        map
    }
}

/// The coarsest forward-stable partition of the automaton's states.
pub fn forward_stable_partition(a: &StateLabeledNfa) -> OrderedPartition {
    refine(a).0
}

pub(crate) fn refine(a: &StateLabeledNfa) -> (OrderedPartition, usize) {
    let n = a.state_count();
    let k = a.alphabet().len();
    // Per-state, per-symbol successor lists.
    let succ_by: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|q| (0..k).map(|sym| a.successors_by(q, sym).collect()).collect())
        .collect();

    let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
    for sym in 0..k {
        let class: Vec<usize> = (1..n).filter(|&q| a.label(q) == Some(sym)).collect();
        if !class.is_empty() {
            blocks.push(class);
        }
    }
    let mut reached = vec![false; blocks.len()];
    let mut outer = 0usize;
    loop {
        outer += 1;
        for r in reached.iter_mut() {
            *r = false;
        }
        let mut split_this_round = false;
        let mut modifier = 0;
        while !split_this_round && modifier < blocks.len() {
            // e-images of the modifier block, one per symbol.
            let images: Vec<Vec<usize>> = (0..k)
                .map(|sym| {
                    let mut img: Vec<usize> = blocks[modifier]
                        .iter()
                        .flat_map(|&q| succ_by[q][sym].iter().copied())
                        .collect();
                    img.sort_unstable();
                    img.dedup();
                    img
                })
                .collect();
            let mut i = 0;
            while i < blocks.len() {
                let Some(sym) = a.label(blocks[i][0]) else {
                    i += 1; // initial block: nothing maps into it
                    continue;
                };
                let image = &images[sym];
                let (inter, diff) = split_sorted(&blocks[i], image);
                if inter.is_empty() || diff.is_empty() {
                    // No split; a fully covered block still becomes reached.
                    if !inter.is_empty() {
                        reached[i] = true;
                    }
                    i += 1;
                    continue;
                }
                let (first, second, flags) = if reached[i] {
                    (diff, inter, (true, true))
                } else {
                    (inter, diff, (true, false))
                };
                blocks.splice(i..=i, [first, second]);
                reached.splice(i..=i, [flags.0, flags.1]);
                split_this_round = true;
                i += 2;
            }
            modifier += 1;
        }
        if !split_this_round {
            let partition = OrderedPartition { blocks, reached };
            debug_assert!(is_forward_stable(a, &partition));
            return (partition, outer);
        }
    }
}

/// Direct check of the forward-stability definition, used by tests.
pub fn is_forward_stable(a: &StateLabeledNfa, p: &OrderedPartition) -> bool {
    let k = a.alphabet().len();
    for c in p.blocks() {
        for sym in 0..k {
            let mut image: Vec<usize> = c
                .iter()
                .flat_map(|&q| a.successors_by(q, sym))
                .collect();
            image.sort_unstable();
            image.dedup();
            for c2 in p.blocks() {
                let covered = c2.iter().filter(|q| image.binary_search(q).is_ok()).count();
                if covered != 0 && covered != c2.len() {
                    return false;
                }
            }
        }
    }
    true
}

fn split_sorted(block: &[usize], image: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut inter = Vec::new();
    let mut diff = Vec::new();
    for &q in block {
        if image.binary_search(&q).is_ok() {
            inter.push(q);
        } else {
            diff.push(q);
        }
    }
    (inter, diff)
}

/// Quotient of the automaton by the forward-stable partition, candidate
/// order included.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: StateLabeledNfa,
    pub order: WheelerOrder,
    pub class_map: Vec<usize>,
}

/// Builds the quotient automaton over the forward-stable blocks, ordered by
/// block position. The quotient always accepts the same language; whether
/// the returned order is Wheeler must be checked by the caller.
pub fn quotient_sorted(a: &StateLabeledNfa) -> QuotientResult {
    let partition = forward_stable_partition(a);
    let class_map = partition.class_map(a.state_count());
    let m = partition.block_count();
    let labels: Vec<StateLabel> = partition.blocks().iter().map(|b| a.label(b[0])).collect();
    let mut edges: Vec<(usize, usize)> = a
        .edges()
        .map(|(p, q)| (class_map[p], class_map[q]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let finals: Vec<usize> = (0..m)
        .filter(|&i| partition.blocks()[i].iter().any(|&q| a.is_final(q)))
        .collect();
    let quotient = StateLabeledNfa::new(a.alphabet().clone(), labels, &edges, &finals).unwrap();
    QuotientResult { quotient, order: WheelerOrder::identity(m), class_map }
}

/// Outcome of the reduced-NFA Wheelerness decision.
#[derive(Debug, Clone)]
pub enum WheelerResult {
    /// The induced order is the automaton's unique Wheeler order.
    Wheeler(WheelerOrder),
    /// All blocks are singletons but the induced order fails the axioms; no
    /// Wheeler order exists for a reduced input.
    NotWheeler(Vec<Violation>),
    /// Some block kept two states, certifying the input was not reduced.
    NotSingleton(OrderedPartition),
}

/// Decides Wheelerness of a reduced state-labeled NFA in polynomial time.
/// On non-reduced inputs the `NotSingleton` outcome reports the blocking
/// partition (states in one block share their incoming-word sets).
pub fn recognize_sort_reduced(a: &StateLabeledNfa) -> WheelerResult {
    let partition = forward_stable_partition(a);
    if !partition.is_all_singletons() {
        return WheelerResult::NotSingleton(partition);
    }
    let perm: Vec<usize> = partition.blocks().iter().map(|b| b[0]).collect();
    let ord = WheelerOrder::from_perm(perm).expect("initial block stays first");
    let violations = check_wheeler(a, &ord);
    if violations.is_empty() {
        WheelerResult::Wheeler(ord)
    } else {
        WheelerResult::NotWheeler(violations)
    }
}
