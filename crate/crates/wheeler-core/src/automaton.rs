//! The two automaton representations: state-labeled NFAs and edge-labeled
//! partial DFAs.
//!
//! States are dense integers `0..n` with the initial state fixed at `0`.
//! State-labeled automata are input-consistent by construction: every state
//! except the initial one carries the unique symbol labeling all of its
//! incoming edges, and the initial state carries the sentinel `#`. Partial
//! DFAs are used everywhere; completion with a sink is an explicit, opt-in
//! transform (see [`crate::ops`]).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{OrderedAlphabet, Word, SENTINEL};

/// Label of a state: `None` is the sentinel `#` (initial state only),
/// `Some(rank)` an alphabet symbol. `None` sorts below every symbol, which
/// matches the sentinel's position in the colex order.
pub type StateLabel = Option<usize>;

/// Structural defects found by [`StateLabeledNfa::validate`] and
/// [`EdgeLabeledDfa::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An edge enters the initial state.
    IncomingToInitial { from: usize },
    /// `state` is not reachable from the initial state.
    NotReachable { state: usize },
    /// `state` cannot reach any final state.
    NotCoReachable { state: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IncomingToInitial { from } => {
                write!(f, "edge from state {from} enters the initial state")
            }
            Violation::NotReachable { state } => write!(f, "state {state} is unreachable"),
            Violation::NotCoReachable { state } => {
                write!(f, "state {state} cannot reach a final state")
            }
        }
    }
}

/// Errors rejected at construction time (malformed parts, not graph defects).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    NoStates,
    BadStateId { id: usize, states: usize },
    BadSymbolRank { rank: usize, alphabet: usize },
    InitialNotSentinel,
    SentinelOnNonInitial { state: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::NoStates => write!(f, "automaton needs at least the initial state"),
            BuildError::BadStateId { id, states } => {
                write!(f, "state id {id} out of range (states: {states})")
            }
            BuildError::BadSymbolRank { rank, alphabet } => {
                write!(f, "symbol rank {rank} out of range (alphabet size: {alphabet})")
            }
            BuildError::InitialNotSentinel => {
                write!(f, "state 0 must carry the sentinel label '{SENTINEL}'")
            }
            BuildError::SentinelOnNonInitial { state } => {
                write!(f, "state {state} cannot carry the sentinel label")
            }
        }
    }
}

impl core::error::Error for BuildError {}

/// A state-labeled (input-consistent) NFA with initial state `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateLabeledNfa {
    alphabet: OrderedAlphabet,
    labels: Vec<StateLabel>,
    succ: Vec<Vec<usize>>,
    finals: Vec<bool>,
}

impl StateLabeledNfa {
    /// Builds an automaton from its parts. Duplicate edges are collapsed;
    /// graph-level invariants are checked by [`validate`](Self::validate),
    /// not here.
    pub fn new(
        alphabet: OrderedAlphabet,
        labels: Vec<StateLabel>,
        edges: &[(usize, usize)],
        finals: &[usize],
    ) -> Result<Self, BuildError> {
        let n = labels.len();
        if n == 0 {
            return Err(BuildError::NoStates);
        }
        if labels[0].is_some() {
            return Err(BuildError::InitialNotSentinel);
        }
        for (q, l) in labels.iter().enumerate().skip(1) {
            match l {
                None => return Err(BuildError::SentinelOnNonInitial { state: q }),
                Some(r) if *r >= alphabet.len() => {
                    return Err(BuildError::BadSymbolRank { rank: *r, alphabet: alphabet.len() })
                }
                _ => {}
            }
        }
        let mut succ = vec![BTreeSet::new(); n];
        for &(p, q) in edges {
            if p >= n {
                return Err(BuildError::BadStateId { id: p, states: n });
            }
            if q >= n {
                return Err(BuildError::BadStateId { id: q, states: n });
            }
            succ[p].insert(q);
        }
        let mut fin = vec![false; n];
        for &q in finals {
            if q >= n {
                return Err(BuildError::BadStateId { id: q, states: n });
            }
            fin[q] = true;
        }
        Ok(StateLabeledNfa {
            alphabet,
            labels,
            succ: succ.into_iter().map(|s| s.into_iter().collect()).collect(),
            finals: fin,
        })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, q: usize) -> StateLabel {
        self.labels[q]
    }

    pub fn labels(&self) -> &[StateLabel] {
        &self.labels
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    /// All successors of `q`, regardless of label.
    pub fn successors(&self, q: usize) -> &[usize] {
        &self.succ[q]
    }

    /// Successors of `q` labeled with symbol rank `sym`.
    pub fn successors_by(&self, q: usize, sym: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[q].iter().copied().filter(move |&t| self.labels[t] == Some(sym))
    }

    /// All edges, ordered by (from, to).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(p, ts)| ts.iter().map(move |&t| (p, t)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(|v| v.len()).sum()
    }

    /// Predecessor lists, computed on demand.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.state_count()];
        for (p, q) in self.edges() {
            pred[q].push(p);
        }
        pred
    }

    /// Replaces the final-state set (used by the prefix-closure transforms).
    pub fn with_finals(&self, finals: &[usize]) -> Result<Self, BuildError> {
        let edges: Vec<_> = self.edges().collect();
        StateLabeledNfa::new(self.alphabet.clone(), self.labels.clone(), &edges, finals)
    }

    /// True when no state has two equally-labeled successors.
    pub fn is_deterministic(&self) -> bool {
        (0..self.state_count()).all(|q| {
            let mut seen = BTreeSet::new();
            self.succ[q].iter().all(|&t| seen.insert(self.labels[t]))
        })
    }

    /// The set of states reached from state 0 by reading `w`, ascending.
    pub fn run(&self, w: &Word) -> Vec<usize> {
        let mut cur = vec![0usize];
        for &sym in w.ranks() {
            if sym >= self.alphabet.len() {
                return Vec::new();
            }
            let mut next = BTreeSet::new();
            for &q in &cur {
                for t in self.successors_by(q, sym) {
                    next.insert(t);
                }
            }
            cur = next.into_iter().collect();
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Membership of `w` in the accepted language.
    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).iter().any(|&q| self.finals[q])
    }

    /// Reports every broken graph invariant, in state order.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (p, q) in self.edges() {
            if q == 0 {
                out.push(Violation::IncomingToInitial { from: p });
            }
        }
        let reach = reachable(self.state_count(), |q| self.succ[q].clone());
        let coreach = coreachable(self.state_count(), &self.edges().collect::<Vec<_>>(), &self.finals);
        for q in 0..self.state_count() {
            if !reach[q] {
                out.push(Violation::NotReachable { state: q });
            }
        }
        for q in 0..self.state_count() {
            if !coreach[q] {
                out.push(Violation::NotCoReachable { state: q });
            }
        }
        out
    }

    /// Drops states that are unreachable or cannot reach a final state and
    /// renumbers the survivors densely, keeping their relative order. An
    /// automaton with empty language trims to the bare initial state with no
    /// finals.
    pub fn trim(&self) -> Self {
        self.trim_with_map().0
    }

    /// Like [`trim`](Self::trim), also returning the original ids of the
    /// surviving states (new id = index in the returned list).
    pub fn trim_with_map(&self) -> (Self, Vec<usize>) {
        let n = self.state_count();
        let reach = reachable(n, |q| self.succ[q].clone());
        let coreach = coreachable(n, &self.edges().collect::<Vec<_>>(), &self.finals);
        if !coreach[0] {
            // Initial not co-reachable means the language is empty.
            let bare = StateLabeledNfa::new(self.alphabet.clone(), vec![None], &[], &[]).unwrap();
            return (bare, vec![0]);
        }
        let keep: Vec<usize> =
            (0..n).filter(|&q| q == 0 || (reach[q] && coreach[q])).collect();
        (self.restrict_to(&keep), keep)
    }

    /// Sub-automaton induced by `keep` (must contain 0, ascending).
    pub(crate) fn restrict_to(&self, keep: &[usize]) -> Self {
        debug_assert_eq!(keep.first(), Some(&0));
        let mut new_id = vec![usize::MAX; self.state_count()];
        for (i, &q) in keep.iter().enumerate() {
            new_id[q] = i;
        }
        let labels: Vec<StateLabel> = keep.iter().map(|&q| self.labels[q]).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(p, q)| new_id[p] != usize::MAX && new_id[q] != usize::MAX)
            .map(|(p, q)| (new_id[p], new_id[q]))
            .collect();
        let finals: Vec<usize> = keep
            .iter()
            .enumerate()
            .filter(|(_, &q)| self.finals[q])
            .map(|(i, _)| i)
            .collect();
        StateLabeledNfa::new(self.alphabet.clone(), labels, &edges, &finals).unwrap()
    }

    /// True for the canonical empty-language automaton produced by `trim`.
    pub fn is_empty_language(&self) -> bool {
        self.finals.iter().all(|&f| !f)
    }
}

/// An edge-labeled partial DFA with initial state `0`. Unlike state-labeled
/// automata, the initial state may have incoming edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledDfa {
    alphabet: OrderedAlphabet,
    delta: Vec<Vec<Option<usize>>>,
    finals: Vec<bool>,
}

impl EdgeLabeledDfa {
    /// Builds a DFA from labeled transitions `(from, symbol rank, to)`.
    /// A repeated `(from, symbol)` key must agree with the earlier target.
    pub fn new(
        alphabet: OrderedAlphabet,
        n: usize,
        transitions: &[(usize, usize, usize)],
        finals: &[usize],
    ) -> Result<Self, BuildError> {
        if n == 0 {
            return Err(BuildError::NoStates);
        }
        let k = alphabet.len();
        let mut delta = vec![vec![None; k]; n];
        for &(p, sym, q) in transitions {
            if p >= n {
                return Err(BuildError::BadStateId { id: p, states: n });
            }
            if q >= n {
                return Err(BuildError::BadStateId { id: q, states: n });
            }
            if sym >= k {
                return Err(BuildError::BadSymbolRank { rank: sym, alphabet: k });
            }
            match delta[p][sym] {
                Some(prev) if prev != q => {
                    return Err(BuildError::BadStateId { id: q, states: n })
                }
                _ => delta[p][sym] = Some(q),
            }
        }
        let mut fin = vec![false; n];
        for &q in finals {
            if q >= n {
                return Err(BuildError::BadStateId { id: q, states: n });
            }
            fin[q] = true;
        }
        Ok(EdgeLabeledDfa { alphabet, delta, finals: fin })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn step(&self, q: usize, sym: usize) -> Option<usize> {
        self.delta[q].get(sym).copied().flatten()
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    /// Transitions ordered by (from, symbol).
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(sym, t)| t.map(|q| (p, sym, q)))
        })
    }

    /// The state reached from 0 reading `w`, if the whole word is readable.
    pub fn run(&self, w: &Word) -> Option<usize> {
        self.run_from(0, w)
    }

    /// The state reached from `q` reading `w`, if defined.
    pub fn run_from(&self, q: usize, w: &Word) -> Option<usize> {
        let mut cur = q;
        for &sym in w.ranks() {
            cur = self.step(cur, sym)?;
        }
        Some(cur)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).is_some_and(|q| self.finals[q])
    }

    /// Reports unreachable and non-co-reachable states.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.state_count();
        let reach = reachable(n, |q| self.delta[q].iter().flatten().copied().collect());
        let edges: Vec<(usize, usize)> = self.transitions().map(|(p, _, q)| (p, q)).collect();
        let coreach = coreachable(n, &edges, &self.finals);
        let mut out = Vec::new();
        for q in 0..n {
            if !reach[q] {
                out.push(Violation::NotReachable { state: q });
            }
        }
        for q in 0..n {
            if !coreach[q] {
                out.push(Violation::NotCoReachable { state: q });
            }
        }
        out
    }

    /// Same contract as [`StateLabeledNfa::trim`].
    pub fn trim(&self) -> Self {
        let n = self.state_count();
        let reach = reachable(n, |q| self.delta[q].iter().flatten().copied().collect());
        let edges: Vec<(usize, usize)> = self.transitions().map(|(p, _, q)| (p, q)).collect();
        let coreach = coreachable(n, &edges, &self.finals);
        if !coreach[0] {
            return EdgeLabeledDfa::new(self.alphabet.clone(), 1, &[], &[]).unwrap();
        }
        let keep: Vec<usize> = (0..n).filter(|&q| q == 0 || (reach[q] && coreach[q])).collect();
        let mut new_id = vec![usize::MAX; n];
        for (i, &q) in keep.iter().enumerate() {
            new_id[q] = i;
        }
        let transitions: Vec<(usize, usize, usize)> = self
            .transitions()
            .filter(|&(p, _, q)| new_id[p] != usize::MAX && new_id[q] != usize::MAX)
            .map(|(p, sym, q)| (new_id[p], sym, new_id[q]))
            .collect();
        let finals: Vec<usize> = keep
            .iter()
            .enumerate()
            .filter(|(_, &q)| self.finals[q])
            .map(|(i, _)| i)
            .collect();
        EdgeLabeledDfa::new(self.alphabet.clone(), keep.len(), &transitions, &finals).unwrap()
    }

    pub fn is_empty_language(&self) -> bool {
        self.finals.iter().all(|&f| !f)
    }
}

/// Conversion errors between the two representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConversionError {
    /// `state_to_edge_labeled` needs a deterministic input.
    NotDeterministic { state: usize },
    /// Exact relabeling needs an input-consistent DFA; the state has
    /// incoming edges with the two named symbol ranks.
    NotInputConsistent { state: usize, labels: (usize, usize) },
}

impl fmt::Display for ConversionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConversionError::NotDeterministic { state } => {
                write!(f, "state {state} has two equally-labeled successors")
            }
            ConversionError::NotInputConsistent { state, labels } => write!(
                f,
                "state {state} has incoming edges labeled with ranks {} and {}",
                labels.0, labels.1
            ),
        }
    }
}

impl core::error::Error for ConversionError {}

/// Converts an edge-labeled DFA into a state-labeled automaton by splitting
/// each state by incoming symbol. Accepts the same language; the result has
/// at most `1 + n·|Σ|` states and is deterministic viewed as an NFA.
pub fn edge_to_state_labeled(d: &EdgeLabeledDfa) -> StateLabeledNfa {
    // State (q, sym) holds iff some edge labeled sym enters q; the initial
    // pair is (0, #). BFS keeps only reachable pairs.
    let mut ids: Vec<(usize, StateLabel)> = vec![(0, None)];
    let index_of = |ids: &mut Vec<(usize, StateLabel)>, key: (usize, StateLabel)| -> usize {
        match ids.iter().position(|&k| k == key) {
            Some(i) => i,
            None => {
                ids.push(key);
                ids.len() - 1
            }
        }
    };
    let mut edges = Vec::new();
    let mut head = 0;
    while head < ids.len() {
        let (q, _) = ids[head];
        for sym in 0..d.alphabet().len() {
            if let Some(t) = d.step(q, sym) {
                let to = index_of(&mut ids, (t, Some(sym)));
                edges.push((head, to));
            }
        }
        head += 1;
    }
    let labels: Vec<StateLabel> = ids.iter().map(|&(_, l)| l).collect();
    let finals: Vec<usize> = ids
        .iter()
        .enumerate()
        .filter(|(_, &(q, _))| d.is_final(q))
        .map(|(i, _)| i)
        .collect();
    StateLabeledNfa::new(d.alphabet().clone(), labels, &edges, &finals).unwrap()
}

/// Converts a deterministic state-labeled automaton into an edge-labeled DFA
/// (edge labels are the target-state labels).
pub fn state_to_edge_labeled(a: &StateLabeledNfa) -> Result<EdgeLabeledDfa, ConversionError> {
    let mut transitions = Vec::new();
    for q in 0..a.state_count() {
        let mut seen: Vec<usize> = Vec::new();
        for &t in a.successors(q) {
            let sym = a.label(t).expect("only the initial state lacks a label");
            if seen.contains(&sym) {
                return Err(ConversionError::NotDeterministic { state: q });
            }
            seen.push(sym);
            transitions.push((q, sym, t));
        }
    }
    let finals: Vec<usize> = a.finals().collect();
    Ok(EdgeLabeledDfa::new(a.alphabet().clone(), a.state_count(), &transitions, &finals).unwrap())
}

/// Relabels an input-consistent, trim DFA into state-labeled form without
/// changing the state set (the structural inverse of
/// [`state_to_edge_labeled`]). Fails when some state has incoming edges with
/// two different symbols or when the initial state has incoming edges.
pub fn to_state_labeled_exact(d: &EdgeLabeledDfa) -> Result<StateLabeledNfa, ConversionError> {
    let n = d.state_count();
    let mut labels: Vec<StateLabel> = vec![None; n];
    for (_, sym, q) in d.transitions() {
        if q == 0 {
            return Err(ConversionError::NotInputConsistent { state: 0, labels: (sym, sym) });
        }
        match labels[q] {
            None => labels[q] = Some(sym),
            Some(prev) if prev != sym => {
                return Err(ConversionError::NotInputConsistent { state: q, labels: (prev, sym) })
            }
            _ => {}
        }
    }
    // A non-initial state with no incoming edge is unreachable; require trim.
    for (q, l) in labels.iter().enumerate().skip(1) {
        if l.is_none() {
            return Err(ConversionError::NotInputConsistent { state: q, labels: (0, 0) });
        }
    }
    let edges: Vec<(usize, usize)> = d.transitions().map(|(p, _, q)| (p, q)).collect();
    let finals: Vec<usize> = d.finals().collect();
    Ok(StateLabeledNfa::new(d.alphabet().clone(), labels, &edges, &finals).unwrap())
}

fn reachable(n: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(q) = stack.pop() {
        for t in succ(q) {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

fn coreachable(n: usize, edges: &[(usize, usize)], finals: &[bool]) -> Vec<bool> {
    let mut pred = vec![Vec::new(); n];
    for &(p, q) in edges {
        pred[q].push(p);
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&q| finals[q]).collect();
    for &q in &stack {
        seen[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &pred[q] {
            if !seen[p] {
                seen[p] = true;
                stack.push(p);
            }
        }
    }
    seen
}
