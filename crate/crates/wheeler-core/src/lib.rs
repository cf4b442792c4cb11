//! Wheeler automata and the decision theory of Wheeler languages.
//!
//! A Wheeler automaton is a finite automaton whose states carry a total order
//! compatible with the co-lexicographic order of the words read along its
//! paths. This crate provides the two automaton representations involved
//! (state-labeled NFAs and edge-labeled partial DFAs), order validation,
//! Wheeler-preserving determinization, minimum-WDFA computation, the
//! polynomial-time test deciding whether the language of a DFA is Wheeler,
//! the forward refinement deciding Wheelerness of reduced NFAs, the closure
//! constructions that stay inside the class, and brute-force oracles used to
//! cross-validate everything at desk scale.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `wheeler-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alphabet;
pub mod automaton;
pub mod constructions;
pub mod decision;
pub mod determinize;
pub mod forward;
pub mod minimal;
pub mod ops;
pub mod oracles;
pub mod order;
pub mod random;

pub use alphabet::{colex_compare, OrderedAlphabet, Word};
pub use automaton::{EdgeLabeledDfa, StateLabeledNfa};
pub use order::WheelerOrder;
