//! Ordered alphabets, words over them, and the co-lexicographic order.
//!
//! Symbols are handled as ranks (positions in the alphabet's listing order);
//! characters only appear when words are parsed or printed. The sentinel `#`
//! is never part of an alphabet: it exists only as the implicit label of an
//! automaton's initial state and sorts strictly below every symbol.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// The reserved sentinel character labeling initial states.
pub const SENTINEL: char = '#';

/// A finite set of distinct printable symbols; listing order is colex rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedAlphabet {
    symbols: Vec<char>,
}

/// Construction errors for [`OrderedAlphabet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    Empty,
    Duplicate(char),
    ReservedSentinel,
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::Empty => write!(f, "alphabet must be nonempty"),
            AlphabetError::Duplicate(c) => write!(f, "duplicate symbol '{c}' in alphabet"),
            AlphabetError::ReservedSentinel => {
                write!(f, "'{SENTINEL}' is reserved and cannot be listed")
            }
        }
    }
}

impl core::error::Error for AlphabetError {}

impl OrderedAlphabet {
    /// Builds an alphabet whose colex order is the listing order of `symbols`.
    pub fn new(symbols: &[char]) -> Result<Self, AlphabetError> {
        if symbols.is_empty() {
            return Err(AlphabetError::Empty);
        }
        let mut seen = Vec::new();
        for &c in symbols {
            if c == SENTINEL {
                return Err(AlphabetError::ReservedSentinel);
            }
            if seen.contains(&c) {
                return Err(AlphabetError::Duplicate(c));
            }
            seen.push(c);
        }
        Ok(OrderedAlphabet { symbols: seen })
    }

    /// Alphabet over the distinct characters of `text`, ordered ascending.
    pub fn from_chars_sorted(text: &str) -> Result<Self, AlphabetError> {
        let mut cs: Vec<char> = text.chars().collect();
        cs.sort_unstable();
        cs.dedup();
        Self::new(&cs)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Rank of `c`, or `None` when `c` is not in the alphabet.
    pub fn rank_of(&self, c: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == c)
    }

    /// Character at `rank`. Panics when out of range.
    pub fn char_at(&self, rank: usize) -> char {
        self.symbols[rank]
    }

    /// Parses a word symbol by symbol; fails on the first unknown character.
    pub fn word_from_str(&self, text: &str) -> Result<Word, char> {
        let mut ranks = Vec::with_capacity(text.len());
        for c in text.chars() {
            ranks.push(self.rank_of(c).ok_or(c)?);
        }
        Ok(Word(ranks))
    }

    /// Renders a word with this alphabet's characters.
    pub fn format_word(&self, w: &Word) -> String {
        w.ranks().iter().map(|&r| self.char_at(r)).collect()
    }
}

/// A word as a sequence of symbol ranks; the empty word is allowed.
///
/// The derived `Ord` is plain left-to-right lexicographic order on ranks,
/// suitable for map keys; the domain order is [`colex_compare`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ranks(ranks: Vec<usize>) -> Self {
        Word(ranks)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, rank: usize) {
        self.0.push(rank);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * times);
        for _ in 0..times {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// True when every rank is valid for `alphabet`.
    pub fn is_over(&self, alphabet: &OrderedAlphabet) -> bool {
        self.0.iter().all(|&r| r < alphabet.len())
    }
}

/// Co-lexicographic comparison: words are compared from their last symbol
/// backwards, and a proper suffix precedes every extension of itself.
///
/// Both words must be over the same alphabet; ranks are compared numerically.
pub fn colex_compare(a: &Word, b: &Word) -> Ordering {
    a.0.iter().rev().cmp(b.0.iter().rev())
}

/// Sorts words co-lexicographically, in place.
pub fn colex_sort(words: &mut [Word]) {
    words.sort_by(colex_compare);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> OrderedAlphabet {
        OrderedAlphabet::new(&['a', 'b']).unwrap()
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert_eq!(OrderedAlphabet::new(&[]), Err(AlphabetError::Empty));
        assert_eq!(
            OrderedAlphabet::new(&['a', 'a']),
            Err(AlphabetError::Duplicate('a'))
        );
        assert_eq!(
            OrderedAlphabet::new(&['a', '#']),
            Err(AlphabetError::ReservedSentinel)
        );
    }

    #[test]
    fn last_symbol_decides() {
        let al = ab();
        let ba = al.word_from_str("ba").unwrap();
        let ab_ = al.word_from_str("ab").unwrap();
        assert_eq!(colex_compare(&ba, &ab_), Ordering::Less);
    }

    #[test]
    fn equal_words_compare_equal() {
        let al = ab();
        let a = al.word_from_str("a").unwrap();
        assert_eq!(colex_compare(&a, &a.clone()), Ordering::Equal);
    }

    #[test]
    fn proper_suffix_precedes() {
        let al = ab();
        let a = al.word_from_str("a").unwrap();
        let aa = al.word_from_str("aa").unwrap();
        assert_eq!(colex_compare(&a, &aa), Ordering::Less);
        assert_eq!(colex_compare(&Word::empty(), &a), Ordering::Less);
    }

    #[test]
    fn word_round_trip() {
        let al = OrderedAlphabet::new(&['x', 'a']).unwrap();
        let w = al.word_from_str("axxa").unwrap();
        assert_eq!(w.ranks(), &[1, 0, 0, 1]);
        assert_eq!(al.format_word(&w), "axxa");
        assert_eq!(al.word_from_str("axz"), Err('z'));
    }
}
