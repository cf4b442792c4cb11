//! The `.aut` text format: a line-oriented, diffable automaton description.
//!
//! ```text
//! # comments run to the end of the line
//! type: state-labeled            (or edge-labeled)
//! alphabet: a b x                (listing order = colex order)
//! states: 3
//! initial: 0
//! final: 2
//! label: 1 a                     (state-labeled bodies; one per state > 0)
//! trans: 0 1                     (edge-labeled bodies use `trans: p sym q`)
//! order: 0 1 2                   (optional ascending Wheeler order)
//! ```
//!
//! Parsing and serialization round-trip bit-exactly on canonical files;
//! serializing a parsed file canonicalizes it (sorted finals and
//! transitions, single spaces, a final newline).

use std::fmt;

use wheeler_core::alphabet::OrderedAlphabet;
use wheeler_core::automaton::{EdgeLabeledDfa, StateLabeledNfa};
use wheeler_core::order::WheelerOrder;

/// A parsed automaton of either representation.
#[derive(Debug, Clone)]
pub enum ParsedAutomaton {
    StateLabeled(StateLabeledNfa),
    EdgeLabeled(EdgeLabeledDfa),
}

impl ParsedAutomaton {
    pub fn alphabet(&self) -> &OrderedAlphabet {
        match self {
            ParsedAutomaton::StateLabeled(a) => a.alphabet(),
            ParsedAutomaton::EdgeLabeled(d) => d.alphabet(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            ParsedAutomaton::StateLabeled(a) => a.state_count(),
            ParsedAutomaton::EdgeLabeled(d) => d.state_count(),
        }
    }
}

/// Contents of one `.aut` file.
#[derive(Debug, Clone)]
pub struct AutFile {
    pub automaton: ParsedAutomaton,
    pub order: Option<WheelerOrder>,
}

/// A parse failure anchored at a line (1-based) and column (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    StateLabeled,
    EdgeLabeled,
}

/// Parses the `.aut` format.
pub fn parse_aut(text: &str) -> Result<AutFile, ParseError> {
    let mut kind: Option<Kind> = None;
    let mut alphabet: Option<OrderedAlphabet> = None;
    let mut states: Option<usize> = None;
    let mut finals: Vec<usize> = Vec::new();
    let mut saw_finals = false;
    let mut labels: Vec<(usize, char, usize)> = Vec::new(); // (state, symbol, line)
    let mut state_edges: Vec<(usize, usize, usize)> = Vec::new(); // (from, to, line)
    let mut edge_edges: Vec<(usize, usize, usize, usize)> = Vec::new(); // (from, sym, to, line)
    let mut order: Option<Vec<usize>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return err(lineno, 1, "expected `key: value`");
        };
        let col = |token: &str| raw.find(token).map_or(1, |i| i + 1);
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "type" => {
                kind = Some(match fields.as_slice() {
                    ["state-labeled"] => Kind::StateLabeled,
                    ["edge-labeled"] => Kind::EdgeLabeled,
                    _ => return err(lineno, col(":"), "type must be state-labeled or edge-labeled"),
                });
            }
            "alphabet" => {
                let mut chars = Vec::new();
                for f in &fields {
                    let mut cs = f.chars();
                    let (Some(c), None) = (cs.next(), cs.next()) else {
                        return err(lineno, col(f), format!("symbol `{f}` must be one character"));
                    };
                    chars.push(c);
                }
                match OrderedAlphabet::new(&chars) {
                    Ok(a) => alphabet = Some(a),
                    Err(e) => return err(lineno, 1, e.to_string()),
                }
            }
            "states" => match fields.as_slice() {
                [n] => match n.parse::<usize>() {
                    Ok(n) if n >= 1 => states = Some(n),
                    _ => return err(lineno, col(n), "states must be a positive integer"),
                },
                _ => return err(lineno, 1, "states takes one integer"),
            },
            "initial" => match fields.as_slice() {
                ["0"] => {}
                [other] => return err(lineno, col(other), "the initial state must be 0"),
                _ => return err(lineno, 1, "initial takes one integer"),
            },
            "final" => {
                saw_finals = true;
                for f in &fields {
                    match f.parse::<usize>() {
                        Ok(q) => finals.push(q),
                        Err(_) => return err(lineno, col(f), format!("bad state id `{f}`")),
                    }
                }
            }
            "label" => match fields.as_slice() {
                [q, sym] => {
                    let Ok(q) = q.parse::<usize>() else {
                        return err(lineno, col(q), format!("bad state id `{q}`"));
                    };
                    let mut cs = sym.chars();
                    let (Some(c), None) = (cs.next(), cs.next()) else {
                        return err(lineno, col(sym), "label must be one character");
                    };
                    labels.push((q, c, lineno));
                }
                _ => return err(lineno, 1, "label takes `state symbol`"),
            },
            "trans" => match fields.as_slice() {
                [p, q] => {
                    let (Ok(p), Ok(q)) = (p.parse::<usize>(), q.parse::<usize>()) else {
                        return err(lineno, 1, "trans takes `from to` for state-labeled bodies");
                    };
                    state_edges.push((p, q, lineno));
                }
                [p, sym, q] => {
                    let (Ok(p), Ok(q)) = (p.parse::<usize>(), q.parse::<usize>()) else {
                        return err(lineno, 1, "trans takes `from symbol to`");
                    };
                    let mut cs = sym.chars();
                    let (Some(c), None) = (cs.next(), cs.next()) else {
                        return err(lineno, col(sym), "transition symbol must be one character");
                    };
                    edge_edges.push((p, c as usize, q, lineno));
                }
                _ => return err(lineno, 1, "trans takes 2 or 3 fields"),
            },
            "order" => {
                let mut perm = Vec::new();
                for f in &fields {
                    match f.parse::<usize>() {
                        Ok(q) => perm.push(q),
                        Err(_) => return err(lineno, col(f), format!("bad state id `{f}`")),
                    }
                }
                order = Some(perm);
            }
            other => return err(lineno, 1, format!("unknown key `{other}`")),
        }
    }

    let Some(kind) = kind else {
        return err(text.lines().count().max(1), 1, "missing `type:` line");
    };
    let Some(alphabet) = alphabet else {
        return err(text.lines().count().max(1), 1, "missing `alphabet:` line");
    };
    let Some(n) = states else {
        return err(text.lines().count().max(1), 1, "missing `states:` line");
    };
    let _ = saw_finals;
    for &q in &finals {
        if q >= n {
            return err(1, 1, format!("final state {q} out of range"));
        }
    }

    let automaton = match kind {
        Kind::StateLabeled => {
            if let Some((p, s, q, line)) = edge_edges.first() {
                let _ = (p, s, q);
                return err(*line, 1, "state-labeled bodies use `trans: from to`");
            }
            let mut label_vec = vec![None; n];
            for &(q, c, line) in &labels {
                if q == 0 || q >= n {
                    return err(line, 1, format!("label state {q} out of range (1..{n})"));
                }
                let Some(rank) = alphabet.rank_of(c) else {
                    return err(line, 1, format!("label symbol `{c}` not in the alphabet"));
                };
                if label_vec[q].replace(rank).is_some() {
                    return err(line, 1, format!("state {q} labeled twice"));
                }
            }
            for q in 1..n {
                if label_vec[q].is_none() {
                    return err(1, 1, format!("state {q} has no `label:` line"));
                }
            }
            let mut edges = Vec::new();
            for &(p, q, line) in &state_edges {
                if p >= n || q >= n {
                    return err(line, 1, "transition state out of range");
                }
                if edges.contains(&(p, q)) {
                    return err(line, 1, format!("duplicate transition {p} -> {q}"));
                }
                edges.push((p, q));
            }
            match StateLabeledNfa::new(alphabet, label_vec, &edges, &finals) {
                Ok(a) => ParsedAutomaton::StateLabeled(a),
                Err(e) => return err(1, 1, e.to_string()),
            }
        }
        Kind::EdgeLabeled => {
            if let Some((_, _, line)) = state_edges.first() {
                return err(*line, 1, "edge-labeled bodies use `trans: from symbol to`");
            }
            if let Some(&(q, c, line)) = labels.first() {
                let _ = (q, c);
                return err(line, 1, "edge-labeled automata have no `label:` lines");
            }
            let mut transitions = Vec::new();
            for &(p, c, q, line) in &edge_edges {
                let c = char::from_u32(c as u32).unwrap();
                if p >= n || q >= n {
                    return err(line, 1, "transition state out of range");
                }
                let Some(rank) = alphabet.rank_of(c) else {
                    return err(line, 1, format!("transition symbol `{c}` not in the alphabet"));
                };
                if transitions.iter().any(|&(p2, s2, _)| (p2, s2) == (p, rank)) {
                    return err(line, 1, format!("duplicate transition from {p} on `{c}`"));
                }
                transitions.push((p, rank, q));
            }
            match EdgeLabeledDfa::new(alphabet, n, &transitions, &finals) {
                Ok(d) => ParsedAutomaton::EdgeLabeled(d),
                Err(e) => return err(1, 1, e.to_string()),
            }
        }
    };

    let order = match order {
        None => None,
        Some(perm) => {
            if matches!(automaton, ParsedAutomaton::EdgeLabeled(_)) {
                return err(1, 1, "order applies to state-labeled automata only");
            }
            if perm.len() != n {
                return err(1, 1, format!("order lists {} states, expected {n}", perm.len()));
            }
            match WheelerOrder::from_perm(perm) {
                Ok(o) => Some(o),
                Err(e) => return err(1, 1, e.to_string()),
            }
        }
    };
    Ok(AutFile { automaton, order })
}

/// Serializes to the canonical form (fixed key order, sorted bodies, single
/// spaces, trailing newline).
pub fn serialize_aut(file: &AutFile) -> String {
    let mut out = String::new();
    let alphabet = file.automaton.alphabet();
    match &file.automaton {
        ParsedAutomaton::StateLabeled(_) => out.push_str("type: state-labeled\n"),
        ParsedAutomaton::EdgeLabeled(_) => out.push_str("type: edge-labeled\n"),
    }
    out.push_str("alphabet:");
    for &c in alphabet.symbols() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    out.push_str(&format!("states: {}\n", file.automaton.state_count()));
    out.push_str("initial: 0\n");
    out.push_str("final:");
    match &file.automaton {
        ParsedAutomaton::StateLabeled(a) => {
            for q in a.finals() {
                out.push_str(&format!(" {q}"));
            }
        }
        ParsedAutomaton::EdgeLabeled(d) => {
            for q in d.finals() {
                out.push_str(&format!(" {q}"));
            }
        }
    }
    out.push('\n');
    match &file.automaton {
        ParsedAutomaton::StateLabeled(a) => {
            for q in 1..a.state_count() {
                let c = alphabet.char_at(a.label(q).expect("labeled"));
                out.push_str(&format!("label: {q} {c}\n"));
            }
            for (p, q) in a.edges() {
                out.push_str(&format!("trans: {p} {q}\n"));
            }
        }
        ParsedAutomaton::EdgeLabeled(d) => {
            for (p, sym, q) in d.transitions() {
                out.push_str(&format!("trans: {p} {} {q}\n", alphabet.char_at(sym)));
            }
        }
    }
    if let Some(ord) = &file.order {
        out.push_str("order:");
        for &q in ord.states() {
            out.push_str(&format!(" {q}"));
        }
        out.push('\n');
    }
    out
}
