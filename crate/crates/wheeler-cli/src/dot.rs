//! DOT (graphviz) export with deterministic output: states ascending,
//! transitions sorted, final states drawn as double circles. When a Wheeler
//! order is supplied the node labels carry the state's position in it.

use wheeler_core::order::WheelerOrder;

use crate::format::ParsedAutomaton;

pub fn export_dot(automaton: &ParsedAutomaton, order: Option<&WheelerOrder>) -> String {
    let mut out = String::new();
    out.push_str("digraph wheeler {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  init [shape=none, label=\"\"];\n");
    let alphabet = automaton.alphabet();
    let pos = |q: usize| order.map(|o| o.position(q));
    match automaton {
        ParsedAutomaton::StateLabeled(a) => {
            for q in 0..a.state_count() {
                let shape = if a.is_final(q) { "doublecircle" } else { "circle" };
                let label = a.label(q).map_or('#', |r| alphabet.char_at(r));
                let label = match pos(q) {
                    Some(p) => format!("{label} ({p})"),
                    None => label.to_string(),
                };
                out.push_str(&format!("  q{q} [shape={shape}, label=\"{label}\"];\n"));
            }
            out.push_str("  init -> q0;\n");
            for (p, q) in a.edges() {
                out.push_str(&format!("  q{p} -> q{q};\n"));
            }
        }
        ParsedAutomaton::EdgeLabeled(d) => {
            for q in 0..d.state_count() {
                let shape = if d.is_final(q) { "doublecircle" } else { "circle" };
                out.push_str(&format!("  q{q} [shape={shape}, label=\"{q}\"];\n"));
            }
            out.push_str("  init -> q0;\n");
            for (p, sym, q) in d.transitions() {
                let c = alphabet.char_at(sym);
                out.push_str(&format!("  q{p} -> q{q} [label=\"{c}\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_aut;

    #[test]
    fn path_automaton_dot_is_deterministic() {
        let text = "type: state-labeled\nalphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\nlabel: 1 a\nlabel: 2 b\ntrans: 0 1\ntrans: 1 2\n";
        let parsed = parse_aut(text).unwrap();
        let d1 = export_dot(&parsed.automaton, None);
        let d2 = export_dot(&parsed.automaton, None);
        assert_eq!(d1, d2);
        assert!(d1.contains("q2 [shape=doublecircle, label=\"b\"]"));
        assert!(d1.contains("q0 -> q1;"));
    }

    #[test]
    fn order_annotations_show_positions() {
        let text = "type: state-labeled\nalphabet: a\nstates: 2\ninitial: 0\nfinal: 1\nlabel: 1 a\ntrans: 0 1\norder: 0 1\n";
        let parsed = parse_aut(text).unwrap();
        let dot = export_dot(&parsed.automaton, parsed.order.as_ref());
        assert!(dot.contains("label=\"# (0)\""));
        assert!(dot.contains("label=\"a (1)\""));
    }
}
