//! Graphviz DOT export for quick visual inspection of the constructed
//! automata. Output is deterministic: UTF-8, LF line endings, states and
//! letters in index order, parallel edges merged into one comma-separated
//! label.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::dfa::Dfa;
use crate::nfa::Nfa;

fn node_shape(is_zero: bool, is_terminal: bool) -> &'static str {
    match (is_zero, is_terminal) {
        (true, _) => "square",
        (false, true) => "doublecircle",
        (false, false) => "circle",
    }
}

fn write_header(out: &mut String) {
    out.push_str("digraph automaton {\n");
    out.push_str("  rankdir=LR;\n");
}

fn write_edges(out: &mut String, edges: BTreeMap<(usize, usize), Vec<String>>) {
    for ((from, to), symbols) in edges {
        let _ = writeln!(out, "  q{from} -> q{to} [label=\"{}\"];", symbols.join(","));
    }
    out.push_str("}\n");
}

impl Dfa {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        write_header(&mut out);
        for state in 0..self.n_states() {
            let shape = node_shape(self.zero() == Some(state), false);
            let _ = writeln!(out, "  q{state} [label=\"{state}\", shape={shape}];");
        }
        let mut edges: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        for (state, row) in self.transitions().iter().enumerate() {
            for (letter, &target) in row.iter().enumerate() {
                edges
                    .entry((state, target))
                    .or_default()
                    .push(self.alphabet().symbols()[letter].clone());
            }
        }
        write_edges(&mut out, edges);
        out
    }
}

impl Nfa {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        write_header(&mut out);
        out.push_str("  __start [shape=point, style=invis];\n");
        for state in 0..self.n_states() {
            let shape = node_shape(
                self.zero() == Some(state),
                self.terminals().contains(&state),
            );
            let _ = writeln!(
                out,
                "  q{state} [label=\"{}\", shape={shape}];",
                self.label(state)
            );
        }
        let _ = writeln!(out, "  __start -> q{};", self.initial());
        let mut edges: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        for (state, row) in self.transitions().iter().enumerate() {
            for (letter, cell) in row.iter().enumerate() {
                for &target in cell {
                    edges
                        .entry((state, target))
                        .or_default()
                        .push(self.alphabet().symbols()[letter].clone());
                }
            }
        }
        write_edges(&mut out, edges);
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::alphabet::Alphabet;
    use crate::codesets::CodeSet;
    use crate::constructions::{build_fhat_k_u, semi_flower};

    #[test]
    fn dfa_dot_has_one_node_per_state_and_square_zero() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let dfa = build_fhat_k_u(&ab, &ab.parse_word("ab").unwrap()).unwrap();
        let dot = dfa.to_dot();
        assert_eq!(dot.matches(", shape=").count(), 4);
        assert!(dot.contains("q0 [label=\"0\", shape=square]"));
        assert!(dot.contains("q2 -> q0 [label=\"b\"];"));
        // parallel edges merge: state 3 goes to 1 on both letters
        assert!(dot.contains("q3 -> q1 [label=\"a,b\"];"));
        assert!(!dot.contains('\r'));
    }

    #[test]
    fn nfa_dot_skips_empty_cells() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let code = CodeSet::parse(&ab, &["aa", "ab", "ba", "bb", "aab"]).unwrap();
        let flower = semi_flower(&code);
        let dot = flower.to_dot();
        // node `aa` (id 2) has no a-successor: its only edge is the b-edge
        assert!(dot.contains("q2 -> q0 [label=\"b\"];"));
        assert!(!dot.contains("q2 -> q0 [label=\"a"));
        // hub is initial and terminal
        assert!(dot.contains("q0 [label=\"1\", shape=doublecircle]"));
        assert!(dot.contains("__start -> q0;"));
    }
}
