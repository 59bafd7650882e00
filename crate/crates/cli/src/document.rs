//! The JSON automaton interchange format. This is the single canonical
//! loader path: DOT is export-only, and anything the analysis commands
//! consume goes through this schema.
//!
//! ```json
//! {
//!   "kind": "dfa",
//!   "alphabet": ["a", "b"],
//!   "states": 4,
//!   "transitions": [[0, 0], [2, 3], [1, 0], [1, 1]],
//!   "zero": 0
//! }
//! ```
//!
//! DFA documents store one target state per cell; NFA documents store a
//! list per cell (possibly empty) and must carry an `initial` state. Keys
//! are written in a fixed order and documents load back rejecting any
//! out-of-range index, shape mismatch, or a declared zero that some letter
//! fails to fix.

use serde::{Deserialize, Serialize};
use synchro_core::{Alphabet, Dfa, Nfa};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocKind {
    Dfa,
    Nfa,
}

/// One transition-table cell: a single state for DFAs, a state list for
/// NFAs. Loading an NFA accepts the scalar form as a singleton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    State(usize),
    Set(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub kind: DocKind,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub transitions: Vec<Vec<Cell>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finals: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
}

impl AutomatonDocument {
    pub fn from_dfa(dfa: &Dfa) -> Self {
        AutomatonDocument {
            kind: DocKind::Dfa,
            alphabet: dfa.alphabet().symbols().to_vec(),
            states: dfa.n_states(),
            transitions: dfa
                .transitions()
                .iter()
                .map(|row| row.iter().map(|&t| Cell::State(t)).collect())
                .collect(),
            initial: None,
            finals: None,
            zero: dfa.zero(),
        }
    }

    pub fn from_nfa(nfa: &Nfa) -> Self {
        AutomatonDocument {
            kind: DocKind::Nfa,
            alphabet: nfa.alphabet().symbols().to_vec(),
            states: nfa.n_states(),
            transitions: nfa
                .transitions()
                .iter()
                .map(|row| row.iter().map(|cell| Cell::Set(cell.clone())).collect())
                .collect(),
            initial: Some(nfa.initial()),
            finals: Some(nfa.terminals().to_vec()),
            zero: nfa.zero(),
        }
    }

    fn check_shape(&self) -> Result<(), CliError> {
        if self.transitions.len() != self.states {
            return Err(CliError::Document(format!(
                "transition table has {} rows for {} states",
                self.transitions.len(),
                self.states
            )));
        }
        Ok(())
    }

    pub fn to_dfa(&self) -> Result<Dfa, CliError> {
        if self.kind != DocKind::Dfa {
            return Err(CliError::Document(
                "this task needs a deterministic automaton (kind \"dfa\")".into(),
            ));
        }
        self.check_shape()?;
        let alphabet = Alphabet::new(self.alphabet.clone())?;
        let delta = self
            .transitions
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| match cell {
                        Cell::State(t) => Ok(*t),
                        Cell::Set(_) => Err(CliError::Document(
                            "dfa cells must be single states, found a list".into(),
                        )),
                    })
                    .collect::<Result<Vec<usize>, CliError>>()
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Dfa::new(alphabet, delta, self.zero)?)
    }

    pub fn to_nfa(&self) -> Result<Nfa, CliError> {
        if self.kind != DocKind::Nfa {
            return Err(CliError::Document(
                "this task needs a nondeterministic automaton (kind \"nfa\")".into(),
            ));
        }
        self.check_shape()?;
        let alphabet = Alphabet::new(self.alphabet.clone())?;
        let delta = self
            .transitions
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| match cell {
                        Cell::State(t) => vec![*t],
                        Cell::Set(ts) => ts.clone(),
                    })
                    .collect()
            })
            .collect();
        let initial = self
            .initial
            .ok_or_else(|| CliError::Document("nfa document lacks an initial state".into()))?;
        let finals = self.finals.clone().unwrap_or_default();
        Ok(Nfa::new(alphabet, delta, initial, finals, self.zero)?)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use synchro_core::{build_fhat_k_u, fhat, CodeSet};

    #[test]
    fn dfa_document_round_trips() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let dfa = build_fhat_k_u(&ab, &ab.parse_word("ab").unwrap()).unwrap();
        let doc = AutomatonDocument::from_dfa(&dfa);
        let reloaded = AutomatonDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(reloaded, doc);
        let dfa2 = reloaded.to_dfa().unwrap();
        assert_eq!(dfa2.transitions(), dfa.transitions());
        assert_eq!(dfa2.zero(), dfa.zero());
    }

    #[test]
    fn nfa_document_round_trips() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let code = CodeSet::parse(&ab, &["aa", "ab", "ba", "bb", "aab"]).unwrap();
        let hat = fhat(&code);
        let doc = AutomatonDocument::from_nfa(&hat);
        let reloaded = AutomatonDocument::from_json(&doc.to_json()).unwrap().to_nfa().unwrap();
        assert_eq!(reloaded.transitions(), hat.transitions());
        assert_eq!(reloaded.initial(), hat.initial());
        assert_eq!(reloaded.terminals(), hat.terminals());
        assert_eq!(reloaded.zero(), hat.zero());
    }

    #[test]
    fn loader_rejects_non_absorbing_zero() {
        let text = r#"{
            "kind": "dfa",
            "alphabet": ["a"],
            "states": 2,
            "transitions": [[1], [1]],
            "zero": 0
        }"#;
        let doc = AutomatonDocument::from_json(text).unwrap();
        assert!(doc.to_dfa().is_err());
    }

    #[test]
    fn loader_rejects_shape_mismatch() {
        let text = r#"{
            "kind": "dfa",
            "alphabet": ["a", "b"],
            "states": 3,
            "transitions": [[0, 0], [1, 1]]
        }"#;
        let doc = AutomatonDocument::from_json(text).unwrap();
        assert!(doc.to_dfa().is_err());
    }

    #[test]
    fn dfa_kind_rejects_list_cells() {
        let text = r#"{
            "kind": "dfa",
            "alphabet": ["a"],
            "states": 1,
            "transitions": [[[0]]]
        }"#;
        let doc = AutomatonDocument::from_json(text).unwrap();
        assert!(doc.to_dfa().is_err());
    }
}
