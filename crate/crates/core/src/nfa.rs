//! Nondeterministic automata with possibly empty transition sets, as
//! produced by the semi-flower construction, plus the strong-synchronization
//! test for the zero-completed form.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::word::Word;

/// A nondeterministic automaton `δ: Q × A → 2^Q` with an initial state, a
/// set of terminal states, and an optional absorbing zero state.
///
/// Empty transition sets are allowed: `δ(q, a) = ∅` simply kills that run.
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    /// `delta[state][letter]`, kept as strictly increasing target lists.
    delta: Vec<Vec<Vec<usize>>>,
    initial: usize,
    terminals: Vec<usize>,
    zero: Option<usize>,
    /// Display names, one per state; purely cosmetic (DOT output and
    /// diagnostics). Defaults to the state ids.
    labels: Vec<String>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Vec<Vec<usize>>>,
        initial: usize,
        terminals: Vec<usize>,
        zero: Option<usize>,
    ) -> Result<Self> {
        let n_states = delta.len();
        let m = alphabet.size();
        let check_state = |state: usize| {
            if state >= n_states {
                Err(Error::StateOutOfRange { state, n_states })
            } else {
                Ok(())
            }
        };
        for row in &delta {
            if row.len() != m {
                return Err(Error::TableShape {
                    expected: m,
                    actual: row.len(),
                });
            }
            for cell in row {
                for &target in cell {
                    check_state(target)?;
                }
            }
        }
        check_state(initial)?;
        for &t in &terminals {
            check_state(t)?;
        }
        let mut delta = delta;
        for row in &mut delta {
            for cell in row {
                cell.sort_unstable();
                cell.dedup();
            }
        }
        if let Some(z) = zero {
            check_state(z)?;
            for (letter, cell) in delta[z].iter().enumerate() {
                if cell.as_slice() != [z] {
                    return Err(Error::ZeroNotAbsorbing { state: z, letter });
                }
            }
        }
        let mut terminals = terminals;
        terminals.sort_unstable();
        terminals.dedup();
        let labels = (0..n_states).map(|s| s.to_string()).collect();
        Ok(Nfa {
            alphabet,
            delta,
            initial,
            terminals,
            zero,
            labels,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n_states());
        self.labels = labels;
        self
    }

    pub fn n_states(&self) -> usize {
        self.delta.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn terminals(&self) -> &[usize] {
        &self.terminals
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn label(&self, state: usize) -> &str {
        &self.labels[state]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn transitions(&self) -> &[Vec<Vec<usize>>] {
        &self.delta
    }

    pub fn targets(&self, state: usize, letter: usize) -> Result<&[usize]> {
        let row = self.delta.get(state).ok_or(Error::StateOutOfRange {
            state,
            n_states: self.n_states(),
        })?;
        row.get(letter)
            .map(Vec::as_slice)
            .ok_or(Error::LetterOutOfRange {
                letter,
                size: self.alphabet.size(),
            })
    }

    pub(crate) fn image_step(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut next = StateSet::empty(self.n_states());
        for state in set.iter() {
            for &target in &self.delta[state][letter] {
                next.insert(target);
            }
        }
        next
    }

    /// `δ(S, w) = ⋃_{q ∈ S} δ(q, w)`; may be empty.
    pub fn image(&self, set: &StateSet, word: &Word) -> Result<StateSet> {
        if set.n_states() != self.n_states() {
            return Err(Error::SetSizeMismatch {
                expected: self.n_states(),
                actual: set.n_states(),
            });
        }
        self.alphabet.check_word(word)?;
        let mut current = set.clone();
        let mut next = StateSet::empty(self.n_states());
        for letter in word.letters() {
            next.clear();
            for state in current.iter() {
                for &target in &self.delta[state][letter] {
                    next.insert(target);
                }
            }
            std::mem::swap(&mut current, &mut next);
        }
        Ok(current)
    }

    /// Language membership: some run from the initial state over `word`
    /// ends in a terminal state.
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        let from = StateSet::singleton(self.n_states(), self.initial);
        let image = self.image(&from, word)?;
        Ok(self.terminals.iter().any(|&t| image.contains(t)))
    }

    /// Strong synchronization towards the zero state: true iff from every
    /// state, every run of `word` survives the whole word and ends in zero.
    ///
    /// Only automata with an absorbing zero are supported: the zero is
    /// fixed by every word, so it is the only possible strong-sync target.
    pub fn is_strong_sync_word(&self, word: &Word) -> Result<bool> {
        let zero = self.zero.ok_or(Error::MissingZero)?;
        self.alphabet.check_word(word)?;
        let mut current = StateSet::full(self.n_states());
        let mut next = StateSet::empty(self.n_states());
        for letter in word.letters() {
            next.clear();
            for state in current.iter() {
                let cell = &self.delta[state][letter];
                if cell.is_empty() {
                    // a run dies without reaching zero
                    return Ok(false);
                }
                for &target in cell {
                    next.insert(target);
                }
            }
            std::mem::swap(&mut current, &mut next);
        }
        Ok(current == StateSet::singleton(self.n_states(), zero))
    }
}
