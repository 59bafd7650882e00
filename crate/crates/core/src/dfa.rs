//! Total deterministic automata, reset words and the decision procedures
//! built on them.

use std::collections::VecDeque;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::subset::{subset_bfs, DEFAULT_STATE_CAP};
use crate::word::Word;

/// A total deterministic finite automaton over `Q × A`, with an optional
/// designated zero state fixed by every letter.
///
/// There is no initial/terminal structure: these automata are studied for
/// their synchronization behaviour, not for the languages they accept.
#[derive(Debug, Clone)]
pub struct Dfa {
    alphabet: Alphabet,
    /// `delta[state][letter]`, total by construction.
    delta: Vec<Vec<usize>>,
    zero: Option<usize>,
}

/// Outcome of scanning for all-loop states. Two or more such states make
/// the automaton unsynchronizable, so no single one is singled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroScan {
    Absent,
    Unique(usize),
    Multiple(Vec<usize>),
}

impl ZeroScan {
    pub fn unique(&self) -> Option<usize> {
        match self {
            ZeroScan::Unique(state) => Some(*state),
            _ => None,
        }
    }
}

impl Dfa {
    /// Validates the table shape, all targets, and, when a zero state is
    /// declared, that every letter fixes it.
    pub fn new(alphabet: Alphabet, delta: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Self> {
        let n_states = delta.len();
        let m = alphabet.size();
        for row in &delta {
            if row.len() != m {
                return Err(Error::TableShape {
                    expected: m,
                    actual: row.len(),
                });
            }
            for &target in row {
                if target >= n_states {
                    return Err(Error::StateOutOfRange {
                        state: target,
                        n_states,
                    });
                }
            }
        }
        if let Some(z) = zero {
            if z >= n_states {
                return Err(Error::StateOutOfRange { state: z, n_states });
            }
            for (letter, &target) in delta[z].iter().enumerate() {
                if target != z {
                    return Err(Error::ZeroNotAbsorbing { state: z, letter });
                }
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            zero,
        })
    }

    pub fn n_states(&self) -> usize {
        self.delta.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.delta
    }

    /// Single transition step.
    pub fn step(&self, state: usize, letter: usize) -> Result<usize> {
        let row = self.delta.get(state).ok_or(Error::StateOutOfRange {
            state,
            n_states: self.n_states(),
        })?;
        row.get(letter).copied().ok_or(Error::LetterOutOfRange {
            letter,
            size: self.alphabet.size(),
        })
    }

    /// The action of a word: `δ(q, w)` by left-to-right folding, so
    /// `apply(q, λ) = q`.
    pub fn apply(&self, state: usize, word: &Word) -> Result<usize> {
        let mut current = state;
        if current >= self.n_states() {
            return Err(Error::StateOutOfRange {
                state,
                n_states: self.n_states(),
            });
        }
        for letter in word.letters() {
            current = self.step(current, letter)?;
        }
        Ok(current)
    }

    /// Pointwise extension of [`Dfa::apply`] to sets of states.
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
                next.insert(self.delta[state][letter]);
            }
            std::mem::swap(&mut current, &mut next);
        }
        Ok(current)
    }

    fn image_step(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut next = StateSet::empty(self.n_states());
        for state in set.iter() {
            next.insert(self.delta[state][letter]);
        }
        next
    }

    /// True iff `word` maps the full state set onto a single state.
    pub fn is_reset_word(&self, word: &Word) -> Result<bool> {
        Ok(self
            .image(&StateSet::full(self.n_states()), word)?
            .is_singleton())
    }

    /// Shortest reset word, lexicographically least under letter-index
    /// order among the shortest; `None` if the automaton is not
    /// synchronizing. Uses the default state cap of
    /// [`DEFAULT_STATE_CAP`].
    pub fn shortest_reset_word(&self) -> Result<Option<Word>> {
        self.shortest_reset_word_capped(DEFAULT_STATE_CAP)
    }

    /// As [`Dfa::shortest_reset_word`] with an explicit cap on the state
    /// count admitted to the exponential subset search.
    pub fn shortest_reset_word_capped(&self, cap: usize) -> Result<Option<Word>> {
        subset_bfs(
            self.n_states(),
            self.alphabet.size(),
            cap,
            StateSet::full(self.n_states()),
            |set, letter| self.image_step(set, letter),
            |set| set.is_singleton(),
        )
    }

    /// Decides synchronizability in polynomial time by checking that every
    /// pair of states can be merged by some word. Agrees with
    /// [`Dfa::shortest_reset_word`] returning a witness whenever the cap
    /// permits running both.
    pub fn is_synchronizing(&self) -> bool {
        let letters: Vec<usize> = (0..self.alphabet.size()).collect();
        self.is_synchronizing_over(&letters)
    }

    /// Synchronizability of the sub-automaton restricted to the given
    /// letters. Out-of-range letters are ignored.
    pub fn is_synchronizing_over(&self, letters: &[usize]) -> bool {
        let n = self.n_states();
        if n <= 1 {
            return true;
        }
        let pair_index = |p: usize, q: usize| {
            let (lo, hi) = if p < q { (p, q) } else { (q, p) };
            lo * n + hi
        };

        // reverse edges between unordered pairs; a pair is "merging" when
        // some letter collapses it directly
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        let mut mergeable = vec![false; n * n];
        let mut queue = VecDeque::new();
        for p in 0..n {
            for q in (p + 1)..n {
                let from = pair_index(p, q);
                for &letter in letters {
                    if letter >= self.alphabet.size() {
                        continue;
                    }
                    let (tp, tq) = (self.delta[p][letter], self.delta[q][letter]);
                    if tp == tq {
                        if !mergeable[from] {
                            mergeable[from] = true;
                            queue.push_back(from);
                        }
                    } else {
                        reverse[pair_index(tp, tq)].push(from);
                    }
                }
            }
        }
        while let Some(pair) = queue.pop_front() {
            for &from in &reverse[pair] {
                if !mergeable[from] {
                    mergeable[from] = true;
                    queue.push_back(from);
                }
            }
        }
        (0..n).all(|p| ((p + 1)..n).all(|q| mergeable[pair_index(p, q)]))
    }

    /// Scans for states fixed by every letter. A unique one is the zero
    /// state; two or more are reported as such, since the automaton then
    /// cannot be synchronizing and picking one silently would hide the
    /// defect.
    pub fn find_zero_state(&self) -> ZeroScan {
        let fixed: Vec<usize> = (0..self.n_states())
            .filter(|&state| self.delta[state].iter().all(|&t| t == state))
            .collect();
        match fixed.len() {
            0 => ZeroScan::Absent,
            1 => ZeroScan::Unique(fixed[0]),
            _ => ZeroScan::Multiple(fixed),
        }
    }

    /// True iff every letter occurs in every reset word, i.e. removing any
    /// single letter breaks synchronization. Errors if the automaton is not
    /// synchronizing to begin with.
    pub fn is_proper(&self) -> Result<bool> {
        if !self.is_synchronizing() {
            return Err(Error::NotSynchronizing);
        }
        let m = self.alphabet.size();
        for removed in 0..m {
            let rest: Vec<usize> = (0..m).filter(|&l| l != removed).collect();
            if self.is_synchronizing_over(&rest) {
                // a reset word avoiding `removed` exists
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A copy of this automaton keeping only the given letters (indices
    /// into the current alphabet, in the given order).
    pub fn restrict_letters(&self, keep: &[usize]) -> Result<Dfa> {
        let symbols = keep
            .iter()
            .map(|&l| self.alphabet.symbol(l).map(str::to_string))
            .collect::<Result<Vec<_>>>()?;
        let alphabet = Alphabet::new(symbols)?;
        let delta = self
            .delta
            .iter()
            .map(|row| keep.iter().map(|&l| row[l]).collect())
            .collect();
        Dfa::new(alphabet, delta, self.zero)
    }
}
