//! Synchronizing automata with zero and incomplete sets of words.
//!
//! This crate builds the automaton families whose shortest reset words
//! realize the known extremal lengths for automata with zero (`n(n−1)/2`
//! when the alphabet may grow with the state count, `n²/4 + n/2 − 1` over
//! a fixed alphabet) and the word-combinatorics machinery the second
//! family rests on: completability of words with respect to a finite code,
//! the semi-flower automaton recognizing the code's products, and the
//! residue criterion for codes of the form `A^k ∖ {u}` with `u` unbordered.
//!
//! ```
//! use synchro_core::{build_fhat_k_u, Alphabet};
//!
//! let alphabet = Alphabet::from_chars("ab")?;
//! let u = alphabet.parse_word("ab")?;
//! let dfa = build_fhat_k_u(&alphabet, &u)?;
//! let reset = dfa.shortest_reset_word()?.expect("synchronizing");
//! assert_eq!(alphabet.render_word(&reset)?, "abaab");
//! assert_eq!(reset.len(), 5); // k² + k − 1 with k = 2
//! # Ok::<(), synchro_core::Error>(())
//! ```

pub mod alphabet;
pub mod codesets;
pub mod constructions;
pub mod dfa;
pub mod dot;
pub mod error;
pub mod nfa;
pub mod state_set;
pub mod subset;
pub mod word;

pub use alphabet::Alphabet;
pub use codesets::{
    check_restivo_precondition, forbidden_sets_closed_form, forbidden_sets_recurrence,
    is_incompletable_xku, is_k_representative, partial_sums, restivo_word, CodeSet, ForbiddenSets,
};
pub use constructions::{build_chain_zero, build_fhat_k_u, complete_with_zero, fhat, semi_flower};
pub use dfa::{Dfa, ZeroScan};
pub use error::{Error, Result};
pub use nfa::Nfa;
pub use state_set::StateSet;
pub use subset::DEFAULT_STATE_CAP;
pub use word::{canonical_unbordered_with_all_letters, decompose_by, Decomposition, Word};
