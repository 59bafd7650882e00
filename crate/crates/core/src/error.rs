use crate::word::Word;

/// Errors produced by validation, preconditions and resource limits.
///
/// Resource limits ([`Error::StateCapExceeded`]) are deliberately distinct
/// from negative answers: a breadth-first search that runs out of budget is
/// not the same as one that proves no witness exists.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("letter index {letter} out of range for alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("state {state} out of range for automaton with {n_states} states")]
    StateOutOfRange { state: usize, n_states: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("word is bordered (border of length {})", border.len())]
    BorderedWord { border: Word },

    #[error("factor indices ({i}, {j}) invalid for word of length {len}")]
    FactorRange { i: usize, j: usize, len: usize },

    #[error("expected word of length {expected}, got {actual}")]
    WordLengthMismatch { expected: usize, actual: usize },

    #[error("alphabet of size {size} too small, need at least {min}")]
    AlphabetTooSmall { size: usize, min: usize },

    #[error("block length {k} too small, need at least {min}")]
    BlockTooShort { k: usize, min: usize },

    #[error("no unbordered word of length {k} exists over a unary alphabet")]
    NoUnborderedWord { k: usize },

    #[error("state cap exceeded: {n_states} states > cap {cap}")]
    StateCapExceeded { n_states: usize, cap: usize },

    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    #[error("automaton already has a zero state ({0})")]
    ZeroAlreadyPresent(usize),

    #[error("declared zero state {state} is not fixed by letter {letter}")]
    ZeroNotAbsorbing { state: usize, letter: usize },

    #[error("operation requires an automaton with an absorbing zero state")]
    MissingZero,

    #[error("transition table has wrong shape: expected {expected} entries, got {actual}")]
    TableShape { expected: usize, actual: usize },

    #[error("state set sized for {actual} states used with an automaton of {expected}")]
    SetSizeMismatch { expected: usize, actual: usize },

    #[error("code must contain at least one word")]
    EmptyCode,

    #[error("code must not contain the empty word")]
    EmptyWordInCode,

    #[error("duplicate word in code")]
    DuplicateWordInCode,

    #[error("decomposition does not match word {0}")]
    DecompositionMismatch(&'static str),

    #[error("chain automaton needs n >= 3, got {0}")]
    ChainTooSmall(usize),

    #[error("line {line}: {message}")]
    CodeFormat { line: usize, message: String },

    #[error("internal error: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
