use std::fmt;

const BLOCK_BITS: usize = 64;

/// A set of state ids of a fixed automaton, stored as a bitmask.
///
/// The number of states is part of the value so that `full` complements and
/// equality are well defined; mixing sets from automata of different sizes
/// is a logic error caught by debug assertions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    blocks: Vec<u64>,
    n_states: usize,
}

impl StateSet {
    pub fn empty(n_states: usize) -> Self {
        StateSet {
            blocks: vec![0; n_states.div_ceil(BLOCK_BITS)],
            n_states,
        }
    }

    pub fn full(n_states: usize) -> Self {
        let mut set = Self::empty(n_states);
        for state in 0..n_states {
            set.insert(state);
        }
        set
    }

    pub fn singleton(n_states: usize, state: usize) -> Self {
        let mut set = Self::empty(n_states);
        set.insert(state);
        set
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(n_states: usize, states: I) -> Self {
        let mut set = Self::empty(n_states);
        for state in states {
            set.insert(state);
        }
        set
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn insert(&mut self, state: usize) {
        assert!(state < self.n_states, "state {state} out of range");
        self.blocks[state / BLOCK_BITS] |= 1 << (state % BLOCK_BITS);
    }

    pub fn contains(&self, state: usize) -> bool {
        assert!(state < self.n_states, "state {state} out of range");
        self.blocks[state / BLOCK_BITS] & (1 << (state % BLOCK_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    /// The only member of a singleton set.
    pub fn sole_member(&self) -> Option<usize> {
        if self.is_singleton() {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn clear(&mut self) {
        self.blocks.fill(0);
    }

    pub fn union_with(&mut self, other: &StateSet) {
        debug_assert_eq!(self.n_states, other.n_states);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        debug_assert_eq!(self.n_states, other.n_states);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_states).filter(move |&s| self.contains(s))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, state) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{state}")?;
        }
        write!(f, "}}")
    }
}
