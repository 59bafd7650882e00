//! Breadth-first search over the subset automaton, shared by the reset-word
//! search on DFAs and the incompletable-word search on semi-flower NFAs.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::word::Word;

/// Default bound on the state count of automata fed to subset searches.
/// The subset space is exponential; exceeding the cap fails loudly instead
/// of running open-endedly.
pub const DEFAULT_STATE_CAP: usize = 24;

/// Shortest word leading from `start` to a subset satisfying `is_target`,
/// stepping with `step(set, letter)`.
///
/// Letters are explored in index order, so among all shortest witnesses the
/// lexicographically least one (under letter-index order) is returned.
/// `Ok(None)` means no witness exists; the cap produces a distinct error.
pub fn subset_bfs<F, T>(
    n_states: usize,
    n_letters: usize,
    cap: usize,
    start: StateSet,
    step: F,
    is_target: T,
) -> Result<Option<Word>>
where
    F: Fn(&StateSet, usize) -> StateSet,
    T: Fn(&StateSet) -> bool,
{
    if n_states > cap {
        return Err(Error::StateCapExceeded { n_states, cap });
    }
    if is_target(&start) {
        return Ok(Some(Word::empty()));
    }

    let mut parent: HashMap<StateSet, (StateSet, usize)> = HashMap::new();
    let mut queue: VecDeque<StateSet> = VecDeque::new();
    queue.push_back(start.clone());

    while let Some(current) = queue.pop_front() {
        for letter in 0..n_letters {
            let next = step(&current, letter);
            if next == start {
                continue;
            }
            match parent.entry(next.clone()) {
                Entry::Occupied(_) => continue,
                Entry::Vacant(slot) => {
                    slot.insert((current.clone(), letter));
                }
            }
            if is_target(&next) {
                return Ok(Some(reconstruct(&parent, &start, next)));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

fn reconstruct(
    parent: &HashMap<StateSet, (StateSet, usize)>,
    start: &StateSet,
    target: StateSet,
) -> Word {
    let mut letters = Vec::new();
    let mut cursor = target;
    while cursor != *start {
        let (prev, letter) = &parent[&cursor];
        letters.push(*letter);
        cursor = prev.clone();
    }
    letters.reverse();
    Word::from_indices(letters)
}
