//! Builders for the automaton families under study: the semi-flower
//! automaton of a finite code, its zero-completion, the explicit 2k-state
//! automaton attached to `A^k ∖ {u}`, and the chain family whose alphabet
//! grows with the state count.

use std::collections::BTreeMap;

use crate::alphabet::Alphabet;
use crate::codesets::CodeSet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::word::Word;

/// Trie over the nonempty proper prefixes of the code words, the skeleton
/// of the semi-flower automaton. Node 0 is the hub (the empty prefix and
/// every completed code word); shared prefixes are merged.
struct FlowerBlueprint {
    /// prefix -> state id; the empty prefix (hub) is implicit as state 0.
    nodes: BTreeMap<Word, usize>,
}

impl FlowerBlueprint {
    fn build(code: &CodeSet) -> Self {
        let mut nodes = BTreeMap::new();
        let mut next_id = 1;
        // words come out of the CodeSet sorted, so node ids follow the
        // conventional drawing order of the flower
        for word in code.words() {
            for cut in 1..word.len() {
                let prefix = word.slice(0, cut).expect("prefix within bounds");
                nodes.entry(prefix).or_insert_with(|| {
                    let id = next_id;
                    next_id += 1;
                    id
                });
            }
        }
        FlowerBlueprint { nodes }
    }

    fn n_states(&self) -> usize {
        self.nodes.len() + 1
    }
}

/// The semi-flower automaton of a code: a trie over the proper prefixes of
/// the code words whose every completed word loops back to the single
/// initial/terminal hub state. The automaton recognizes the submonoid
/// generated by the code, and every simple cycle passes through the hub and
/// is labeled by a code word.
///
/// State 0 is the hub; display labels start at "1" to match the usual
/// drawings, which reserve "0" for the zero state added by
/// [`complete_with_zero`].
pub fn semi_flower(code: &CodeSet) -> Nfa {
    let blueprint = FlowerBlueprint::build(code);
    let n = blueprint.n_states();
    let m = code.alphabet().size();
    let mut delta = vec![vec![Vec::new(); m]; n];

    let mut extend = |prefix: &Word, state: usize| {
        for (letter, cell) in delta[state].iter_mut().enumerate() {
            let mut longer = prefix.clone();
            longer.push(letter);
            if code.contains(&longer) {
                cell.push(0);
            }
            if let Some(target) = blueprint.nodes.get(&longer) {
                cell.push(*target);
            }
        }
    };
    extend(&Word::empty(), 0);
    for (prefix, &state) in &blueprint.nodes {
        extend(prefix, state);
    }

    let labels = (1..=n).map(|i| i.to_string()).collect();
    Nfa::new(code.alphabet().clone(), delta, 0, vec![0], None)
        .expect("flower construction produces a valid table")
        .with_labels(labels)
}

/// Adds an absorbing zero state receiving every previously undefined
/// transition. The zero becomes state 0 and all existing states shift up by
/// one, so completed automata always carry their zero at id 0; nonempty
/// transition sets are otherwise unchanged.
pub fn complete_with_zero(nfa: &Nfa) -> Result<Nfa> {
    if let Some(z) = nfa.zero() {
        return Err(Error::ZeroAlreadyPresent(z));
    }
    let n = nfa.n_states();
    let m = nfa.alphabet().size();
    let mut delta = vec![vec![Vec::new(); m]; n + 1];
    for cell in &mut delta[0] {
        cell.push(0);
    }
    for (state, row) in nfa.transitions().iter().enumerate() {
        for (letter, cell) in row.iter().enumerate() {
            delta[state + 1][letter] = if cell.is_empty() {
                vec![0]
            } else {
                cell.iter().map(|&t| t + 1).collect()
            };
        }
    }
    let terminals = nfa.terminals().iter().map(|&t| t + 1).collect();
    let mut labels = vec!["0".to_string()];
    labels.extend(nfa.labels().iter().cloned());
    Ok(Nfa::new(
        nfa.alphabet().clone(),
        delta,
        nfa.initial() + 1,
        terminals,
        Some(0),
    )?
    .with_labels(labels))
}

/// The zero-completed semi-flower automaton of a code.
pub fn fhat(code: &CodeSet) -> Nfa {
    complete_with_zero(&semi_flower(code)).expect("fresh flower has no zero")
}

/// The explicit 2k-state deterministic automaton with zero attached to the
/// code `A^k ∖ {u}` for an unbordered word `u = a_1 … a_k`:
///
/// * states `1 ..= k` advance along `u` (state `i` moves to `i+1` on `a_i`),
///   any other letter diverts state `i` to `k+i`;
/// * state `k` falls into the zero state 0 on `a_k` and restarts at 1
///   otherwise;
/// * states `k+1 ..= 2k−1` form a chain that every letter advances, ending
///   back at state 1.
///
/// Its reset words are exactly the words incompletable for `A^k ∖ {u}`,
/// even though it is far smaller than the completed semi-flower automaton
/// of that code.
pub fn build_fhat_k_u(alphabet: &Alphabet, u: &Word) -> Result<Dfa> {
    let k = u.len();
    if k < 2 {
        return Err(Error::BlockTooShort { k, min: 2 });
    }
    let m = alphabet.size();
    if m < 2 {
        return Err(Error::AlphabetTooSmall { size: m, min: 2 });
    }
    alphabet.check_word(u)?;
    if let Some(border) = u.shortest_border()? {
        return Err(Error::BorderedWord { border });
    }

    let n = 2 * k;
    let letters_of_u: Vec<usize> = u.letters().collect();
    let mut delta = vec![vec![0usize; m]; n];
    for i in 1..k {
        for (b, target) in delta[i].iter_mut().enumerate() {
            *target = if b == letters_of_u[i - 1] { i + 1 } else { k + i };
        }
    }
    for (b, target) in delta[k].iter_mut().enumerate() {
        *target = if b == letters_of_u[k - 1] { 0 } else { 1 };
    }
    for (i, row) in delta.iter_mut().enumerate().take(n - 1).skip(k + 1) {
        row.fill(i + 1);
    }
    delta[n - 1].fill(1);
    Dfa::new(alphabet.clone(), delta, Some(0))
}

/// The n-state chain automaton with zero over an (n−1)-letter alphabet
/// `a1 … a(n−1)`: letter `a1` drops state 1 into the zero state, letter
/// `a(i+1)` swaps states `i` and `i+1`, and every other letter loops. Its
/// shortest reset word has length `n(n−1)/2`, the maximum possible for an
/// n-state automaton with zero.
pub fn build_chain_zero(n: usize) -> Result<Dfa> {
    if n < 3 {
        return Err(Error::ChainTooSmall(n));
    }
    let alphabet = Alphabet::numbered("a", n - 1)?;
    let m = n - 1;
    let mut delta: Vec<Vec<usize>> = (0..n).map(|state| vec![state; m]).collect();
    delta[1][0] = 0;
    for i in 1..n - 1 {
        // letter a_{i+1} has index i
        delta[i][i] = i + 1;
        delta[i + 1][i] = i;
    }
    Dfa::new(alphabet, delta, Some(0))
}
