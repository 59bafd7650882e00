//! Test-only oracles, deliberately independent of the library's own
//! decision procedures: product enumeration and dynamic programming over
//! the raw code words, plus brute-force enumeration helpers and a small
//! deterministic generator for randomized suites.

#![allow(dead_code)] // each test binary uses its own subset

use std::collections::HashSet;

use synchro_core::{Alphabet, CodeSet, Decomposition, Word};

/// All words over an `m`-letter alphabet with length in `0..=max_len`,
/// in length-then-lexicographic order.
pub fn all_words(m: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * m);
        for word in &frontier {
            for letter in 0..m {
                let mut longer = word.clone();
                longer.push(letter);
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every product of code words with length at most `max_len`, deduplicated.
pub fn products_up_to(code: &CodeSet, max_len: usize) -> HashSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(Word::empty());
    let mut frontier: Vec<Word> = vec![Word::empty()];
    while let Some(product) = frontier.pop() {
        for x in code.words() {
            if product.len() + x.len() > max_len {
                continue;
            }
            let longer = product.concat(x);
            if seen.insert(longer.clone()) {
                frontier.push(longer);
            }
        }
    }
    seen
}

/// Completability decided by brute force: `w` is a factor of some product
/// of code words iff it is a factor of one of length at most
/// `|w| + 2·k_max` (a covering of `w` wastes less than one block on each
/// side).
pub fn completable_by_products(w: &Word, code: &CodeSet) -> bool {
    products_up_to(code, w.len() + 2 * code.k_max())
        .iter()
        .any(|product| product.contains_factor(w))
}

/// Membership of `w` in the set of products of code words, by dynamic
/// programming over prefix lengths.
pub fn product_membership_dp(w: &Word, code: &CodeSet) -> bool {
    let n = w.len();
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for end in 1..=n {
        reachable[end] = code.words().iter().any(|x| {
            x.len() <= end
                && reachable[end - x.len()]
                && w.as_slice()[end - x.len()..end] == *x.as_slice()
        });
    }
    reachable[n]
}

/// Borderedness by the quadratic definition, written independently of the
/// library's scan.
pub fn unbordered_brute_force(w: &Word) -> bool {
    let s = w.as_slice();
    let n = s.len();
    (1..n).all(|len| s[..len] != s[n - len..])
}

/// Xorshift generator: no external dependency, reproducible failures.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

pub fn random_word(rng: &mut XorShift, m: usize, len: usize) -> Word {
    Word::from_indices((0..len).map(|_| rng.below(m)).collect::<Vec<_>>())
}

pub fn random_unbordered(rng: &mut XorShift, m: usize, len: usize) -> Word {
    loop {
        let u = random_word(rng, m, len);
        if u.is_unbordered().unwrap() {
            return u;
        }
    }
}

pub fn random_code(rng: &mut XorShift) -> CodeSet {
    let m = 2 + rng.below(2);
    let alphabet = Alphabet::latin(m).unwrap();
    loop {
        let count = 1 + rng.below(5);
        let mut words = Vec::new();
        for _ in 0..count {
            let len = 1 + rng.below(4);
            words.push(random_word(rng, m, len));
        }
        words.sort();
        words.dedup();
        if let Ok(code) = CodeSet::new(alphabet.clone(), words) {
            return code;
        }
    }
}

/// Random factorization input: an unbordered base and separating parts
/// scrubbed of any occurrence of it.
pub fn random_decomposition(rng: &mut XorShift) -> Decomposition {
    let m = 2 + rng.below(2);
    let k = 2 + rng.below(4);
    let u = random_unbordered(rng, m, k);
    let part_count = 3 + rng.below(7);
    let parts: Vec<Word> = (0..part_count)
        .map(|_| {
            let len = rng.below(7);
            let mut part = random_word(rng, m, len);
            while let Some(&pos) = part.occurrences_of(&u).unwrap().first() {
                let before = part.slice(0, pos).unwrap();
                let after = part.slice(pos + u.len(), part.len()).unwrap();
                part = before.concat(&after);
            }
            part
        })
        .collect();
    Decomposition::from_parts(u, parts).unwrap()
}
