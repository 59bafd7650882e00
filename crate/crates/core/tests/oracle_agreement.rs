//! Cross-validation of the completability machinery against independent
//! oracles: the residue criterion against the semi-flower image test
//! (exhaustively over all binary words up to length 18), both against raw
//! product enumeration at small lengths, and the semi-flower language
//! against direct dynamic programming on random codes.

mod common;

use std::collections::HashSet;

use synchro_core::{
    canonical_unbordered_with_all_letters, decompose_by, forbidden_sets_closed_form,
    forbidden_sets_recurrence, is_incompletable_xku, restivo_word, semi_flower, Alphabet, CodeSet,
    StateSet, Word,
};

use common::{
    all_words, product_membership_dp, products_up_to, random_code, unbordered_brute_force,
    XorShift,
};

fn binary() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

/// The image-emptiness completability oracle with the flower built once.
struct FlowerOracle {
    flower: synchro_core::Nfa,
    full: StateSet,
}

impl FlowerOracle {
    fn new(code: &CodeSet) -> Self {
        let flower = semi_flower(code);
        let full = StateSet::full(flower.n_states());
        FlowerOracle { flower, full }
    }

    fn completable(&self, w: &Word) -> bool {
        !self.flower.image(&self.full, w).unwrap().is_empty()
    }
}

#[test]
fn criterion_matches_flower_oracle_exhaustively() {
    let alphabet = binary();
    for u_text in ["ab", "aab"] {
        let u = alphabet.parse_word(u_text).unwrap();
        let k = u.len();
        let code = CodeSet::full_block_minus(&alphabet, k, &u).unwrap();
        let oracle = FlowerOracle::new(&code);
        for (i, w) in all_words(2, 18).iter().enumerate() {
            let by_criterion = is_incompletable_xku(w, &u, &alphabet).unwrap();
            let by_oracle = !oracle.completable(w);
            assert_eq!(
                by_criterion, by_oracle,
                "criterion and flower oracle disagree on {w:?} for u = {u_text}"
            );
            // pin the public entry point on a thin subsample; it rebuilds
            // the flower per call, so the full range would be wasteful
            if i % 997 == 0 {
                assert_eq!(code.is_completable(w).unwrap(), !by_criterion);
            }

            // the first forbidden set being full is the same statement,
            // and both routes to it must agree
            let parts = decompose_by(w, &u).unwrap();
            if parts.occurrences() >= 2 {
                let by_recurrence = forbidden_sets_recurrence(&u, k, &parts).unwrap();
                let by_closed_form = forbidden_sets_closed_form(&u, k, &parts).unwrap();
                assert_eq!(by_recurrence, by_closed_form);
                assert_eq!(
                    by_recurrence.first_is_full(),
                    by_criterion,
                    "first forbidden set mismatch on {w:?}"
                );
            }
        }
    }
}

#[test]
fn flower_oracle_matches_product_enumeration() {
    let binary = binary();
    let ternary = Alphabet::from_chars("abc").unwrap();
    let grid: Vec<(Alphabet, &str, usize)> =
        vec![(binary.clone(), "ab", 10), (binary, "aab", 8), (ternary, "ab", 7)];
    for (alphabet, u_text, max_len) in grid {
        let u = alphabet.parse_word(u_text).unwrap();
        let code = CodeSet::full_block_minus(&alphabet, u.len(), &u).unwrap();
        let oracle = FlowerOracle::new(&code);

        // factors of all products long enough to cover any word we test
        let products = products_up_to(&code, max_len + 2 * code.k_max());
        let mut factors: HashSet<Word> = HashSet::new();
        for product in &products {
            for start in 0..=product.len() {
                for end in start..=(product.len().min(start + max_len)) {
                    factors.insert(product.slice(start, end).unwrap());
                }
            }
        }

        for w in all_words(alphabet.size(), max_len) {
            assert_eq!(
                oracle.completable(&w),
                factors.contains(&w),
                "flower oracle and product enumeration disagree on {w:?} for u = {u_text}"
            );
        }
    }
}

#[test]
fn border_scan_matches_brute_force_up_to_12() {
    for w in all_words(2, 12) {
        if w.is_empty() {
            continue;
        }
        assert_eq!(w.is_unbordered().unwrap(), unbordered_brute_force(&w));
    }
}

#[test]
fn canonical_words_are_unbordered_and_cover_the_alphabet() {
    for m in 1..=3usize {
        let alphabet = Alphabet::latin(m).unwrap();
        for k in m..=8 {
            if m == 1 && k > 1 {
                continue;
            }
            let u = canonical_unbordered_with_all_letters(&alphabet, k).unwrap();
            assert_eq!(u.len(), k);
            assert!(u.is_unbordered().unwrap());
            for letter in 0..m {
                assert!(u.contains_letter(letter), "letter {letter} missing from {u:?}");
            }
        }
    }
}

#[test]
fn flower_language_matches_membership_dp() {
    let mut rng = XorShift(0x5eed_cafe);
    let mut codes: Vec<CodeSet> = (0..20).map(|_| random_code(&mut rng)).collect();
    let ab = binary();
    codes.push(CodeSet::parse(&ab, &["aa", "ab", "ba", "bb", "aab"]).unwrap());
    codes.push(CodeSet::full_block_minus(&ab, 2, &ab.parse_word("ab").unwrap()).unwrap());
    codes.push(CodeSet::parse(&ab, &["a"]).unwrap());

    for code in &codes {
        let flower = semi_flower(code);
        let m = code.alphabet().size();
        let max_len = if m == 2 { 10 } else { 8 };
        for w in all_words(m, max_len) {
            assert_eq!(
                flower.accepts(&w).unwrap(),
                product_membership_dp(&w, code),
                "language mismatch on {w:?} for code {:?}",
                code.words()
            );
        }
    }
}

/// Enumerates the label words of all simple cycles through the hub and
/// checks the defining properties of the flower shape: every such cycle is
/// labeled by a code word, every code word appears, and no cycle avoids the
/// hub.
#[test]
fn flower_cycles_are_exactly_the_code_words() {
    let mut rng = XorShift(0xfee1_600d);
    let mut codes: Vec<CodeSet> = (0..20).map(|_| random_code(&mut rng)).collect();
    let ab = binary();
    codes.push(CodeSet::parse(&ab, &["aa", "ab", "ba", "bb", "aab"]).unwrap());

    for code in &codes {
        let flower = semi_flower(code);
        let n = flower.n_states();
        let m = code.alphabet().size();

        // depth-first enumeration of simple paths hub -> ... -> hub
        let mut cycle_labels: HashSet<Word> = HashSet::new();
        let mut stack: Vec<(usize, Word, Vec<bool>)> =
            vec![(0, Word::empty(), vec![false; n])];
        while let Some((state, label, visited)) = stack.pop() {
            for letter in 0..m {
                for &target in flower.targets(state, letter).unwrap() {
                    let mut longer = label.clone();
                    longer.push(letter);
                    if target == 0 {
                        cycle_labels.insert(longer);
                    } else if !visited[target] {
                        let mut seen = visited.clone();
                        seen[target] = true;
                        stack.push((target, longer, seen));
                    }
                }
            }
        }
        let expected: HashSet<Word> = code.words().iter().cloned().collect();
        assert_eq!(cycle_labels, expected, "cycles of {:?}", code.words());

        // the subgraph on non-hub states is acyclic: trie edges only ever
        // lengthen the prefix, so a cycle would need the hub
        for state in 1..n {
            let mut frontier = vec![state];
            let mut seen = vec![false; n];
            while let Some(s) = frontier.pop() {
                for letter in 0..m {
                    for &t in flower.targets(s, letter).unwrap() {
                        if t == state {
                            panic!("cycle avoiding the hub through state {state}");
                        }
                        if t != 0 && !seen[t] {
                            seen[t] = true;
                            frontier.push(t);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn restivo_words_are_incompletable_for_unbordered_bases() {
    let mut rng = XorShift(0xabcd_ef01);
    let mut tested = 0;
    while tested < 60 {
        let m = 2 + rng.below(2);
        let alphabet = Alphabet::latin(m).unwrap();
        let k = 2 + rng.below(4);
        let seq: Vec<usize> = (0..k).map(|_| rng.below(m)).collect();
        let u = Word::from_indices(seq);
        if !u.is_unbordered().unwrap() {
            continue;
        }
        tested += 1;
        let pad = rng.below(m);
        let w = restivo_word(&u, pad, k).unwrap();
        assert_eq!(w.len(), k * k + k - 1);
        assert!(
            is_incompletable_xku(&w, &u, &alphabet).unwrap(),
            "restivo word {w:?} completable for u = {u:?}"
        );
        if k <= 3 {
            let code = CodeSet::full_block_minus(&alphabet, k, &u).unwrap();
            assert!(!code.is_completable(&w).unwrap());
        }
    }
}

#[test]
fn incompletable_witnesses_have_the_decomposed_shape() {
    // shortest incompletable words must contain at least two occurrences
    // of u and at least k−1 nonempty separating parts
    let binary = binary();
    let ternary = Alphabet::from_chars("abc").unwrap();
    let grid: Vec<(Alphabet, &str)> = vec![
        (binary.clone(), "ab"),
        (binary.clone(), "aab"),
        (binary, "abb"),
        (ternary, "ab"),
    ];
    for (alphabet, u_text) in grid {
        let u = alphabet.parse_word(u_text).unwrap();
        let k = u.len();
        let code = CodeSet::full_block_minus(&alphabet, k, &u).unwrap();
        let witness = code.shortest_incompletable_word().unwrap().unwrap();
        let parts = decompose_by(&witness, &u).unwrap();
        assert!(parts.occurrences() >= 2, "witness {witness:?} lacks occurrences");
        let nonempty = parts.inner_parts().iter().filter(|v| !v.is_empty()).count();
        assert!(
            nonempty >= k - 1,
            "witness {witness:?} has only {nonempty} nonempty separating parts"
        );
    }
}

#[test]
fn sync_decision_and_reset_search_agree_on_the_families() {
    // the named fixtures up to 14 states: both decision routes must agree
    let mut fixtures: Vec<synchro_core::Dfa> = Vec::new();
    for n in 3..=7 {
        fixtures.push(synchro_core::build_chain_zero(n).unwrap());
    }
    for m in [2usize, 3] {
        let alphabet = Alphabet::latin(m).unwrap();
        for k in m.max(2)..=6 {
            let u = canonical_unbordered_with_all_letters(&alphabet, k).unwrap();
            fixtures.push(synchro_core::build_fhat_k_u(&alphabet, &u).unwrap());
        }
    }
    for dfa in fixtures {
        assert!(dfa.n_states() <= 14);
        assert_eq!(
            dfa.is_synchronizing(),
            dfa.shortest_reset_word().unwrap().is_some()
        );
    }
}

#[test]
fn chain_four_has_no_shorter_reset_word() {
    let dfa = synchro_core::build_chain_zero(4).unwrap();
    let found = dfa.shortest_reset_word().unwrap().unwrap();
    assert_eq!(found.len(), 6);
    for w in all_words(3, 5) {
        assert!(!dfa.is_reset_word(&w).unwrap(), "{w:?} resets too early");
    }
}

/// Completed flowers admit a strong-sync word exactly for incomplete
/// codes: the shortest incompletable word is one, and complete codes admit
/// none at all (checked exhaustively at small lengths).
#[test]
fn strong_sync_words_exist_exactly_for_incomplete_codes() {
    let mut rng = XorShift(0x1234_5678);
    let mut codes: Vec<CodeSet> = (0..15).map(|_| random_code(&mut rng)).collect();
    let ab = binary();
    codes.push(CodeSet::parse(&ab, &["aa", "ab", "ba", "bb", "aab"]).unwrap());
    codes.push(CodeSet::full_block_minus(&ab, 2, &ab.parse_word("ab").unwrap()).unwrap());

    for code in &codes {
        let hat = synchro_core::fhat(code);
        match code.shortest_incompletable_word().unwrap() {
            Some(witness) => {
                assert!(
                    hat.is_strong_sync_word(&witness).unwrap(),
                    "incompletable witness must strongly synchronize {:?}",
                    code.words()
                );
            }
            None => {
                let m = code.alphabet().size();
                for w in all_words(m, 6) {
                    assert!(
                        !hat.is_strong_sync_word(&w).unwrap(),
                        "complete code {:?} admitted strong-sync word {w:?}",
                        code.words()
                    );
                }
            }
        }
    }
}

#[test]
fn no_shorter_incompletable_word_exists_for_the_block_code() {
    let alphabet = binary();
    let u = alphabet.parse_word("ab").unwrap();
    let code = CodeSet::full_block_minus(&alphabet, 2, &u).unwrap();
    let oracle = FlowerOracle::new(&code);
    let witness = code.shortest_incompletable_word().unwrap().unwrap();
    assert_eq!(witness.len(), 5);
    for w in all_words(2, 4) {
        assert!(oracle.completable(&w), "{w:?} should be completable");
    }
}
