//! Finite sets of words and the completability machinery built on them:
//! deciding whether a word is a factor of some product of code words,
//! searching for the shortest word admitting no such completion, and the
//! fast residue criterion for codes of the form `A^k ∖ {u}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::constructions::semi_flower;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::subset::{subset_bfs, DEFAULT_STATE_CAP};
use crate::word::{Decomposition, Word};

/// A finite set of nonempty words over a common alphabet, with the maximal
/// member length kept at hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    alphabet: Alphabet,
    /// Sorted and deduplicated.
    words: Vec<Word>,
    k_max: usize,
}

impl CodeSet {
    pub fn new(alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut words = words;
        for word in &words {
            if word.is_empty() {
                return Err(Error::EmptyWordInCode);
            }
            alphabet.check_word(word)?;
        }
        let len_before = words.len();
        words.sort();
        words.dedup();
        if words.len() != len_before {
            return Err(Error::DuplicateWordInCode);
        }
        let k_max = words.iter().map(Word::len).max().unwrap_or(0);
        Ok(CodeSet {
            alphabet,
            words,
            k_max,
        })
    }

    /// Convenience constructor from symbol strings.
    pub fn parse(alphabet: &Alphabet, words: &[&str]) -> Result<Self> {
        let words = words
            .iter()
            .map(|s| alphabet.parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet.clone(), words)
    }

    /// The code `A^k ∖ {u}`: all words of length `k` except `u`.
    pub fn full_block_minus(alphabet: &Alphabet, k: usize, u: &Word) -> Result<Self> {
        if u.len() != k {
            return Err(Error::WordLengthMismatch {
                expected: k,
                actual: u.len(),
            });
        }
        if k < 1 {
            return Err(Error::BlockTooShort { k, min: 1 });
        }
        alphabet.check_word(u)?;
        let m = alphabet.size();
        if m < 2 {
            // A^k ∖ {u} would be empty over a unary alphabet
            return Err(Error::AlphabetTooSmall { size: m, min: 2 });
        }
        let mut words = Vec::with_capacity(m.pow(k as u32) - 1);
        let mut current = vec![0usize; k];
        loop {
            let word = Word::from_indices(current.clone());
            if word != *u {
                words.push(word);
            }
            // odometer increment
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                current[pos] += 1;
                if current[pos] < m {
                    break;
                }
                current[pos] = 0;
                if pos == 0 {
                    return Self::new(alphabet.clone(), words);
                }
            }
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }

    /// Parses the line-oriented text format: one word per line, `#` starts
    /// a comment, blank lines are skipped. An optional first line
    /// `alphabet: a b c` declares the alphabet and its order; otherwise the
    /// alphabet is inferred from the symbols seen, sorted.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut word_lines: Vec<(usize, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(cut) => &raw[..cut],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("alphabet:") {
                if alphabet.is_some() || !word_lines.is_empty() {
                    return Err(Error::CodeFormat {
                        line: idx + 1,
                        message: "alphabet declaration must be the first non-blank line".into(),
                    });
                }
                alphabet = Some(
                    Alphabet::new(rest.split_whitespace().map(str::to_string)).map_err(|e| {
                        Error::CodeFormat {
                            line: idx + 1,
                            message: e.to_string(),
                        }
                    })?,
                );
                continue;
            }
            word_lines.push((idx + 1, line.to_string()));
        }
        let alphabet = match alphabet {
            Some(a) => a,
            None => {
                let mut symbols: Vec<char> = word_lines
                    .iter()
                    .flat_map(|(_, l)| l.chars())
                    .filter(|c| !c.is_whitespace())
                    .collect();
                symbols.sort_unstable();
                symbols.dedup();
                if symbols.is_empty() {
                    return Err(Error::EmptyCode);
                }
                Alphabet::new(symbols.iter().map(|c| c.to_string()))?
            }
        };
        let mut words = Vec::new();
        for (line, text) in &word_lines {
            let word = alphabet.parse_word(text).map_err(|e| Error::CodeFormat {
                line: *line,
                message: e.to_string(),
            })?;
            if word.is_empty() {
                return Err(Error::CodeFormat {
                    line: *line,
                    message: "empty word".into(),
                });
            }
            words.push(word);
        }
        Self::new(alphabet, words)
    }

    /// Renders the text format accepted by [`CodeSet::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet.symbols().join(" "));
        for word in &self.words {
            let _ = writeln!(out, "{}", self.alphabet.render_word(word).unwrap());
        }
        out
    }

    /// Completability oracle: `w` is a factor of some product of code
    /// words iff it can be read from somewhere in the semi-flower automaton
    /// of this code.
    pub fn is_completable(&self, word: &Word) -> Result<bool> {
        self.alphabet.check_word(word)?;
        let flower = semi_flower(self);
        let full = StateSet::full(flower.n_states());
        Ok(!flower.image(&full, word)?.is_empty())
    }

    /// True iff every word over the alphabet is completable, decided by
    /// reachability of the empty set in the subset automaton of the
    /// semi-flower automaton.
    pub fn is_complete(&self) -> Result<bool> {
        self.is_complete_capped(DEFAULT_STATE_CAP)
    }

    pub fn is_complete_capped(&self, cap: usize) -> Result<bool> {
        Ok(self.shortest_incompletable_word_capped(cap)?.is_none())
    }

    /// Shortest incompletable word, lexicographically least among the
    /// shortest; `None` iff the code is complete.
    pub fn shortest_incompletable_word(&self) -> Result<Option<Word>> {
        self.shortest_incompletable_word_capped(DEFAULT_STATE_CAP)
    }

    pub fn shortest_incompletable_word_capped(&self, cap: usize) -> Result<Option<Word>> {
        let flower = semi_flower(self);
        subset_bfs(
            flower.n_states(),
            self.alphabet.size(),
            cap,
            StateSet::full(flower.n_states()),
            |set, letter| flower.image_step(set, letter),
            |set| set.is_empty(),
        )
    }
}

/// The word `(u·pad)^(k−1)·u` of length `k² + k − 1`. When no member of a
/// code with maximal length `k` occurs in `u`, this word is incompletable
/// regardless of the padding letter.
pub fn restivo_word(u: &Word, pad: usize, k: usize) -> Result<Word> {
    if u.len() != k {
        return Err(Error::WordLengthMismatch {
            expected: k,
            actual: u.len(),
        });
    }
    if k < 1 {
        return Err(Error::BlockTooShort { k, min: 1 });
    }
    let mut padded = u.clone();
    padded.push(pad);
    Ok(padded.repeat(k - 1).concat(u))
}

/// The hypothesis of the incompleteness test behind [`restivo_word`]:
/// `u` has the code's maximal length and no code word occurs in it.
pub fn check_restivo_precondition(u: &Word, code: &CodeSet) -> Result<bool> {
    if u.len() != code.k_max() {
        return Err(Error::WordLengthMismatch {
            expected: code.k_max(),
            actual: u.len(),
        });
    }
    code.alphabet().check_word(u)?;
    Ok(!code.words().iter().any(|x| u.contains_factor(x)))
}

/// True iff the residues modulo `k` of the elements cover every nonzero
/// residue `1 ..= k−1`.
pub fn is_k_representative<I: IntoIterator<Item = usize>>(elements: I, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::BlockTooShort { k, min: 1 });
    }
    let mut seen = vec![false; k];
    for e in elements {
        seen[e % k] = true;
    }
    Ok(seen[1..].iter().all(|&s| s))
}

/// The forbidden-position sets `S_1 … S_{c}` attached to the occurrences of
/// `u` in a decomposed word, for the code `A^k ∖ {u}`: position `i` in the
/// j-th occurrence is forbidden when no completion into a product of code
/// words can start there.
///
/// Always `0 ∈ S_j`, and the set at the last occurrence is exactly `{0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSets {
    sets: Vec<BTreeSet<usize>>,
    k: usize,
}

impl ForbiddenSets {
    /// The set at the `j`-th occurrence, `j` counted from 1.
    pub fn at_occurrence(&self, j: usize) -> &BTreeSet<usize> {
        &self.sets[j - 1]
    }

    /// Number of occurrences covered (the last set belongs to the final
    /// occurrence).
    pub fn occurrence_count(&self) -> usize {
        self.sets.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    /// True iff the first set is all of `{0, …, k−1}`, which is exactly
    /// incompletability of the decomposed word.
    pub fn first_is_full(&self) -> bool {
        self.sets[0].len() == self.k
    }
}

fn check_forbidden_inputs(u: &Word, k: usize, parts: &Decomposition) -> Result<()> {
    if u.len() != k {
        return Err(Error::WordLengthMismatch {
            expected: k,
            actual: u.len(),
        });
    }
    if let Some(border) = u.shortest_border()? {
        return Err(Error::BorderedWord { border });
    }
    if parts.u() != u {
        return Err(Error::DecompositionMismatch("decomposed by a different word"));
    }
    if parts.occurrences() < 2 {
        return Err(Error::DecompositionMismatch(
            "need at least two occurrences",
        ));
    }
    Ok(())
}

/// Computes the forbidden sets by the backward recurrence: the set at the
/// last occurrence is `{0}`, and each earlier set is
/// `{0} ∪ {(|v| + ℓ) mod k : ℓ in the next set}` where `v` is the part
/// separating the two occurrences.
pub fn forbidden_sets_recurrence(
    u: &Word,
    k: usize,
    parts: &Decomposition,
) -> Result<ForbiddenSets> {
    check_forbidden_inputs(u, k, parts)?;
    let inner = parts.inner_parts();
    let occurrences = parts.occurrences();
    let mut sets = vec![BTreeSet::new(); occurrences];
    sets[occurrences - 1].insert(0);
    for j in (0..occurrences - 1).rev() {
        let gap = inner[j].len();
        let next: Vec<usize> = sets[j + 1].iter().copied().collect();
        let set = &mut sets[j];
        set.insert(0);
        for l in next {
            set.insert((gap + l) % k);
        }
    }
    Ok(ForbiddenSets { sets, k })
}

/// Computes the same sets in closed form: the set at occurrence `j` is
/// `{0}` plus the partial sums `|v_j| + … + |v_{j+t}|` of the separating
/// part lengths, taken modulo `k`. Must agree with
/// [`forbidden_sets_recurrence`] on every input.
pub fn forbidden_sets_closed_form(
    u: &Word,
    k: usize,
    parts: &Decomposition,
) -> Result<ForbiddenSets> {
    check_forbidden_inputs(u, k, parts)?;
    let inner = parts.inner_parts();
    let occurrences = parts.occurrences();
    let mut sets = Vec::with_capacity(occurrences);
    for j in 0..occurrences {
        let mut set = BTreeSet::new();
        set.insert(0);
        let mut sum = 0usize;
        for part in &inner[j..] {
            sum += part.len();
            set.insert(sum % k);
        }
        sets.push(set);
    }
    Ok(ForbiddenSets { sets, k })
}

/// Decides incompletability of `w` for the code `A^k ∖ {u}` without any
/// automaton: fewer than two occurrences of `u` make `w` completable;
/// otherwise `w` is incompletable iff the partial sums of the separating
/// part lengths are `k`-representative.
pub fn is_incompletable_xku(w: &Word, u: &Word, alphabet: &Alphabet) -> Result<bool> {
    if alphabet.size() < 2 {
        return Err(Error::AlphabetTooSmall {
            size: alphabet.size(),
            min: 2,
        });
    }
    let k = u.len();
    if k < 2 {
        return Err(Error::BlockTooShort { k, min: 2 });
    }
    alphabet.check_word(u)?;
    alphabet.check_word(w)?;
    if let Some(border) = u.shortest_border()? {
        return Err(Error::BorderedWord { border });
    }
    let parts = decompose(w, u)?;
    if parts.occurrences() < 2 {
        return Ok(false);
    }
    is_k_representative(partial_sums(&parts), k)
}

/// Partial sums `|v_1|, |v_1|+|v_2|, …` of the separating part lengths.
pub fn partial_sums(parts: &Decomposition) -> Vec<usize> {
    parts
        .inner_parts()
        .iter()
        .scan(0usize, |acc, part| {
            *acc += part.len();
            Some(*acc)
        })
        .collect()
}

fn decompose(w: &Word, u: &Word) -> Result<Decomposition> {
    crate::word::decompose_by(w, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::decompose_by;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    fn w(alphabet: &Alphabet, s: &str) -> Word {
        alphabet.parse_word(s).unwrap()
    }

    #[test]
    fn code_set_validation() {
        let a = ab();
        assert_eq!(CodeSet::new(a.clone(), vec![]), Err(Error::EmptyCode));
        assert_eq!(
            CodeSet::new(a.clone(), vec![Word::empty()]),
            Err(Error::EmptyWordInCode)
        );
        assert_eq!(
            CodeSet::parse(&a, &["aa", "aa"]),
            Err(Error::DuplicateWordInCode)
        );
        let code = CodeSet::parse(&a, &["aa", "b", "aab"]).unwrap();
        assert_eq!(code.k_max(), 3);
        assert!(code.contains(&w(&a, "b")));
        assert!(!code.contains(&w(&a, "ab")));
    }

    #[test]
    fn full_block_minus_builds_complement() {
        let a = ab();
        let code = CodeSet::full_block_minus(&a, 2, &w(&a, "ab")).unwrap();
        assert_eq!(
            code.words(),
            &[w(&a, "aa"), w(&a, "ba"), w(&a, "bb")]
        );
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# fixture\nalphabet: a b\naa\nab  # trailing comment\n\nba\nbb\naab\n";
        let code = CodeSet::from_text(text).unwrap();
        assert_eq!(code.words().len(), 5);
        assert_eq!(code.k_max(), 3);
        let reparsed = CodeSet::from_text(&code.to_text()).unwrap();
        assert_eq!(reparsed, code);
    }

    #[test]
    fn text_format_infers_sorted_alphabet() {
        let code = CodeSet::from_text("ba\nab\n").unwrap();
        assert_eq!(code.alphabet().symbols(), &["a", "b"]);
    }

    #[test]
    fn completability_examples() {
        let a = ab();
        let code = CodeSet::full_block_minus(&a, 2, &w(&a, "ab")).unwrap();
        assert!(code.is_completable(&w(&a, "aa")).unwrap());
        assert!(code.is_completable(&w(&a, "ab")).unwrap());
        assert!(!code.is_completable(&w(&a, "abaab")).unwrap());
    }

    #[test]
    fn completeness_examples() {
        let a = ab();
        let complete = CodeSet::parse(&a, &["aa", "ab", "ba", "bb", "aab"]).unwrap();
        assert!(complete.is_complete().unwrap());
        let incomplete = CodeSet::full_block_minus(&a, 2, &w(&a, "ab")).unwrap();
        assert!(!incomplete.is_complete().unwrap());
        let tiny = CodeSet::parse(&a, &["a"]).unwrap();
        assert!(!tiny.is_complete().unwrap());
        assert_eq!(
            tiny.shortest_incompletable_word().unwrap(),
            Some(w(&a, "b"))
        );
    }

    #[test]
    fn shortest_incompletable_lengths() {
        let a = ab();
        let code = CodeSet::full_block_minus(&a, 2, &w(&a, "ab")).unwrap();
        let word = code.shortest_incompletable_word().unwrap().unwrap();
        assert_eq!(word.len(), 5);
        let complete = CodeSet::parse(&a, &["aa", "ab", "ba", "bb"]).unwrap();
        assert_eq!(complete.shortest_incompletable_word().unwrap(), None);
    }

    #[test]
    fn restivo_word_examples() {
        let a = ab();
        assert_eq!(restivo_word(&w(&a, "ab"), 0, 2).unwrap(), w(&a, "abaab"));
        assert_eq!(restivo_word(&w(&a, "a"), 1, 1).unwrap(), w(&a, "a"));
        let long = restivo_word(&w(&a, "aab"), 0, 3).unwrap();
        assert_eq!(long, w(&a, "aabaaabaaab"));
        assert_eq!(long.len(), 11);
        assert!(matches!(
            restivo_word(&w(&a, "ab"), 0, 3),
            Err(Error::WordLengthMismatch { .. })
        ));
    }

    #[test]
    fn restivo_precondition_examples() {
        let a = ab();
        let base = CodeSet::full_block_minus(&a, 2, &w(&a, "ab")).unwrap();
        assert!(check_restivo_precondition(&w(&a, "ab"), &base).unwrap());
        assert!(!check_restivo_precondition(&w(&a, "aa"), &base).unwrap());
        let with_b = CodeSet::parse(&a, &["b", "aa", "ba", "bb"]).unwrap();
        assert!(!check_restivo_precondition(&w(&a, "ab"), &with_b).unwrap());
    }

    #[test]
    fn k_representative_examples() {
        assert!(is_k_representative([1], 2).unwrap());
        assert!(!is_k_representative([2, 4], 2).unwrap());
        assert!(is_k_representative([1, 2, 3], 3).unwrap());
        assert!(is_k_representative(std::iter::empty(), 1).unwrap());
        assert!(matches!(
            is_k_representative([1], 0),
            Err(Error::BlockTooShort { .. })
        ));
    }

    #[test]
    fn forbidden_sets_on_the_shortest_witness() {
        let a = ab();
        let u = w(&a, "ab");
        let word = w(&a, "abaab");
        let parts = decompose_by(&word, &u).unwrap();
        let sets = forbidden_sets_recurrence(&u, 2, &parts).unwrap();
        assert_eq!(sets.occurrence_count(), 2);
        assert_eq!(
            sets.at_occurrence(2).iter().copied().collect::<Vec<_>>(),
            vec![0]
        );
        assert_eq!(
            sets.at_occurrence(1).iter().copied().collect::<Vec<_>>(),
            vec![0, 1]
        );
        assert!(sets.first_is_full());
        assert_eq!(forbidden_sets_closed_form(&u, 2, &parts).unwrap(), sets);
    }

    #[test]
    fn forbidden_sets_fixed_point_on_empty_gaps() {
        let a = ab();
        let u = w(&a, "ab");
        // ababab: all separating parts empty
        let word = w(&a, "ababab");
        let parts = decompose_by(&word, &u).unwrap();
        let sets = forbidden_sets_recurrence(&u, 2, &parts).unwrap();
        for j in 1..=sets.occurrence_count() {
            assert_eq!(
                sets.at_occurrence(j).iter().copied().collect::<Vec<_>>(),
                vec![0]
            );
        }
    }

    #[test]
    fn forbidden_sets_reject_bad_inputs() {
        let a = ab();
        let u = w(&a, "ab");
        let parts = decompose_by(&w(&a, "ab"), &u).unwrap();
        assert!(matches!(
            forbidden_sets_recurrence(&u, 2, &parts),
            Err(Error::DecompositionMismatch(_))
        ));
        let parts = decompose_by(&w(&a, "abaab"), &u).unwrap();
        assert!(matches!(
            forbidden_sets_recurrence(&u, 3, &parts),
            Err(Error::WordLengthMismatch { .. })
        ));
    }

    #[test]
    fn criterion_examples() {
        let a = ab();
        let u = w(&a, "ab");
        assert!(is_incompletable_xku(&w(&a, "abaab"), &u, &a).unwrap());
        assert!(!is_incompletable_xku(&w(&a, "abab"), &u, &a).unwrap());
        assert!(!is_incompletable_xku(&w(&a, "bbbb"), &u, &a).unwrap());
    }

    #[test]
    fn criterion_rejects_out_of_scope_inputs() {
        let a = ab();
        let unary = Alphabet::from_chars("a").unwrap();
        assert!(matches!(
            is_incompletable_xku(&w(&a, "aa"), &w(&a, "a"), &a),
            Err(Error::BlockTooShort { .. })
        ));
        assert!(matches!(
            is_incompletable_xku(&w(&a, "abaab"), &w(&a, "aba"), &a),
            Err(Error::BorderedWord { .. })
        ));
        assert!(matches!(
            is_incompletable_xku(&Word::empty(), &Word::from_indices(vec![0, 0]), &unary),
            Err(Error::AlphabetTooSmall { .. })
        ));
    }
}
