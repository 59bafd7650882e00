//! Words over an indexed alphabet and the border/occurrence machinery
//! needed for decomposing a word at the occurrences of an unbordered
//! factor.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// A finite sequence of letter indices. The empty word is a valid value.
///
/// A `Word` does not carry its alphabet; operations that need one validate
/// letter indices at the boundary.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    seq: Vec<usize>,
}

impl Word {
    pub fn empty() -> Self {
        Word { seq: Vec::new() }
    }

    pub fn from_indices(seq: impl Into<Vec<usize>>) -> Self {
        Word { seq: seq.into() }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn push(&mut self, letter: usize) {
        self.seq.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut seq = self.seq.clone();
        seq.extend_from_slice(&other.seq);
        Word { seq }
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word {
            seq: self.seq.repeat(times),
        }
    }

    /// Half-open slice `[start, end)` in the native 0-based convention.
    pub fn slice(&self, start: usize, end: usize) -> Result<Word> {
        if start > end || end > self.len() {
            return Err(Error::FactorRange {
                i: start,
                j: end,
                len: self.len(),
            });
        }
        Ok(Word::from_indices(&self.seq[start..end]))
    }

    /// The 1-based inclusive factor `w[i…j]`: letters `i..=j` when `i ≤ j`,
    /// the empty word when `j = i − 1` (so `w[1…0] = λ`). Any other index
    /// combination is rejected.
    ///
    /// This adapter exists for traceability against sources that use the
    /// 1-based convention; new code should prefer [`Word::slice`].
    pub fn factor_1based(&self, i: usize, j: usize) -> Result<Word> {
        let n = self.len();
        if j + 1 == i && i >= 1 && i <= n + 1 {
            return Ok(Word::empty());
        }
        if i >= 1 && i <= j && j <= n {
            return Ok(Word::from_indices(&self.seq[i - 1..j]));
        }
        Err(Error::FactorRange { i, j, len: n })
    }

    /// The shortest nonempty proper prefix that is also a suffix, if any.
    pub fn shortest_border(&self) -> Result<Option<Word>> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        for len in 1..n {
            if self.seq[..len] == self.seq[n - len..] {
                return Ok(Some(Word::from_indices(&self.seq[..len])));
            }
        }
        Ok(None)
    }

    /// True iff no proper nonempty prefix equals a suffix. Single letters
    /// are unbordered; the empty word is rejected.
    pub fn is_unbordered(&self) -> Result<bool> {
        Ok(self.shortest_border()?.is_none())
    }

    /// All start positions (0-based, ascending) of `factor` in `self`.
    /// Overlapping occurrences are reported; for an unbordered factor
    /// consecutive positions necessarily differ by at least `factor.len()`.
    ///
    /// Naive window scan; inputs here are short. A KMP-style scanner would
    /// slot in behind the same signature if that ever changes.
    pub fn occurrences_of(&self, factor: &Word) -> Result<Vec<usize>> {
        if factor.is_empty() {
            return Err(Error::EmptyWord);
        }
        if factor.len() > self.len() {
            return Ok(Vec::new());
        }
        Ok(self
            .seq
            .windows(factor.len())
            .enumerate()
            .filter(|(_, win)| *win == factor.as_slice())
            .map(|(pos, _)| pos)
            .collect())
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        if factor.len() > self.len() {
            return false;
        }
        self.seq
            .windows(factor.len())
            .any(|win| win == factor.as_slice())
    }

    pub fn contains_letter(&self, letter: usize) -> bool {
        self.seq.contains(&letter)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "λ");
        }
        for (i, l) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The factorization of a word at all occurrences of an unbordered word
/// `u`: parts `v_0, v_1, …, v_{c}` interleaved with `c` copies of `u`,
/// where `c` is the occurrence count and no part contains `u`.
///
/// Because `u` is unbordered, occurrences cannot overlap and this
/// factorization is unique; it is also canonical in the sense that
/// reassembling the parts cannot create occurrences the factorization
/// missed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    u: Word,
    parts: Vec<Word>,
}

impl Decomposition {
    /// Builds a decomposition from explicit parts, validating that `u` is
    /// unbordered and no part contains it. `parts.len()` must be at least 1;
    /// the occurrence count is `parts.len() - 1`.
    pub fn from_parts(u: Word, parts: Vec<Word>) -> Result<Self> {
        if let Some(border) = u.shortest_border()? {
            return Err(Error::BorderedWord { border });
        }
        if parts.is_empty() {
            return Err(Error::DecompositionMismatch("no parts"));
        }
        for part in &parts {
            if part.contains_factor(&u) {
                return Err(Error::DecompositionMismatch("part contains u"));
            }
        }
        Ok(Decomposition { u, parts })
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    /// All parts `v_0 ..= v_c` in order.
    pub fn parts(&self) -> &[Word] {
        &self.parts
    }

    /// Number of occurrences of `u` in the reassembled word.
    pub fn occurrences(&self) -> usize {
        self.parts.len() - 1
    }

    /// The parts strictly between two occurrences of `u`
    /// (`v_1 ..= v_{c-1}` when there are `c ≥ 2` occurrences).
    pub fn inner_parts(&self) -> &[Word] {
        if self.parts.len() <= 2 {
            &[]
        } else {
            &self.parts[1..self.parts.len() - 1]
        }
    }

    /// Concatenates the parts back with `u` interleaved.
    pub fn reassemble(&self) -> Word {
        let mut out = Word::empty();
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                out = out.concat(&self.u);
            }
            out = out.concat(part);
        }
        out
    }
}

/// Factors `w` at every occurrence of the unbordered word `u`.
///
/// Zero occurrences yield the single part `(w)`. A bordered `u` is rejected:
/// its occurrences may overlap, so the factorization would not be unique.
pub fn decompose_by(w: &Word, u: &Word) -> Result<Decomposition> {
    if let Some(border) = u.shortest_border()? {
        return Err(Error::BorderedWord { border });
    }
    let occurrences = w.occurrences_of(u)?;
    let mut parts = Vec::with_capacity(occurrences.len() + 1);
    let mut prev_end = 0;
    for &pos in &occurrences {
        debug_assert!(pos >= prev_end, "unbordered occurrences cannot overlap");
        parts.push(w.slice(prev_end, pos)?);
        prev_end = pos + u.len();
    }
    parts.push(w.slice(prev_end, w.len())?);
    Decomposition::from_parts(u.clone(), parts)
}

/// The canonical unbordered word of length `k` containing every letter of
/// the alphabet: `a^(k−m+1) b c …` for an alphabet `a < b < c < …` of size
/// `m ≤ k`. The construction is re-checked with [`Word::is_unbordered`]
/// before it is returned.
pub fn canonical_unbordered_with_all_letters(alphabet: &Alphabet, k: usize) -> Result<Word> {
    let m = alphabet.size();
    if k < m {
        return Err(Error::BlockTooShort { k, min: m });
    }
    if m == 1 && k > 1 {
        // every unary word of length >= 2 is bordered
        return Err(Error::NoUnborderedWord { k });
    }
    let mut seq = vec![0usize; k - m + 1];
    seq.extend(1..m);
    let word = Word::from_indices(seq);
    if !word.is_unbordered()? {
        return Err(Error::Internal("canonical word failed the border check"));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        // binary test shorthand: a = 0, b = 1, c = 2
        Word::from_indices(
            s.chars()
                .map(|c| (c as u8 - b'a') as usize)
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn factor_1based_matches_inclusive_convention() {
        let aab = w("aab");
        assert_eq!(aab.factor_1based(1, 2).unwrap(), w("aa"));
        assert_eq!(aab.factor_1based(2, 1).unwrap(), Word::empty());
        assert_eq!(aab.factor_1based(3, 3).unwrap(), w("b"));
        assert_eq!(aab.factor_1based(1, 0).unwrap(), Word::empty());
        assert_eq!(aab.factor_1based(4, 3).unwrap(), Word::empty());
        assert!(aab.factor_1based(0, 2).is_err());
        assert!(aab.factor_1based(1, 4).is_err());
        assert!(aab.factor_1based(3, 1).is_err());
    }

    #[test]
    fn unbordered_examples() {
        assert!(w("aab").is_unbordered().unwrap());
        assert!(!w("aba").is_unbordered().unwrap());
        assert!(w("a").is_unbordered().unwrap());
        assert_eq!(w("aba").shortest_border().unwrap(), Some(w("a")));
        assert_eq!(Word::empty().is_unbordered(), Err(Error::EmptyWord));
    }

    #[test]
    fn occurrences_examples() {
        assert_eq!(w("abaab").occurrences_of(&w("ab")).unwrap(), vec![0, 3]);
        assert_eq!(w("bbbb").occurrences_of(&w("ab")).unwrap(), Vec::<usize>::new());
        // overlap allowed for bordered factors
        assert_eq!(w("aaa").occurrences_of(&w("aa")).unwrap(), vec![0, 1]);
        assert_eq!(
            w("abc").occurrences_of(&Word::empty()),
            Err(Error::EmptyWord)
        );
    }

    #[test]
    fn decompose_at_all_occurrences() {
        let d = decompose_by(&w("abaab"), &w("ab")).unwrap();
        assert_eq!(d.parts(), &[Word::empty(), w("a"), Word::empty()]);
        assert_eq!(d.occurrences(), 2);
        assert_eq!(d.inner_parts(), &[w("a")]);
        assert_eq!(d.reassemble(), w("abaab"));
    }

    #[test]
    fn decompose_without_occurrence() {
        let d = decompose_by(&w("bbb"), &w("ab")).unwrap();
        assert_eq!(d.parts(), &[w("bbb")]);
        assert_eq!(d.occurrences(), 0);
        assert_eq!(d.inner_parts(), &[] as &[Word]);
    }

    #[test]
    fn decompose_restivo_shape() {
        // (aab·a)² · aab
        let word = w("aaba").repeat(2).concat(&w("aab"));
        let d = decompose_by(&word, &w("aab")).unwrap();
        assert_eq!(
            d.parts(),
            &[Word::empty(), w("a"), w("a"), Word::empty()]
        );
        assert_eq!(d.occurrences(), 3);
    }

    #[test]
    fn decompose_rejects_bordered_factor() {
        assert!(matches!(
            decompose_by(&w("abaaba"), &w("aba")),
            Err(Error::BorderedWord { .. })
        ));
    }

    #[test]
    fn canonical_unbordered_words() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let abc = Alphabet::from_chars("abc").unwrap();
        let a = Alphabet::from_chars("a").unwrap();
        assert_eq!(canonical_unbordered_with_all_letters(&ab, 3).unwrap(), w("aab"));
        assert_eq!(canonical_unbordered_with_all_letters(&abc, 4).unwrap(), w("aabc"));
        assert_eq!(canonical_unbordered_with_all_letters(&a, 1).unwrap(), w("a"));
        assert!(matches!(
            canonical_unbordered_with_all_letters(&abc, 2),
            Err(Error::BlockTooShort { .. })
        ));
        assert!(matches!(
            canonical_unbordered_with_all_letters(&a, 2),
            Err(Error::NoUnborderedWord { .. })
        ));
    }
}
