use crate::error::{Error, Result};
use crate::word::Word;

/// An ordered, finite set of input symbols.
///
/// Letters are addressed by index everywhere in this crate; the symbol
/// strings stored here are only used when words are parsed from or rendered
/// to text. The ordering is significant: breadth-first searches explore
/// letters in index order, so it determines which of several equally short
/// witnesses is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from distinct symbol strings, in the given order.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// One single-character symbol per char, e.g. `from_chars("ab")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(|c| c.to_string()))
    }

    /// The first `size` lowercase Latin letters: a, b, c, ...
    pub fn latin(size: usize) -> Result<Self> {
        if size > 26 {
            return Err(Error::AlphabetTooSmall { size: 26, min: size });
        }
        Self::new(('a'..='z').take(size).map(|c| c.to_string()))
    }

    /// Numbered symbols `<prefix>1 .. <prefix>count`, used by families whose
    /// alphabet grows with the state count.
    pub fn numbered(prefix: &str, count: usize) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: usize) -> Result<&str> {
        self.symbols
            .get(letter)
            .map(String::as_str)
            .ok_or(Error::LetterOutOfRange {
                letter,
                size: self.size(),
            })
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    /// True when every symbol is a single character, in which case words
    /// parse and print without separators.
    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word from text. Single-character alphabets read symbols
    /// back to back (`"abaab"`); otherwise symbols are whitespace-separated
    /// (`"a1 a2 a1"`). The empty string parses to the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Word::empty());
        }
        let indices = if self.single_char() && !trimmed.contains(char::is_whitespace) {
            trimmed
                .chars()
                .map(|c| self.index_of(&c.to_string()))
                .collect::<Result<Vec<_>>>()?
        } else {
            trimmed
                .split_whitespace()
                .map(|tok| self.index_of(tok))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word::from_indices(indices))
    }

    /// Renders a word using this alphabet's symbols. The empty word prints
    /// as `λ`.
    pub fn render_word(&self, word: &Word) -> Result<String> {
        if word.is_empty() {
            return Ok("λ".to_string());
        }
        let parts = word
            .letters()
            .map(|l| self.symbol(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(if self.single_char() {
            parts.concat()
        } else {
            parts.join(" ")
        })
    }

    /// Checks that every letter of `word` is valid for this alphabet.
    pub fn check_word(&self, word: &Word) -> Result<()> {
        for letter in word.letters() {
            if letter >= self.size() {
                return Err(Error::LetterOutOfRange {
                    letter,
                    size: self.size(),
                });
            }
        }
        Ok(())
    }
}
