use std::fmt;

use crate::error::{Error, Result};

/// A finite alphabet whose listing order is its total order.
///
/// Letters are single visible characters. Words are handled internally as
/// slices of letter indices, so comparing indices compares letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    letters: Vec<char>,
}

impl OrderedAlphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet(
                "an alphabet needs at least one letter".into(),
            ));
        }
        for (i, &c) in letters.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::InvalidAlphabet(format!(
                    "{c:?} is not a visible character"
                )));
            }
            if letters[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {c:?}")));
            }
        }
        Ok(OrderedAlphabet { letters })
    }

    /// Reads an alphabet such as `"ab"` or `"a b"`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        OrderedAlphabet::new(text.chars().filter(|c| !c.is_whitespace()))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn index(&self, letter: char) -> Option<usize> {
        self.letters.iter().position(|&c| c == letter)
    }

    /// Converts a word into letter indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .map(|c| self.index(c).ok_or(Error::ForeignLetter(c)))
            .collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.letters[i]).collect()
    }
}

impl fmt::Display for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().collect();
        f.write_str(&s)
    }
}

/// All words over `alphabet_size` letters of length at most `max_len`, in radix order.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * alphabet_size);
        for w in &level {
            for a in 0..alphabet_size {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}
