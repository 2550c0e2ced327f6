use std::fmt::Write as _;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A generator or its inverse. Ordering is `x0 < x0^-1 < x1 < x1^-1 < ...`,
/// the letter order used by shortlex rewriting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Dense code `2 * gen + inverse`.
    pub fn code(self) -> usize {
        2 * self.gen + self.inverse as usize
    }

    pub fn from_code(code: usize) -> Self {
        Letter { gen: code / 2, inverse: code % 2 == 1 }
    }
}

/// A freely reduced word in a free group. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        Word(vec![Letter::pos(gen)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Build from signed 1-based indices: `3` is `x3`, `-3` is `x3^-1`.
    pub fn from_signed(indices: &[i64]) -> Self {
        Self::from_letters(indices.iter().map(|&i| {
            assert!(i != 0, "signed generator index must be nonzero");
            Letter::new(i.unsigned_abs() as usize - 1, i < 0)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// `g w g^-1`
    pub fn conjugate_by(&self, g: &Word) -> Self {
        &(g * self) * &g.inverse()
    }

    /// Sum of letter signs: the image under every generator mapping to `t`.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    /// Largest generator index used, plus one.
    pub fn generator_bound(&self) -> usize {
        self.0.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }

    /// Substitute a word for each generator and reduce.
    pub fn substitute(&self, images: &[Word]) -> Word {
        Word::from_letters(self.0.iter().flat_map(|l| {
            let img = &images[l.gen];
            let img: Vec<Letter> = if l.inverse {
                img.0.iter().rev().map(|x| x.inv()).collect()
            } else {
                img.0.clone()
            };
            img
        }))
    }

    /// Parse `y7 y2 y7^-1 y1^-1` against a generator name table. Tokens may
    /// also be juxtaposed (`x1x2^-1`); names are matched longest first. `1`
    /// and the empty string denote the identity.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let err = |reason: String| Error::WordParse { text: text.to_string(), reason };
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Word::identity());
        }
        let mut by_len: Vec<(usize, &str)> =
            names.iter().enumerate().map(|(i, n)| (i, n.as_str())).collect();
        by_len.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut letters = Vec::new();
        for token in trimmed.split_whitespace() {
            let mut rest = token;
            while !rest.is_empty() {
                let Some(&(gen, name)) = by_len.iter().find(|(_, n)| rest.starts_with(n)) else {
                    let bad: String = rest.chars().take_while(|c| *c != '^').collect();
                    return Err(Error::UnknownGenerator(bad));
                };
                rest = &rest[name.len()..];
                let mut exp = 1i64;
                if let Some(after) = rest.strip_prefix('^') {
                    let end = after
                        .char_indices()
                        .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
                        .map_or(after.len(), |(i, _)| i);
                    exp = after[..end]
                        .parse()
                        .map_err(|_| err(format!("bad exponent after {name}")))?;
                    rest = &after[end..];
                }
                for _ in 0..exp.unsigned_abs() {
                    letters.push(Letter::new(gen, exp < 0));
                }
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Text form with `^-1` for inverse letters; the identity prints as `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&names[l.gen]);
            if l.inverse {
                let _ = write!(s, "^-1");
            }
        }
        s
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(rhs.0.iter()).copied())
    }
}

impl Mul<Word> for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

/// Names `x1 .. xn`.
pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
