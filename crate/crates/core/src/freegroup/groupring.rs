use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::word::Word;
use crate::error::{Error, Result};

/// Element of the integral group ring `Z[F]` of a free group.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// `w * self`
    pub fn left_mul(&self, w: &Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(v, &c)| (w * v, c)))
    }

    /// `self * w`
    pub fn right_mul(&self, w: &Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(v, &c)| (v * w, c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a * b, c * d);
            }
        }
        out
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub<&GroupRingElem> for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        GroupRingElem { terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect() }
    }
}

/// Fox derivative `d w / d x_j` in the free group on `generator_count` letters.
///
/// Scans left to right: a letter `x_j` at position `k` contributes the
/// prefix `w[..k]`, a letter `x_j^-1` contributes `-w[..=k]`.
pub fn fox_derivative(w: &Word, j: usize, generator_count: usize) -> Result<GroupRingElem> {
    if j >= generator_count {
        return Err(Error::GeneratorOutOfRange { index: j, count: generator_count });
    }
    if let Some(l) = w.letters().iter().find(|l| l.gen >= generator_count) {
        return Err(Error::GeneratorOutOfRange { index: l.gen, count: generator_count });
    }
    let mut out = GroupRingElem::zero();
    let letters = w.letters();
    for (k, l) in letters.iter().enumerate() {
        if l.gen != j {
            continue;
        }
        if l.inverse {
            out.add_term(Word::from_letters(letters[..=k].iter().copied()), -1);
        } else {
            out.add_term(Word::from_letters(letters[..k].iter().copied()), 1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms() {
        let x1 = Word::generator(0);
        assert_eq!(fox_derivative(&x1, 0, 2).unwrap(), GroupRingElem::one());
        assert!(fox_derivative(&x1, 1, 2).unwrap().is_zero());
        assert_eq!(
            fox_derivative(&x1.inverse(), 0, 2).unwrap(),
            -&GroupRingElem::from_word(x1.inverse())
        );
    }

    #[test]
    fn commutator() {
        // d(x1 x2 x1^-1 x2^-1)/dx1 = 1 - x1 x2 x1^-1
        let w = Word::from_signed(&[1, 2, -1, -2]);
        let expected = GroupRingElem::from_terms([
            (Word::identity(), 1),
            (Word::from_signed(&[1, 2, -1]), -1),
        ]);
        assert_eq!(fox_derivative(&w, 0, 2).unwrap(), expected);
    }

    #[test]
    fn out_of_range() {
        let w = Word::from_signed(&[1, 2]);
        assert!(matches!(fox_derivative(&w, 2, 2), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(fox_derivative(&w, 0, 1), Err(Error::GeneratorOutOfRange { .. })));
    }
}
