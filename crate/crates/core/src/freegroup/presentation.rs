use super::word::{default_names, Word};
use crate::algebra::int_gcd;
use crate::error::{Error, Result};

/// `< x_1, ..., x_u | r_1, ..., r_v >` with named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let count = names.len();
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= count) {
                return Err(Error::GeneratorOutOfRange { index: l.gen, count });
            }
        }
        Ok(GroupPresentation { names, relators })
    }

    /// Generators named `x1 .. xn`.
    pub fn with_default_names(generators: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new(default_names("x", generators), relators)
    }

    /// Parse relators given as text against `names`.
    pub fn parse(names: Vec<String>, relators: &[&str]) -> Result<Self> {
        let rels = relators.iter().map(|r| Word::parse(r, &names)).collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.names)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.display(&self.names)
    }

    /// Append a relator (for instance a consequence of the existing ones).
    pub fn with_relator(&self, r: Word) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(r);
        Self::new(self.names.clone(), relators)
    }

    /// Add a generator `name` together with the defining relator
    /// `name^-1 * definition`.
    pub fn with_defined_generator(&self, name: &str, definition: &Word) -> Result<Self> {
        let mut names = self.names.clone();
        let new = names.len();
        names.push(name.to_string());
        let mut relators = self.relators.clone();
        relators.push(&Word::generator(new).inverse() * definition);
        Self::new(names, relators)
    }

    /// Whether sending every generator to `t` defines a homomorphism onto
    /// `Z` (all relators have exponent sum zero).
    pub fn exponent_sum_is_hom(&self) -> bool {
        self.generator_count() > 0 && self.relators.iter().all(|r| r.exponent_sum() == 0)
    }

    /// Rank over Q of the relator exponent-sum matrix.
    pub fn abelian_relator_rank(&self) -> usize {
        let u = self.generator_count();
        let mut rows: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i128; u];
                for l in r.letters() {
                    row[l.gen] += l.sign() as i128;
                }
                row
            })
            .collect();
        // integer row echelon with gcd-free cross multiplication
        let mut rank = 0;
        for col in 0..u {
            let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            for i in rank + 1..rows.len() {
                if rows[i][col] != 0 {
                    let (a, b) = (rows[rank][col], rows[i][col]);
                    for j in 0..u {
                        rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
                    }
                    let g = rows[i].iter().fold(0i128, |g, &x| int_gcd(g, x));
                    if g > 1 {
                        rows[i].iter_mut().for_each(|x| *x /= g);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
