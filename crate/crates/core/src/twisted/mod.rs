//! Alexander matrices from Fox derivatives and twisted Alexander
//! polynomials for `SL(2, F_p)` representations.
//!
//! `Phi` sends a group-ring element `sum c_w w` to `sum c_w t^{e(w)} rho(w)`,
//! where `e` is the exponent sum (every generator maps to `t`).

use std::fmt;

use crate::algebra::{gcd, LaurentPoly, PolyMatrix, Ring};
use crate::error::{Error, Result};
use crate::freegroup::{fox_derivative, GroupPresentation, GroupRingElem, Word};
use crate::knots::WirtingerData;
use crate::reps::Rep2;

/// `Phi(elem)` as a 2x2 matrix over `F_p[t^{+-1}]`.
pub fn phi(elem: &GroupRingElem, r: &Rep2) -> PolyMatrix {
    let ring = Ring::Fp(r.prime() as u64);
    block(elem, ring, 2, &|w| rep_entries(r, w))
}

fn rep_entries(r: &Rep2, w: &Word) -> Vec<i128> {
    r.eval(w).entries().iter().map(|&x| x as i128).collect()
}

fn block(elem: &GroupRingElem, ring: Ring, n: usize, image: &dyn Fn(&Word) -> Vec<i128>) -> PolyMatrix {
    let mut terms: Vec<Vec<(i64, i128)>> = vec![Vec::new(); n * n];
    for (w, c) in elem.terms() {
        let k = w.exponent_sum();
        for (slot, m) in terms.iter_mut().zip(image(w)) {
            if m != 0 {
                slot.push((k, c as i128 * m));
            }
        }
    }
    let mut it = terms.into_iter();
    let rows = (0..n).map(|_| (0..n).map(|_| LaurentPoly::from_terms(ring, it.next().unwrap())).collect()).collect();
    PolyMatrix::from_rows(ring, rows).expect("block entries share a ring")
}

fn fox_matrix(g: &GroupPresentation, ring: Ring, n: usize, image: &dyn Fn(&Word) -> Vec<i128>) -> PolyMatrix {
    let u = g.generator_count();
    let v = g.relators().len();
    let mut m = PolyMatrix::zeros(ring, n * v, n * u);
    for (i, r) in g.relators().iter().enumerate() {
        for j in 0..u {
            let d = fox_derivative(r, j, u).expect("relator letters are in range");
            if d.is_zero() {
                continue;
            }
            let b = block(&d, ring, n, image);
            for a in 0..n {
                for c in 0..n {
                    m[(i * n + a, j * n + c)] = b[(a, c)].clone();
                }
            }
        }
    }
    m
}

/// The `2v x 2u` matrix with `(i, j)` block `Phi(d r_i / d x_j)`.
pub fn alexander_matrix(g: &GroupPresentation, r: &Rep2) -> Result<PolyMatrix> {
    if r.images().len() != g.generator_count() {
        return Err(Error::RepArity { got: r.images().len(), expected: g.generator_count() });
    }
    Ok(fox_matrix(g, Ring::Fp(r.prime() as u64), 2, &|w| rep_entries(r, w)))
}

/// Numerator and denominator of a twisted Alexander polynomial over `F_p`,
/// both in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TAPair {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub p: u64,
    pub knot: String,
    pub rep: String,
}

impl TAPair {
    /// The value compared between pairs; labels are ignored.
    pub fn key(&self) -> (LaurentPoly, LaurentPoly) {
        (self.numerator.clone(), self.denominator.clone())
    }

    /// `N = <poly> ; D = <poly> ; p = 5 ; rep = <id>`
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::FileFormat { line: 0, reason: format!("pair {text:?}: {reason}") };
        let mut fields = [None, None, None, None];
        for part in text.split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected `key = value` fields"))?;
            let slot = ["N", "D", "p", "rep"].iter().position(|n| *n == k.trim()).ok_or_else(|| bad("unknown field"))?;
            fields[slot] = Some(v.trim());
        }
        let [Some(n), Some(d), Some(p), rep] = fields else {
            return Err(bad("N, D and p are required"));
        };
        let p: u64 = p.parse().map_err(|_| bad("bad prime"))?;
        let ring = Ring::prime_field(p)?;
        Ok(TAPair {
            numerator: LaurentPoly::parse(n, ring)?.canonical(),
            denominator: LaurentPoly::parse(d, ring)?.canonical(),
            p,
            knot: String::new(),
            rep: rep.unwrap_or("").to_string(),
        })
    }
}

impl fmt::Display for TAPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N = {} ; D = {} ; p = {} ; rep = {}", self.numerator, self.denominator, self.p, self.rep)
    }
}

/// Twisted pair of a deficiency-one presentation, removing the column block
/// of the first generator.
pub fn twisted_pair(w: &WirtingerData, r: &Rep2, rep_id: &str) -> Result<TAPair> {
    let g = &w.presentation;
    if g.relators().len() + 1 != g.generator_count() {
        return Err(Error::Precondition(format!("{} is not a deficiency-one presentation", w.name)));
    }
    let m = alexander_matrix(g, r)?;
    let numerator = m.without_columns(0..2).det()?.canonical();
    let denominator = denominator(r, 0)?;
    Ok(TAPair { numerator, denominator, p: r.prime() as u64, knot: w.name.clone(), rep: rep_id.to_string() })
}

fn denominator(r: &Rep2, j: usize) -> Result<LaurentPoly> {
    let x = Word::generator(j);
    let e = GroupRingElem::from_terms([(x, 1), (Word::identity(), -1)]);
    let d = phi(&e, r).det()?;
    if d.is_zero() {
        return Err(Error::DegenerateColumn { column: j + 1 });
    }
    Ok(d.canonical())
}

/// Twisted pair of an arbitrary presentation: the numerator is the gcd of
/// all maximal minors after removing the column block of generator `j`
/// (0-based). With fewer rows than columns the numerator is zero.
pub fn twisted_general(g: &GroupPresentation, r: &Rep2, j: usize) -> Result<TAPair> {
    let u = g.generator_count();
    if j >= u {
        return Err(Error::GeneratorOutOfRange { index: j, count: u });
    }
    let denominator = denominator(r, j)?;
    let m = alexander_matrix(g, r)?.without_columns(2 * j..2 * j + 2);
    let numerator = gcd_of_minors(&m)?;
    Ok(TAPair { numerator, denominator, p: r.prime() as u64, knot: String::new(), rep: String::new() })
}

fn gcd_of_minors(m: &PolyMatrix) -> Result<LaurentPoly> {
    let k = m.cols();
    let cols: Vec<usize> = (0..k).collect();
    if m.rows() < k {
        return Ok(LaurentPoly::zero(m.ring()));
    }
    let mut minors = Vec::new();
    let mut rows: Vec<usize> = (0..k).collect();
    loop {
        minors.push(m.select(&rows, &cols).det()?);
        // next k-subset of 0..m.rows() in lexicographic order
        let n = m.rows();
        let Some(i) = (0..k).rev().find(|&i| rows[i] < n - k + i) else {
            break;
        };
        rows[i] += 1;
        for t in i + 1..k {
            rows[t] = rows[t - 1] + 1;
        }
    }
    match gcd(&minors) {
        Ok(g) => Ok(g),
        Err(Error::EmptyGcd) => Ok(LaurentPoly::zero(m.ring())),
        Err(e) => Err(e),
    }
}

/// The integer Jacobian of the presentation under `x_i -> t`.
pub fn classical_matrix(g: &GroupPresentation) -> PolyMatrix {
    fox_matrix(g, Ring::Int, 1, &|_| vec![1])
}

/// The Alexander polynomial `Delta_K(t)` over the integers, in canonical
/// form: the determinant of the Jacobian with the first column removed.
/// (The twisted invariant at the trivial 1-dimensional representation is
/// this divided by `t - 1`.)
pub fn classical_alexander(w: &WirtingerData) -> Result<LaurentPoly> {
    let g = &w.presentation;
    if g.relators().len() + 1 != g.generator_count() {
        return Err(Error::Precondition(format!("{} is not a deficiency-one presentation", w.name)));
    }
    Ok(classical_matrix(g).without_columns(0..1).det()?.canonical())
}

/// Classical polynomial of an arbitrary presentation: gcd of the maximal
/// minors with column `j` removed.
pub fn classical_general(g: &GroupPresentation, j: usize) -> Result<LaurentPoly> {
    gcd_of_minors(&classical_matrix(g).without_columns(j..j + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::builtin;
    use crate::reps::{enumerate_reps, EnumOptions};

    fn fp5(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, Ring::Fp(5)).unwrap()
    }

    #[test]
    fn phi_of_one_and_generator() {
        let w = builtin("3_1").unwrap();
        let r = &enumerate_reps(&w, 5, EnumOptions::default()).unwrap()[0];
        assert_eq!(phi(&GroupRingElem::one(), r), PolyMatrix::identity(Ring::Fp(5), 2));
        let x1 = phi(&GroupRingElem::from_word(Word::generator(0)), r);
        let m = r.images()[0].entries();
        for (i, e) in m.iter().enumerate() {
            assert_eq!(x1[(i / 2, i % 2)], LaurentPoly::monomial(Ring::Fp(5), *e as i128, 1));
        }
    }

    #[test]
    fn classical_trefoil_and_unknot() {
        let z = |s| LaurentPoly::parse(s, Ring::Int).unwrap();
        assert_eq!(classical_alexander(&builtin("3_1").unwrap()).unwrap(), z("t^2 - t + 1"));
        assert_eq!(classical_alexander(&builtin("0_1").unwrap()).unwrap(), z("1"));
    }

    #[test]
    fn trefoil_pair_over_f5() {
        let w = builtin("3_1").unwrap();
        let pairs: Vec<_> = enumerate_reps(&w, 5, EnumOptions::default())
            .unwrap()
            .iter()
            .map(|r| twisted_pair(&w, r, "").unwrap().key())
            .collect();
        assert!(pairs.contains(&(fp5("t^4 + 2*t^3 + 2*t^2 + 2*t + 1"), fp5("t^2 + 2*t + 1"))));
    }

    #[test]
    fn pair_text_round_trip() {
        let pair = TAPair {
            numerator: fp5("t^4 + 2*t^3 + 2*t^2 + 2*t + 1"),
            denominator: fp5("t^2 + 2*t + 1"),
            p: 5,
            knot: String::new(),
            rep: "r0".into(),
        };
        assert_eq!(pair.to_text(), "N = t^4 + 2*t^3 + 2*t^2 + 2*t + 1 ; D = t^2 + 2*t + 1 ; p = 5 ; rep = r0");
        assert_eq!(TAPair::parse(&pair.to_text()).unwrap(), pair);
        assert!(TAPair::parse("N = 1 ; p = 5").is_err());
        assert!(TAPair::parse("N = 1 ; D = 1 ; p = 6").is_err());
    }
}
