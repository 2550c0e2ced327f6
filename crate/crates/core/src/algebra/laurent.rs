use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{int_gcd, Ring};
use crate::error::{Error, Result};

/// A Laurent polynomial in one variable `t` over `Z` or `F_p`.
///
/// Stored densely from the lowest exponent: `coeffs[i]` is the coefficient
/// of `t^(low + i)`. The first and last stored coefficients are nonzero; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: Ring,
    low: i64,
    coeffs: Vec<i128>,
}

impl LaurentPoly {
    pub fn new(ring: Ring, low: i64, coeffs: Vec<i128>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| ring.reduce(c)).collect();
        Self::normalized(ring, low, coeffs)
    }

    fn normalized(ring: Ring, mut low: i64, mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == coeffs.len() {
            return Self::zero(ring);
        }
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i64;
        }
        LaurentPoly { ring, low, coeffs }
    }

    pub fn zero(ring: Ring) -> Self {
        LaurentPoly { ring, low: 0, coeffs: Vec::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::monomial(ring, 1, 0)
    }

    pub fn constant(ring: Ring, c: i128) -> Self {
        Self::monomial(ring, c, 0)
    }

    /// `c * t^k`
    pub fn monomial(ring: Ring, c: i128, k: i64) -> Self {
        Self::new(ring, k, vec![c])
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (i64, i128)>) -> Self {
        let terms: Vec<(i64, i128)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero(ring);
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (high - low + 1) as usize];
        for (k, c) in terms {
            let slot = &mut coeffs[(k - low) as usize];
            *slot = ring.add(*slot, ring.reduce(c));
        }
        Self::normalized(ring, low, coeffs)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Width of the support, `high - low`; `None` for zero.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeff(&self, k: i64) -> i128 {
        let i = k - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn lowest_coeff(&self) -> i128 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i64, c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let r = self.ring;
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high_degree().max(other.high_degree());
        let mut coeffs = vec![0i128; (high - low + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] = c;
        }
        let off = (other.low - low) as usize;
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[off + i];
            *slot = if negate { r.sub(*slot, c) } else { r.add(*slot, c) };
        }
        Self::normalized(r, low, coeffs)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let r = self.ring;
        if self.is_zero() || other.is_zero() {
            return Self::zero(r);
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        match r {
            Ring::Fp(p) => {
                let p = p as i128;
                // p < 2^31, so unreduced sums of products stay far below i128::MAX
                for (i, &a) in self.coeffs.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (j, &b) in other.coeffs.iter().enumerate() {
                        coeffs[i + j] += a * b;
                    }
                }
                coeffs.iter_mut().for_each(|c| *c %= p);
            }
            Ring::Int => {
                for (i, &a) in self.coeffs.iter().enumerate() {
                    for (j, &b) in other.coeffs.iter().enumerate() {
                        coeffs[i + j] = r.add(coeffs[i + j], r.mul(a, b));
                    }
                }
            }
        }
        Self::normalized(r, self.low + other.low, coeffs)
    }

    pub fn scale(&self, c: i128) -> Self {
        let c = self.ring.reduce(c);
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect();
        Self::normalized(self.ring, self.low, coeffs)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { ring: self.ring, low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Reduce integer coefficients modulo `p`.
    pub fn to_fp(&self, p: u64) -> Self {
        Self::new(Ring::Fp(p), self.low, self.coeffs.clone())
    }

    /// Gcd of the coefficients (integers), or 1 over a field; 0 for zero.
    pub fn content(&self) -> i128 {
        match self.ring {
            Ring::Fp(_) => i128::from(!self.is_zero()),
            Ring::Int => self.coeffs.iter().fold(0, |g, &c| int_gcd(g, c)),
        }
    }

    /// Representative of the unit orbit `{c t^k f}`: lowest exponent 0 and
    /// lowest coefficient 1 (over `F_p`) or positive (over `Z`).
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lowest_coeff();
        let unit = match self.ring {
            Ring::Fp(_) => self.ring.inv(lc).expect("nonzero element of a field"),
            Ring::Int => lc.signum(),
        };
        self.scale(unit).shift(-self.low)
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// The quotient `self / divisor` if it is a Laurent polynomial over the
    /// same ring.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        self.ring.check_same(divisor.ring)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        // t is a unit, so divide the t-free parts as ordinary polynomials
        Ok(poly_exact_div(self.ring, &self.coeffs, &divisor.coeffs)
            .map(|q| Self::normalized(self.ring, self.low - divisor.low, q)))
    }

    /// Whether `self = q * divisor` for some Laurent polynomial `q`.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.exact_div(divisor)?.is_some())
    }

    /// Parse the text form `2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2`, reducing into `ring`.
    pub fn parse(text: &str, ring: Ring) -> Result<Self> {
        parse_poly(text).map(|terms| Self::from_terms(ring, terms)).map_err(|reason| {
            Error::PolyParse { text: text.to_string(), reason }
        })
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let r = self.ring;
        LaurentPoly { ring: r, low: self.low, coeffs: self.coeffs.iter().map(|&c| r.neg(c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// Operator forms panic on mixed rings; use the `checked_*` methods when the
// operands come from different sources.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("mixed coefficient rings")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ring, then degree span, then coefficients from the top; used
/// only to make emitted tables deterministic.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then(self.low.cmp(&other.low))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (neg, mag) = if c < 0 { (true, -c) } else { (false, c) };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.ring)
    }
}

fn parse_poly(text: &str) -> std::result::Result<Vec<(i64, i128)>, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty input".into());
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i128;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(format!("expected '+' or '-' at offset {i}"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start {
            s[start..i].parse::<i128>().map_err(|e| e.to_string())?
        } else {
            1
        };
        let has_coeff = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !has_coeff {
                return Err(format!("stray '*' at offset {i}"));
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b't' {
                return Err(format!("expected 't' after '*' at offset {i}"));
            }
        }
        let mut exp = 0i64;
        if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits {
                    return Err(format!("missing exponent at offset {es}"));
                }
                exp = s[es..i].parse::<i64>().map_err(|e| e.to_string())?;
            }
        } else if !has_coeff {
            return Err(format!("expected a term at offset {start}"));
        }
        terms.push((exp, sign * coeff));
    }
    Ok(terms)
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Exact polynomial quotient `a / b` (dense, constant term first), or `None`
/// when `b` does not divide `a` over `ring`.
fn poly_exact_div(ring: Ring, a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return None;
    }
    let lb = b[db];
    let mut q = vec![0i128; rem.len() - db];
    for i in (0..q.len()).rev() {
        let top = rem[i + db];
        if top == 0 {
            continue;
        }
        let c = ring.div_exact(top, lb)?;
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] = ring.sub(rem[i + j], ring.mul(c, bj));
        }
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

/// Remainder of `a` modulo `b` over a field.
fn poly_rem_field(ring: Ring, a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = ring.inv(b[db]).expect("field");
    while rem.len() > db {
        let top = *rem.last().unwrap();
        let c = ring.mul(top, inv);
        let shift = rem.len() - 1 - db;
        for (j, &bj) in b.iter().enumerate() {
            rem[shift + j] = ring.sub(rem[shift + j], ring.mul(c, bj));
        }
        rem = trim(rem);
    }
    rem
}

/// Pseudo-remainder `prem(a, b)` over `Z`.
fn poly_prem(a: &[i128], b: &[i128]) -> Vec<i128> {
    let r = Ring::Int;
    let db = b.len() - 1;
    let lb = b[db];
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return rem;
    }
    let mut steps = rem.len() - db;
    while rem.len() > db {
        let top = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        rem.iter_mut().for_each(|c| *c = r.mul(*c, lb));
        for (j, &bj) in b.iter().enumerate() {
            rem[shift + j] = r.sub(rem[shift + j], r.mul(top, bj));
        }
        rem = trim(rem);
        steps -= 1;
    }
    for _ in 0..steps {
        rem.iter_mut().for_each(|c| *c = r.mul(*c, lb));
    }
    rem
}

fn int_content(v: &[i128]) -> i128 {
    v.iter().fold(0, |g, &c| int_gcd(g, c))
}

fn primitive(v: &[i128]) -> Vec<i128> {
    let c = int_content(v);
    if c <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / c).collect()
}

/// Gcd of two nonzero polynomials (dense, constant term first).
fn poly_gcd(ring: Ring, a: &[i128], b: &[i128]) -> Vec<i128> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    match ring {
        Ring::Fp(_) => {
            while !b.is_empty() {
                let r = poly_rem_field(ring, &a, &b);
                a = b;
                b = r;
            }
            a
        }
        Ring::Int => {
            let content = int_gcd(int_content(&a), int_content(&b));
            let (mut a, mut b) = (primitive(&a), primitive(&b));
            // subresultant PRS
            let mut g: i128 = 1;
            let mut h: i128 = 1;
            while !b.is_empty() && b.len() > 1 {
                let delta = (a.len() - b.len()) as u32;
                let r = poly_prem(&a, &b);
                if r.is_empty() {
                    break;
                }
                let denom = g * h.pow(delta);
                a = b;
                b = r.iter().map(|&c| c / denom).collect();
                g = *a.last().unwrap();
                h = if delta == 0 {
                    h
                } else {
                    // h = g^delta / h^(delta - 1)
                    g.pow(delta) / h.pow(delta - 1)
                };
            }
            let last = if b.len() == 1 { vec![1] } else { primitive(&b) };
            last.into_iter().map(|c| c * content).collect()
        }
    }
}

/// Gcd of a list of Laurent polynomials, in canonical form. Zero entries
/// are ignored.
pub fn gcd(polys: &[LaurentPoly]) -> Result<LaurentPoly> {
    let mut it = polys.iter().filter(|f| !f.is_zero());
    let first = it.next().ok_or(Error::EmptyGcd)?;
    let ring = first.ring;
    let mut acc = first.canonical().coeffs;
    for f in it {
        ring.check_same(f.ring)?;
        acc = poly_gcd(ring, &acc, &f.coeffs);
        if acc.len() == 1 && ring.is_field() {
            break;
        }
    }
    Ok(LaurentPoly::normalized(ring, 0, acc).canonical())
}
