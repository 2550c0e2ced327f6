use std::fmt;

use crate::error::{Error, Result};

/// Coefficient ring of a [`LaurentPoly`](super::LaurentPoly).
///
/// Coefficients are carried as `i128`. Over `Fp(p)` they live in `0..p`;
/// over `Int` integer overflow panics rather than wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Int,
    Fp(u64),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "Z"),
            Ring::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    /// `F_p`, rejecting composite moduli and primes above 2^31.
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p > (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::Fp(p))
    }

    #[inline]
    pub fn reduce(self, a: i128) -> i128 {
        match self {
            Ring::Int => a,
            Ring::Fp(p) => a.rem_euclid(p as i128),
        }
    }

    #[inline]
    pub fn add(self, a: i128, b: i128) -> i128 {
        match self {
            Ring::Int => a.checked_add(b).expect("integer coefficient overflow"),
            Ring::Fp(p) => {
                let s = a + b;
                if s >= p as i128 {
                    s - p as i128
                } else {
                    s
                }
            }
        }
    }

    #[inline]
    pub fn neg(self, a: i128) -> i128 {
        match self {
            Ring::Int => -a,
            Ring::Fp(p) => {
                if a == 0 {
                    0
                } else {
                    p as i128 - a
                }
            }
        }
    }

    #[inline]
    pub fn sub(self, a: i128, b: i128) -> i128 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: i128, b: i128) -> i128 {
        match self {
            Ring::Int => a.checked_mul(b).expect("integer coefficient overflow"),
            Ring::Fp(p) => (a * b) % p as i128,
        }
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inv(self, a: i128) -> Option<i128> {
        match self {
            Ring::Int => (a == 1 || a == -1).then_some(a),
            Ring::Fp(p) => {
                if a == 0 {
                    return None;
                }
                // extended Euclid
                let (mut r0, mut r1) = (p as i128, a);
                let (mut s0, mut s1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                Some(s0.rem_euclid(p as i128))
            }
        }
    }

    /// Exact quotient `a / b` when it exists in the ring.
    pub fn div_exact(self, a: i128, b: i128) -> Option<i128> {
        match self {
            Ring::Int => (b != 0 && a % b == 0).then(|| a / b),
            Ring::Fp(_) => self.inv(b).map(|bi| self.mul(a, bi)),
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Fp(_))
    }

    pub(crate) fn check_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self, other))
        }
    }
}

pub(crate) fn int_gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_p() {
        for p in [2u64, 3, 5, 7, 11, 17] {
            let r = Ring::Fp(p);
            for a in 1..p as i128 {
                assert_eq!(r.mul(a, r.inv(a).unwrap()), 1);
            }
            assert_eq!(r.inv(0), None);
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(Ring::prime_field(4).is_err());
        assert!(Ring::prime_field(1).is_err());
        assert_eq!(Ring::prime_field(17).unwrap(), Ring::Fp(17));
    }
}
