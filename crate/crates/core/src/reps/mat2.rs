use std::fmt;

use crate::freegroup::Word;

/// A matrix `[[a, b], [c, d]]` over `F_p` with entries in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    p: u32,
    e: [u32; 4],
}

impl Mat2 {
    pub fn identity(p: u32) -> Self {
        Mat2 { p, e: [1, 0, 0, 1] }
    }

    /// Entries are reduced mod `p`; `None` unless the determinant is 1.
    pub fn new(p: u32, entries: [i64; 4]) -> Option<Self> {
        let e = entries.map(|x| x.rem_euclid(p as i64) as u32);
        let m = Mat2 { p, e };
        (m.det() == 1).then_some(m)
    }

    /// Every element of `SL(2, F_p)`, in increasing order.
    pub fn all(p: u32) -> Vec<Mat2> {
        let mut out = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let m = Mat2 { p, e: [a, b, c, d] };
                        if m.det() == 1 {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    fn det(&self) -> u32 {
        let p = self.p as u64;
        let [a, b, c, d] = self.e.map(|x| x as u64);
        ((a * d + p * p - b * c % p) % p) as u32
    }

    pub fn trace(&self) -> u32 {
        (self.e[0] + self.e[3]) % self.p
    }

    pub fn is_identity(&self) -> bool {
        self.e == [1, 0, 0, 1]
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        debug_assert_eq!(self.p, o.p);
        let p = self.p as u64;
        let [a, b, c, d] = self.e.map(|x| x as u64);
        let [w, x, y, z] = o.e.map(|x| x as u64);
        Mat2 {
            p: self.p,
            e: [(a * w + b * y) % p, (a * x + b * z) % p, (c * w + d * y) % p, (c * x + d * z) % p]
                .map(|v| v as u32),
        }
    }

    /// Inverse via the adjugate (determinant 1).
    pub fn inv(&self) -> Mat2 {
        let p = self.p;
        let neg = |x: u32| (p - x) % p;
        let [a, b, c, d] = self.e;
        Mat2 { p, e: [d, neg(b), neg(c), a] }
    }

    pub fn commutes_with(&self, o: &Mat2) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// `g self g^-1`
    pub fn conjugate_by(&self, g: &Mat2) -> Mat2 {
        g.mul(self).mul(&g.inv())
    }

    /// Evaluate a word given the images of its generators.
    pub fn eval(w: &Word, images: &[Mat2], p: u32) -> Mat2 {
        let mut acc = Mat2::identity(p);
        for l in w.letters() {
            let m = images[l.gen];
            acc = acc.mul(&if l.inverse { m.inv() } else { m });
        }
        acc
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Conjugacy classes of `SL(2, F_p)`, each sorted, listed by smallest member.
pub fn conjugacy_classes(p: u32) -> Vec<Vec<Mat2>> {
    let all = Mat2::all(p);
    let mut seen = std::collections::HashSet::new();
    let mut classes = Vec::new();
    for m in &all {
        if seen.contains(m) {
            continue;
        }
        let mut class: Vec<Mat2> = all.iter().map(|g| m.conjugate_by(g)).collect();
        class.sort();
        class.dedup();
        seen.extend(class.iter().copied());
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for p in [2u32, 3, 5, 7] {
            assert_eq!(Mat2::all(p).len() as u32, p * (p * p - 1));
        }
    }

    #[test]
    fn inverse_and_identity() {
        for m in Mat2::all(5) {
            assert!(m.mul(&m.inv()).is_identity());
        }
        assert!(Mat2::new(5, [2, 0, 0, 3]).is_some());
        assert!(Mat2::new(5, [2, 0, 0, 2]).is_none());
        assert!(Mat2::identity(2).is_identity());
    }

    #[test]
    fn class_counts() {
        // SL(2,3) has 7 classes, SL(2,5) has 9
        assert_eq!(conjugacy_classes(3).len(), 7);
        assert_eq!(conjugacy_classes(5).len(), 9);
        let total: usize = conjugacy_classes(5).iter().map(Vec::len).sum();
        assert_eq!(total, 120);
    }
}
