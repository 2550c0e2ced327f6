//! Representations of presented groups into `SL(2, F_p)`.

mod mat2;

use std::fmt::Write as _;

pub use mat2::{conjugacy_classes, Mat2};

use crate::algebra::is_prime;
use crate::error::{Error, Result};
use crate::freegroup::{GroupPresentation, Word};
use crate::knots::WirtingerData;

/// One image in `SL(2, F_p)` per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rep2 {
    p: u32,
    images: Vec<Mat2>,
}

impl Rep2 {
    pub fn new(p: u32, images: Vec<Mat2>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if let Some(m) = images.iter().find(|m| m.prime() != p) {
            return Err(Error::Precondition(format!("matrix {m} is over F_{}, expected F_{p}", m.prime())));
        }
        Ok(Rep2 { p, images })
    }

    /// Every generator sent to the identity.
    pub fn trivial(p: u32, generators: usize) -> Self {
        Rep2 { p, images: vec![Mat2::identity(p); generators] }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn images(&self) -> &[Mat2] {
        &self.images
    }

    pub fn eval(&self, w: &Word) -> Mat2 {
        Mat2::eval(w, &self.images, self.p)
    }

    /// Whether every relator of `g` maps to the identity.
    pub fn satisfies(&self, g: &GroupPresentation) -> bool {
        self.images.len() == g.generator_count() && g.relators().iter().all(|r| self.eval(r).is_identity())
    }

    pub fn is_nonabelian(&self) -> bool {
        let im = &self.images;
        (0..im.len()).any(|i| (i + 1..im.len()).any(|j| !im[i].commutes_with(&im[j])))
    }

    /// `g rho g^-1`
    pub fn conjugate_by(&self, g: &Mat2) -> Self {
        Rep2 { p: self.p, images: self.images.iter().map(|m| m.conjugate_by(g)).collect() }
    }

    /// Precompose with a map given by generator images: `x_i -> rho(w_i)`.
    pub fn pull_back(&self, images: &[Word]) -> Self {
        Rep2 { p: self.p, images: images.iter().map(|w| self.eval(w)).collect() }
    }

    /// `p=5; x1 = [[a,b],[c,d]]; ...`
    pub fn to_text(&self, names: &[String]) -> String {
        let mut s = format!("p={}", self.p);
        for (n, m) in names.iter().zip(&self.images) {
            let _ = write!(s, "; {n} = {m}");
        }
        s
    }

    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let bad = |reason: String| Error::FileFormat { line: 0, reason: format!("representation: {reason}") };
        let mut parts = text.split(';').map(str::trim).filter(|s| !s.is_empty());
        let head = parts.next().ok_or_else(|| bad("empty".into()))?;
        let p: u32 = head
            .strip_prefix("p")
            .and_then(|s| s.trim_start().strip_prefix('='))
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad(format!("expected `p=<prime>`, got {head:?}")))?;
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let mut images: Vec<Option<Mat2>> = vec![None; names.len()];
        for part in parts {
            let (name, mat) = part.split_once('=').ok_or_else(|| bad(format!("expected `name = matrix` in {part:?}")))?;
            let name = name.trim();
            let idx = names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
            let nums: Vec<i64> = mat
                .split(|c: char| !(c.is_ascii_digit() || c == '-'))
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| bad(format!("bad entry {s:?}"))))
                .collect::<Result<_>>()?;
            let entries: [i64; 4] = nums.try_into().map_err(|_| bad(format!("{name} needs four entries")))?;
            let m = Mat2::new(p, entries).ok_or_else(|| bad(format!("{name} does not have determinant 1")))?;
            images[idx] = Some(m);
        }
        let got = images.iter().filter(|m| m.is_some()).count();
        let images = images.into_iter().collect::<Option<Vec<_>>>().ok_or(Error::RepArity { got, expected: names.len() })?;
        Rep2::new(p, images)
    }
}

/// Whether `r` is a representation of the knot group.
pub fn rep_check(r: &Rep2, w: &WirtingerData) -> bool {
    r.satisfies(&w.presentation)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub nonabelian_only: bool,
    /// Fix the image of the first generator to the smallest member of its
    /// conjugacy class. Every representation is conjugate to one emitted,
    /// though conjugates under the centralizer of that image may repeat.
    pub up_to_conjugacy: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { nonabelian_only: true, up_to_conjugacy: true }
    }
}

/// All representations of a knot group into `SL(2, F_p)` satisfying the
/// options, sorted by their matrix entries.
pub fn enumerate_reps(w: &WirtingerData, p: u32, opts: EnumOptions) -> Result<Vec<Rep2>> {
    enumerate_reps_of(&w.presentation, p, opts)
}

/// As [`enumerate_reps`] for an arbitrary presentation. Generators forced
/// to be conjugate by relators of the shape `a b a^-1 c^-1` are searched
/// only within one conjugacy class.
pub fn enumerate_reps_of(g: &GroupPresentation, p: u32, opts: EnumOptions) -> Result<Vec<Rep2>> {
    if !is_prime(p as u64) || p > 1 << 31 {
        return Err(Error::NotPrime(p as u64));
    }
    if p > 97 {
        return Err(Error::Precondition(format!("p = {p} is too large for exhaustive search")));
    }
    let u = g.generator_count();
    if u == 0 {
        return Ok(if opts.nonabelian_only { vec![] } else { vec![Rep2::trivial(p, 0)] });
    }
    let classes = conjugacy_classes(p);
    let all = Mat2::all(p);
    let linked = conjugacy_links(g);
    let search = Search { g, p };
    let mut out = Vec::new();
    for class in &classes {
        if opts.nonabelian_only && class.len() == 1 && linked.iter().all(|&c| c == linked[0]) {
            // a central image for one generator forces all of them to agree
            continue;
        }
        let firsts: &[Mat2] = if opts.up_to_conjugacy { &class[..1] } else { class };
        for &first in firsts {
            let mut assign = vec![None; u];
            assign[0] = Some(first);
            let domains: Vec<&[Mat2]> =
                (0..u).map(|i| if linked[i] == linked[0] { class.as_slice() } else { all.as_slice() }).collect();
            search.run(assign, &domains, &mut out);
        }
    }
    if opts.nonabelian_only {
        out.retain(Rep2::is_nonabelian);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

// Component label per generator under "forced conjugate" links.
fn conjugacy_links(g: &GroupPresentation) -> Vec<usize> {
    let u = g.generator_count();
    let mut parent: Vec<usize> = (0..u).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for r in g.relators() {
        let l = r.letters();
        if l.len() != 4 {
            continue;
        }
        for s in 0..4 {
            let c: Vec<_> = (0..4).map(|i| l[(s + i) % 4]).collect();
            // a b a^-1 c^-1 with b, c positive: b and c are conjugate
            if c[0].gen == c[2].gen && c[0].inverse != c[2].inverse && c[1].inverse != c[3].inverse {
                let (a, b) = (find(&mut parent, c[1].gen), find(&mut parent, c[3].gen));
                parent[a] = b;
                break;
            }
        }
    }
    (0..u).map(|i| find(&mut parent, i)).collect()
}

struct Search<'a> {
    g: &'a GroupPresentation,
    p: u32,
}

impl Search<'_> {
    fn run(&self, mut assign: Vec<Option<Mat2>>, domains: &[&[Mat2]], out: &mut Vec<Rep2>) {
        if !self.propagate(&mut assign, domains) {
            return;
        }
        let Some(next) = assign.iter().position(Option::is_none) else {
            out.push(Rep2 { p: self.p, images: assign.into_iter().map(Option::unwrap).collect() });
            return;
        };
        for &m in domains[next] {
            let mut a = assign.clone();
            a[next] = Some(m);
            self.run(a, domains, out);
        }
    }

    // Check fully assigned relators and solve relators with a single
    // unknown letter. Returns false on a contradiction.
    fn propagate(&self, assign: &mut [Option<Mat2>], domains: &[&[Mat2]]) -> bool {
        let p = self.p;
        loop {
            let mut progress = false;
            for r in self.g.relators() {
                let letters = r.letters();
                let unknown: Vec<usize> = (0..letters.len()).filter(|&i| assign[letters[i].gen].is_none()).collect();
                match unknown.len() {
                    0 => {
                        let images: Vec<Mat2> = assign.iter().map(|m| m.unwrap_or(Mat2::identity(p))).collect();
                        if !Mat2::eval(r, &images, p).is_identity() {
                            return false;
                        }
                    }
                    1 => {
                        let pos = unknown[0];
                        let letter = letters[pos];
                        let images: Vec<Mat2> = assign.iter().map(|m| m.unwrap_or(Mat2::identity(p))).collect();
                        let before = Mat2::eval(&Word::from_letters(letters[..pos].to_vec()), &images, p);
                        let after = Mat2::eval(&Word::from_letters(letters[pos + 1..].to_vec()), &images, p);
                        // before * x^s * after = 1
                        let xs = before.inv().mul(&after.inv());
                        let x = if letter.inverse { xs.inv() } else { xs };
                        if domains[letter.gen].binary_search(&x).is_err() {
                            return false;
                        }
                        assign[letter.gen] = Some(x);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                return true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::builtin;

    #[test]
    fn trivial_rep_is_found_when_abelian_allowed() {
        let w = builtin("3_1").unwrap();
        let reps = enumerate_reps(&w, 5, EnumOptions { nonabelian_only: false, up_to_conjugacy: true }).unwrap();
        assert!(reps.contains(&Rep2::trivial(5, 3)));
        assert!(reps.iter().all(|r| rep_check(r, &w)));
        assert!(!Rep2::trivial(5, 3).is_nonabelian());
    }

    #[test]
    fn nonabelian_trefoil_reps_exist() {
        let w = builtin("3_1").unwrap();
        let reps = enumerate_reps(&w, 5, EnumOptions::default()).unwrap();
        assert!(!reps.is_empty());
        for r in &reps {
            assert!(rep_check(r, &w) && r.is_nonabelian());
            let t = r.images()[0].trace();
            assert!(r.images().iter().all(|m| m.trace() == t));
        }
    }

    #[test]
    fn text_round_trip() {
        let w = builtin("3_1").unwrap();
        let names = w.presentation.names();
        for r in enumerate_reps(&w, 3, EnumOptions::default()).unwrap() {
            let text = r.to_text(names);
            assert_eq!(Rep2::parse(&text, names).unwrap(), r);
        }
        assert!(Rep2::parse("p=4; x1 = [[1,0],[0,1]]", names).is_err());
        assert!(matches!(Rep2::parse("p=5; x1 = [[1,0],[0,1]]", names), Err(Error::RepArity { got: 1, expected: 3 })));
        assert!(Rep2::parse("p=5; x1 = [[2,0],[0,2]]; x2 = [[1,0],[0,1]]; x3 = [[1,0],[0,1]]", names).is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        let w = builtin("3_1").unwrap();
        assert_eq!(enumerate_reps(&w, 4, EnumOptions::default()), Err(Error::NotPrime(4)));
    }
}
