use std::fmt::Write as _;

use super::solver::{Triviality, WordSolver};
use crate::error::{Error, Result};
use crate::freegroup::{GroupHom, Word};
use crate::knots::WirtingerData;

/// Contents of a map file:
///
/// ```text
/// source: 8_5
/// target: 3_1
/// y1 -> x3
/// y2 -> x2
/// ...
/// witness: x2 <- y2
/// ```
///
/// `witness` lines give a source word whose image equals a target generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFile {
    pub source: String,
    pub target: String,
    pub images: Vec<(String, String)>,
    pub witnesses: Vec<(String, String)>,
}

impl HomFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut source = None;
        let mut target = None;
        let mut images = Vec::new();
        let mut witnesses = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::FileFormat { line: n + 1, reason: reason.to_string() };
            if let Some((k, v)) = line.split_once("->") {
                images.push((k.trim().to_string(), v.trim().to_string()));
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| bad("expected `gen -> word` or `key: value`"))?;
            let value = value.trim().to_string();
            match key.trim() {
                "source" if source.is_none() => source = Some(value),
                "target" if target.is_none() => target = Some(value),
                "witness" => {
                    let (g, w) = value.split_once("<-").ok_or_else(|| bad("expected `witness: gen <- word`"))?;
                    witnesses.push((g.trim().to_string(), w.trim().to_string()));
                }
                "source" | "target" => return Err(bad("duplicate key")),
                other => return Err(bad(&format!("unknown key `{other}`"))),
            }
        }
        let missing = |k: &str| Error::FileFormat { line: 0, reason: format!("missing `{k}:` line") };
        Ok(HomFile {
            source: source.ok_or_else(|| missing("source"))?,
            target: target.ok_or_else(|| missing("target"))?,
            images,
            witnesses,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("source: {}\ntarget: {}\n", self.source, self.target);
        for (g, w) in &self.images {
            let _ = writeln!(s, "{g} -> {w}");
        }
        for (g, w) in &self.witnesses {
            let _ = writeln!(s, "witness: {g} <- {w}");
        }
        s
    }

    /// Build the map between the two knot groups. Every source generator
    /// needs exactly one image.
    pub fn resolve(&self, source: &WirtingerData, target: &WirtingerData) -> Result<(GroupHom, Vec<(usize, Word)>)> {
        let (sg, tg) = (&source.presentation, &target.presentation);
        let mut images: Vec<Option<Word>> = vec![None; sg.generator_count()];
        for (g, w) in &self.images {
            let i = sg.names().iter().position(|n| n == g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
            if images[i].is_some() {
                return Err(Error::Precondition(format!("generator {g} is mapped twice")));
            }
            images[i] = Some(tg.word(w)?);
        }
        let got = images.iter().flatten().count();
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::HomArity { got, expected: sg.generator_count() })?;
        let witnesses = self
            .witnesses
            .iter()
            .map(|(g, w)| {
                let i = tg.names().iter().position(|n| n == g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
                Ok((i, sg.word(w)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((GroupHom::new(sg.clone(), tg.clone(), images)?, witnesses))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub relator: Word,
    pub image: Word,
    pub status: Triviality,
    /// Normal form of the image when the target system is complete.
    pub normal_form: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWitness {
    pub generator: usize,
    /// A source word mapping onto the generator.
    pub source_word: Word,
    pub status: Triviality,
}

/// Relator images and, for each target generator, a preimage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectionEvidence {
    pub relators: Vec<RelatorCheck>,
    pub generators: Vec<GeneratorWitness>,
    /// Target generators with no preimage on record.
    pub uncovered: Vec<usize>,
}

impl SurjectionEvidence {
    pub fn is_homomorphism(&self) -> bool {
        self.relators.iter().all(|c| c.status == Triviality::Trivial)
    }

    pub fn is_onto(&self) -> bool {
        self.uncovered.is_empty() && self.generators.iter().all(|g| g.status == Triviality::Trivial)
    }

    pub fn is_verified(&self) -> bool {
        self.is_homomorphism() && self.is_onto()
    }

    pub fn to_text(&self, h: &GroupHom) -> String {
        let (s, t) = (h.source(), h.target());
        let mut out = String::new();
        for c in &self.relators {
            let _ = write!(out, "relator {} -> {} : {:?}", s.display_word(&c.relator), t.display_word(&c.image), c.status);
            if let Some(nf) = &c.normal_form {
                let shown = if nf.is_empty() { "1".to_string() } else { format!("{} letters", nf.len()) };
                let _ = write!(out, " (normal form {shown})");
            }
            out.push('\n');
        }
        for g in &self.generators {
            let _ = writeln!(
                out,
                "generator {} <- {} : {:?}",
                t.names()[g.generator],
                s.display_word(&g.source_word),
                g.status
            );
        }
        for &x in &self.uncovered {
            let _ = writeln!(out, "generator {} has no preimage on record", t.names()[x]);
        }
        out
    }
}

/// Check that every relator maps to the identity and that every target
/// generator has a preimage. A generator counts as covered when some
/// source generator maps to it letter for letter, or a witness word maps
/// to it in the group.
pub fn verify_surjection(h: &GroupHom, witnesses: &[(usize, Word)], solver: &WordSolver) -> SurjectionEvidence {
    assert_eq!(solver.presentation(), h.target(), "solver is for a different group");
    let relators = h
        .source()
        .relators()
        .iter()
        .map(|r| {
            let image = h.substitute(r);
            RelatorCheck { relator: r.clone(), status: solver.word_is_trivial(&image), normal_form: solver.normal_form(&image), image }
        })
        .collect();
    let mut generators = Vec::new();
    let mut uncovered = Vec::new();
    for x in 0..h.target().generator_count() {
        let target = Word::generator(x);
        if let Some(i) = h.images().iter().position(|w| *w == target) {
            generators.push(GeneratorWitness { generator: x, source_word: Word::generator(i), status: Triviality::Trivial });
            continue;
        }
        let best = witnesses
            .iter()
            .filter(|(g, _)| *g == x)
            .map(|(_, w)| GeneratorWitness {
                generator: x,
                source_word: w.clone(),
                status: solver.equal(&h.substitute(w), &target),
            })
            .min_by_key(|g| g.status != Triviality::Trivial);
        match best {
            Some(g) => generators.push(g),
            None => uncovered.push(x),
        }
    }
    SurjectionEvidence { relators, generators, uncovered }
}

/// After conjugating so that the source meridian maps to the target
/// meridian, the source longitude maps to `m2^a l2^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralImage {
    pub a: i64,
    pub b: i64,
    pub solved: bool,
    /// `g` with `phi(m1) = g m2 g^-1`.
    pub conjugator: Word,
}

/// Find `a`, `b` with `g^-1 phi(l1) g = m2^a l2^b`, trying `|b| <= bound`.
/// Fails unless every relator image is certified trivial and the meridian
/// image is shown conjugate to the target meridian.
pub fn peripheral_image(
    h: &GroupHom,
    source: &WirtingerData,
    target: &WirtingerData,
    solver: &WordSolver,
    bound: i64,
) -> Result<PeripheralImage> {
    if &source.presentation != h.source() || &target.presentation != h.target() {
        return Err(Error::Precondition("map does not match the knots".into()));
    }
    if let Some(r) = h.source().relators().iter().find(|r| solver.word_is_trivial(&h.substitute(r)) != Triviality::Trivial)
    {
        return Err(Error::Unverified(format!(
            "relator {} is not shown to map to the identity",
            h.source().display_word(r)
        )));
    }
    let m1 = h.substitute(&source.meridian);
    let (m2, l2) = (&target.meridian, &target.longitude);
    let conjugator = conjugator_search(&m1, m2, solver, 3).ok_or_else(|| {
        Error::Unverified("the meridian image is not shown conjugate to the target meridian".into())
    })?;
    let l1 = h.substitute(&source.longitude);
    let a = l1.exponent_sum();
    let inner = &(&conjugator.inverse() * &l1) * &conjugator;
    let rest = &m2.pow(-a) * &inner;
    for b in std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k])) {
        if solver.word_is_trivial(&(&l2.pow(-b) * &rest)) == Triviality::Trivial {
            return Ok(PeripheralImage { a, b, solved: true, conjugator });
        }
    }
    Ok(PeripheralImage { a, b: 0, solved: false, conjugator })
}

/// Shortest `g` (breadth first, up to `max_len` letters) with `x = g y g^-1`.
fn conjugator_search(x: &Word, y: &Word, solver: &WordSolver, max_len: usize) -> Option<Word> {
    let n = solver.presentation().generator_count();
    let mut layer = vec![Word::identity()];
    for len in 0..=max_len {
        for g in &layer {
            let c = &(&x.inverse() * g) * &(y * &g.inverse());
            if solver.word_is_trivial(&c) == Triviality::Trivial {
                return Some(g.clone());
            }
        }
        if len == max_len {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|g| {
                (0..2 * n).filter_map(move |c| {
                    let l = crate::freegroup::Letter::from_code(c);
                    let last = g.letters().last();
                    (last != Some(&l.inv())).then(|| g * &Word::from_letters([l]))
                })
            })
            .collect();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::builtin;

    const PHI: &str = "source: 8_5\ntarget: 3_1\ny1 -> x3\ny2 -> x2\ny3 -> x1\ny4 -> x3\ny5 -> x3\ny6 -> x2\ny7 -> x1\ny8 -> x3\n";

    #[test]
    fn hom_file_round_trip() {
        let f = HomFile::parse(PHI).unwrap();
        assert_eq!(f.images.len(), 8);
        assert_eq!(HomFile::parse(&f.to_text()).unwrap(), f);
        assert!(HomFile::parse("target: 3_1\n").is_err());
        assert!(HomFile::parse("source: a\nsource: b\ntarget: c\n").is_err());
    }

    #[test]
    fn missing_image_is_an_arity_error() {
        let mut f = HomFile::parse(PHI).unwrap();
        f.images.pop();
        let e = f.resolve(&builtin("8_5").unwrap(), &builtin("3_1").unwrap()).unwrap_err();
        assert!(matches!(e, Error::HomArity { got: 7, expected: 8 }));
    }

    #[test]
    fn identity_is_degree_one() {
        let k = builtin("3_1").unwrap();
        let s = WordSolver::new(&k.presentation);
        let h = GroupHom::identity(&k.presentation);
        assert!(verify_surjection(&h, &[], &s).is_verified());
        let pi = peripheral_image(&h, &k, &k, &s, 4).unwrap();
        assert_eq!((pi.a, pi.b, pi.solved), (0, 1, true));
    }

    #[test]
    fn non_hom_is_rejected() {
        let k = builtin("3_1").unwrap();
        let s = WordSolver::new(&k.presentation);
        let images = vec![Word::generator(0), Word::generator(0), Word::generator(1)];
        let h = GroupHom::new(k.presentation.clone(), k.presentation.clone(), images).unwrap();
        let ev = verify_surjection(&h, &[], &s);
        assert!(!ev.is_homomorphism());
        assert!(matches!(peripheral_image(&h, &k, &k, &s, 4), Err(Error::Unverified(_))));
    }
}
