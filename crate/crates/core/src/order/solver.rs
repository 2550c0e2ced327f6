use std::time::Duration;

use super::rewrite::{kb_complete_ordered, KbLimits, RewriteSystem, WordOrder};
use crate::freegroup::{GroupPresentation, Letter, Word};
use crate::reps::{enumerate_reps_of, EnumOptions, Rep2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    Trivial,
    Nontrivial,
    Unknown,
}

/// Extra generators and a weighted word order that make Knuth-Bendix
/// completion terminate for a particular presentation.
///
/// Each definition `(name, word)` adds a generator equal to `word` (over
/// the generators before it), which does not change the group. `order`
/// lists every letter of the extended presentation, smallest first, as
/// `name` or `name^-1`; `weights` pairs names with weights (default 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbHint {
    pub definitions: Vec<(String, String)>,
    pub order: Vec<String>,
    pub weights: Vec<(String, u32)>,
}

impl KbHint {
    fn apply(&self, g: &GroupPresentation) -> Option<(GroupPresentation, WordOrder)> {
        let mut ext = g.clone();
        for (name, def) in &self.definitions {
            let w = ext.word(def).ok()?;
            ext = ext.with_defined_generator(name, &w).ok()?;
        }
        let names = ext.names();
        let letters = self
            .order
            .iter()
            .map(|tok| {
                let (name, inverse) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok.as_str(), false),
                };
                names.iter().position(|n| n == name).map(|gen| Letter::new(gen, inverse))
            })
            .collect::<Option<Vec<_>>>()?;
        let mut weights = vec![1; names.len()];
        for (name, w) in &self.weights {
            weights[names.iter().position(|n| n == name)?] = *w;
        }
        Some((ext.clone(), WordOrder::new(letters, weights)?))
    }
}

/// Hints for presentations known to need them: currently the standard
/// three-generator trefoil presentation, completed through the
/// presentation `<a, b | a^2 = b^3>` with `a = x1 x2 x1`, `b = x1 x2`.
pub fn known_hint(g: &GroupPresentation) -> Option<KbHint> {
    let trefoil = [Word::from_signed(&[3, 1, -3, -2]), Word::from_signed(&[1, 2, -1, -3])];
    if g.generator_count() != 3 || g.relators() != trefoil {
        return None;
    }
    let n = g.names();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let (a, b, z) = fresh_names(n);
    let mut order = s(&[&a, &format!("{a}^-1"), &format!("{z}^-1"), &format!("{b}^-1"), &b, &z]);
    for x in n {
        order.push(x.clone());
        order.push(format!("{x}^-1"));
    }
    Some(KbHint {
        definitions: vec![
            (a.clone(), format!("{} {} {}", n[0], n[1], n[0])),
            (b.clone(), format!("{} {}", n[0], n[1])),
            (z.clone(), format!("{a} {a}")),
        ],
        order,
        weights: n.iter().map(|x| (x.clone(), 3)).collect(),
    })
}

fn fresh_names(taken: &[String]) -> (String, String, String) {
    let mut k = 0;
    loop {
        let cand = [format!("_a{k}"), format!("_b{k}"), format!("_z{k}")];
        if cand.iter().all(|c| !taken.contains(c)) {
            let [a, b, z] = cand;
            return (a, b, z);
        }
        k += 1;
    }
}

/// Word problem support for one presentation: a rewriting system (complete
/// when completion succeeded) plus representations into `SL(2, F_p)` for
/// `p` in {2, 3, 5} used to refute triviality.
#[derive(Debug, Clone)]
pub struct WordSolver {
    presentation: GroupPresentation,
    extended: GroupPresentation,
    system: RewriteSystem,
    reps: Vec<Rep2>,
}

impl WordSolver {
    /// Uses [`known_hint`] when it applies and plain shortlex otherwise.
    pub fn new(g: &GroupPresentation) -> Self {
        match known_hint(g) {
            Some(h) => Self::with_hint(g, &h),
            None => Self::with_order(g, g.clone(), WordOrder::shortlex(g.generator_count()), fallback_limits()),
        }
    }

    pub fn with_hint(g: &GroupPresentation, hint: &KbHint) -> Self {
        match hint.apply(g) {
            Some((ext, order)) => Self::with_order(g, ext, order, KbLimits::default()),
            None => Self::with_order(g, g.clone(), WordOrder::shortlex(g.generator_count()), fallback_limits()),
        }
    }

    fn with_order(g: &GroupPresentation, extended: GroupPresentation, order: WordOrder, limits: KbLimits) -> Self {
        let system = kb_complete_ordered(&extended, limits, &order);
        let all = EnumOptions { nonabelian_only: false, up_to_conjugacy: true };
        let reps = [2, 3, 5]
            .into_iter()
            .flat_map(|p| enumerate_reps_of(g, p, all).unwrap_or_default())
            .collect();
        WordSolver { presentation: g.clone(), extended, system, reps }
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// The presentation the rewriting system was completed for (the
    /// original one plus any defined generators).
    pub fn extended_presentation(&self) -> &GroupPresentation {
        &self.extended
    }

    pub fn is_complete(&self) -> bool {
        self.system.is_complete()
    }

    /// Normal form in the extended presentation, when the system is complete.
    pub fn normal_form(&self, w: &Word) -> Option<Word> {
        self.system.is_complete().then(|| self.system.normal_form(w))
    }

    /// Sound three-valued triviality test.
    pub fn word_is_trivial(&self, w: &Word) -> Triviality {
        assert!(w.generator_bound() <= self.presentation.generator_count(), "word uses unknown generators");
        if self.presentation.exponent_sum_is_hom() && w.exponent_sum() != 0 {
            return Triviality::Nontrivial;
        }
        if self.reps.iter().any(|r| !r.eval(w).is_identity()) {
            return Triviality::Nontrivial;
        }
        match self.normal_form(w) {
            Some(nf) if nf.is_empty() => Triviality::Trivial,
            Some(_) => Triviality::Nontrivial,
            None => Triviality::Unknown,
        }
    }

    /// Whether `a` and `b` are equal in the group.
    pub fn equal(&self, a: &Word, b: &Word) -> Triviality {
        self.word_is_trivial(&(a * &b.inverse()))
    }
}

fn fallback_limits() -> KbLimits {
    KbLimits { max_rules: 400, max_len: 24, time_budget: Duration::from_secs(2) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::builtin;

    #[test]
    fn trefoil_completes() {
        let w = builtin("3_1").unwrap();
        let s = WordSolver::new(&w.presentation);
        assert!(s.is_complete());
        assert!(s.system().unresolved_critical_pairs().is_empty());
        let g = &w.presentation;
        for r in g.relators() {
            assert_eq!(s.word_is_trivial(r), Triviality::Trivial);
        }
        assert_eq!(s.word_is_trivial(&Word::generator(0)), Triviality::Nontrivial);
        // longitude commutes with the meridian
        let c = &(&(&w.meridian * &w.longitude) * &w.meridian.inverse()) * &w.longitude.inverse();
        assert_eq!(s.word_is_trivial(&c), Triviality::Trivial);
        // x1 x2 x1 = x2 x1 x2
        assert_eq!(s.equal(&g.word("x1 x2 x1").unwrap(), &g.word("x2 x1 x2").unwrap()), Triviality::Trivial);
        assert_eq!(s.equal(&g.word("x1 x2").unwrap(), &g.word("x2 x1").unwrap()), Triviality::Nontrivial);
    }

    #[test]
    fn free_abelian_needs_no_hint() {
        let g = GroupPresentation::parse(crate::freegroup::default_names("a", 2), &["a1 a2 a1^-1 a2^-1"]).unwrap();
        let s = WordSolver::new(&g);
        assert!(s.is_complete());
        assert_eq!(s.word_is_trivial(&g.word("a1 a2 a1^-1 a2^-1 a2 a1 a2^-1 a1^-1").unwrap()), Triviality::Trivial);
    }
}
