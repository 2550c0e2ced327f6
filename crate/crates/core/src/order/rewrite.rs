//! Knuth-Bendix completion of group presentations.
//!
//! Words are compared by weighted shortlex: total letter weight first, then
//! lexicographically by letter rank. Unit weights give plain shortlex.
//! Free cancellation rules are always present; relators enter as equations
//! `r = 1`. Critical pairs are resolved in rounds until none remain or a
//! limit is hit, in which case the system is returned flagged incomplete.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::freegroup::{GroupPresentation, Letter, Word};

type Code = u16;

#[derive(Debug, Clone, Copy)]
pub struct KbLimits {
    pub max_rules: usize,
    /// Rules with a longer left side are discarded (making the result incomplete).
    pub max_len: usize,
    pub time_budget: Duration,
}

impl Default for KbLimits {
    fn default() -> Self {
        KbLimits { max_rules: 2000, max_len: 40, time_budget: Duration::from_secs(10) }
    }
}

/// Reduction ordering on words: letters listed smallest first, plus a
/// positive weight per generator (shared by a generator and its inverse).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordOrder {
    letters: Vec<Letter>,
    weights: Vec<u32>,
}

impl WordOrder {
    /// Shortlex with `x1 < x1^-1 < x2 < x2^-1 < ...`.
    pub fn shortlex(generator_count: usize) -> Self {
        WordOrder {
            letters: (0..2 * generator_count).map(Letter::from_code).collect(),
            weights: vec![1; generator_count],
        }
    }

    /// `letters` must list each of the `2 * weights.len()` letters once and
    /// every weight must be positive.
    pub fn new(letters: Vec<Letter>, weights: Vec<u32>) -> Option<Self> {
        let n = weights.len();
        let mut seen = vec![false; 2 * n];
        for l in &letters {
            if l.gen >= n || std::mem::replace(&mut seen[l.code()], true) {
                return None;
            }
        }
        (letters.len() == 2 * n && weights.iter().all(|&w| w > 0))
            .then_some(WordOrder { letters, weights })
    }

    pub fn generator_count(&self) -> usize {
        self.weights.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Vec<Code>,
    pub rhs: Vec<Code>,
}

/// A terminating string rewriting system for a presented group.
///
/// Internally letters are renumbered by their rank in the word order, so the
/// lexicographic tie-break is plain comparison of codes.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    generator_count: usize,
    // rank[letter code] = internal code, and back
    rank: Vec<Code>,
    unrank: Vec<Code>,
    inverse: Vec<Code>,
    weight: Vec<u32>,
    rules: Vec<Rule>,
    complete: bool,
    // rule indices keyed by the last letter of their left side
    by_last: Vec<Vec<usize>>,
}

impl RewriteSystem {
    fn empty(order: &WordOrder) -> Self {
        let n = 2 * order.generator_count();
        let mut rank = vec![0; n];
        for (i, l) in order.letters.iter().enumerate() {
            rank[l.code()] = i as Code;
        }
        let mut unrank = vec![0; n];
        for (code, &r) in rank.iter().enumerate() {
            unrank[r as usize] = code as Code;
        }
        let inverse = (0..n).map(|r| rank[(unrank[r] ^ 1) as usize]).collect();
        let weight = (0..n).map(|r| order.weights[unrank[r] as usize / 2]).collect();
        let mut rs = RewriteSystem {
            generator_count: order.generator_count(),
            rank,
            unrank,
            inverse,
            weight,
            rules: Vec::new(),
            complete: false,
            by_last: vec![Vec::new(); n],
        };
        for c in 0..n as Code {
            let lhs = vec![c, rs.inverse[c as usize]];
            rs.rules.push(Rule { lhs, rhs: vec![] });
        }
        rs.rebuild_index();
        rs
    }

    fn rebuild_index(&mut self) {
        self.by_last.iter_mut().for_each(Vec::clear);
        for (i, r) in self.rules.iter().enumerate() {
            self.by_last[*r.lhs.last().unwrap() as usize].push(i);
        }
    }

    fn greater(&self, a: &[Code], b: &[Code]) -> bool {
        let wa: u32 = a.iter().map(|&c| self.weight[c as usize]).sum();
        let wb: u32 = b.iter().map(|&c| self.weight[c as usize]).sum();
        wa > wb || (wa == wb && a > b)
    }

    fn to_codes(&self, w: &Word) -> Vec<Code> {
        w.letters().iter().map(|l| self.rank[l.code()]).collect()
    }

    fn letters(&self, v: &[Code]) -> Vec<Letter> {
        v.iter().map(|&c| Letter::from_code(self.unrank[c as usize] as usize)).collect()
    }

    fn from_codes(&self, v: &[Code]) -> Word {
        Word::from_letters(self.letters(v))
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    fn reduce_codes(&self, input: &[Code]) -> Vec<Code> {
        let mut out: Vec<Code> = Vec::with_capacity(input.len());
        let mut pending: Vec<Code> = input.iter().rev().copied().collect();
        while let Some(c) = pending.pop() {
            out.push(c);
            let hit =
                self.by_last[c as usize].iter().copied().find(|&i| out.ends_with(&self.rules[i].lhs));
            if let Some(i) = hit {
                let rule = &self.rules[i];
                out.truncate(out.len() - rule.lhs.len());
                pending.extend(rule.rhs.iter().rev());
            }
        }
        out
    }

    /// Irreducible form of a word. When the system is complete this is the
    /// unique normal form of the group element.
    pub fn normal_form(&self, w: &Word) -> Word {
        assert!(w.generator_bound() <= self.generator_count, "word uses unknown generators");
        self.from_codes(&self.reduce_codes(&self.to_codes(w)))
    }

    /// Critical pairs of the current rules that do not resolve.
    pub fn unresolved_critical_pairs(&self) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                for (a, b) in overlaps(&self.rules[i], &self.rules[j], i == j) {
                    let (a, b) = (self.reduce_codes(&a), self.reduce_codes(&b));
                    if a != b {
                        out.push((self.from_codes(&a), self.from_codes(&b)));
                    }
                }
            }
        }
        out
    }

    /// Render rules as `lhs -> rhs` lines.
    pub fn display(&self, names: &[String]) -> String {
        let side = |v: &[Code]| {
            if v.is_empty() {
                return "1".to_string();
            }
            self.letters(v)
                .iter()
                .map(|l| format!("{}{}", names[l.gen], if l.inverse { "^-1" } else { "" }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        self.rules
            .iter()
            .map(|r| format!("{} -> {}", side(&r.lhs), side(&r.rhs)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// All overlap critical pairs between rules `a` and `b`, as unreduced word pairs.
fn overlaps(a: &Rule, b: &Rule, same: bool) -> Vec<(Vec<Code>, Vec<Code>)> {
    let mut out = Vec::new();
    let (l1, l2) = (&a.lhs, &b.lhs);
    // suffix of l1 equals prefix of l2
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut x = a.rhs.clone();
            x.extend_from_slice(&l2[k..]);
            let mut y = l1[..l1.len() - k].to_vec();
            y.extend_from_slice(&b.rhs);
            out.push((x, y));
        }
    }
    // l2 inside l1
    if l2.len() <= l1.len() && !(l2.len() == l1.len() && same) {
        for pos in 0..=l1.len() - l2.len() {
            if l1[pos..pos + l2.len()] == l2[..] {
                let mut y = l1[..pos].to_vec();
                y.extend_from_slice(&b.rhs);
                y.extend_from_slice(&l1[pos + l2.len()..]);
                out.push((a.rhs.clone(), y));
            }
        }
    }
    out
}

fn contains(hay: &[Code], needle: &[Code]) -> bool {
    !needle.is_empty() && needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

struct Completion {
    rs: RewriteSystem,
    limits: KbLimits,
    truncated: bool,
}

impl Completion {
    /// Orient and add `a = b`, then inter-reduce. Returns whether a rule was added.
    fn add_equation(&mut self, a: &[Code], b: &[Code]) -> bool {
        let mut queue = vec![(a.to_vec(), b.to_vec())];
        let mut added = false;
        while let Some((a, b)) = queue.pop() {
            let a = self.rs.reduce_codes(&a);
            let b = self.rs.reduce_codes(&b);
            if a == b {
                continue;
            }
            let (lhs, rhs) = if self.rs.greater(&a, &b) { (a, b) } else { (b, a) };
            if lhs.len() > self.limits.max_len {
                self.truncated = true;
                continue;
            }
            // rules whose left side contains the new one become equations again
            let old = std::mem::take(&mut self.rs.rules);
            let mut rules = Vec::with_capacity(old.len() + 1);
            for r in old {
                if contains(&r.lhs, &lhs) {
                    queue.push((r.lhs, r.rhs));
                } else {
                    rules.push(r);
                }
            }
            rules.push(Rule { lhs, rhs });
            added = true;
            self.rs.rules = rules;
            self.rs.rebuild_index();
            let reduced: Vec<Vec<Code>> =
                self.rs.rules.iter().map(|r| self.rs.reduce_codes(&r.rhs)).collect();
            for (r, rhs) in self.rs.rules.iter_mut().zip(reduced) {
                r.rhs = rhs;
            }
        }
        added
    }
}

/// Knuth-Bendix completion of `g` under shortlex with the default letter
/// order. Never fails: on hitting a limit the partial system is returned
/// with `is_complete() == false`.
pub fn kb_complete(g: &GroupPresentation, limits: KbLimits) -> RewriteSystem {
    kb_complete_ordered(g, limits, &WordOrder::shortlex(g.generator_count()))
}

/// Completion under an explicit word order.
pub fn kb_complete_ordered(g: &GroupPresentation, limits: KbLimits, order: &WordOrder) -> RewriteSystem {
    assert_eq!(order.generator_count(), g.generator_count(), "word order arity");
    let start = Instant::now();
    let mut c = Completion { rs: RewriteSystem::empty(order), limits, truncated: false };
    for r in g.relators() {
        let codes = c.rs.to_codes(r);
        c.add_equation(&codes, &[]);
    }
    let mut seen: HashSet<(Rule, Rule)> = HashSet::new();
    'rounds: loop {
        let mut changed = false;
        let snapshot = c.rs.rules.clone();
        for i in 0..snapshot.len() {
            for j in 0..snapshot.len() {
                let (a, b) = (&snapshot[i], &snapshot[j]);
                if !seen.insert((a.clone(), b.clone())) {
                    continue;
                }
                for (x, y) in overlaps(a, b, i == j) {
                    changed |= c.add_equation(&x, &y);
                }
                if c.rs.rules.len() > limits.max_rules || start.elapsed() > limits.time_budget {
                    c.truncated = true;
                    break 'rounds;
                }
            }
        }
        if !changed {
            break;
        }
    }
    c.rs.complete = !c.truncated && c.rs.unresolved_critical_pairs().is_empty();
    c.rs
}
