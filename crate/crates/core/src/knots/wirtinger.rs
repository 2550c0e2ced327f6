use super::pd::KnotDiagram;
use crate::error::{Error, Result};
use crate::freegroup::{default_names, GroupPresentation, Word};

/// A knot group presentation together with a peripheral pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerData {
    pub name: String,
    pub presentation: GroupPresentation,
    pub meridian: Word,
    pub longitude: Word,
}

impl WirtingerData {
    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    /// Check the structural invariants: conjugation-shaped relators,
    /// deficiency one, exponent sums of the peripheral words, and an
    /// infinite cyclic abelianization.
    pub fn validate(&self) -> Result<()> {
        let g = &self.presentation;
        let u = g.generator_count();
        let fail = |m: String| Err(Error::Precondition(format!("{}: {m}", self.name)));
        if u == 0 {
            return fail("no generators".into());
        }
        if g.relators().len() + 1 != u {
            return fail(format!("{} relators for {u} generators", g.relators().len()));
        }
        if let Some(r) = g.relators().iter().find(|r| !is_wirtinger_shape(r)) {
            return fail(format!("relator {} is not of the form a b a^-1 c^-1", g.display_word(r)));
        }
        if self.meridian.exponent_sum() != 1 {
            return fail("meridian must have exponent sum 1".into());
        }
        if self.longitude.exponent_sum() != 0 {
            return fail("longitude must have exponent sum 0".into());
        }
        if g.abelian_relator_rank() + 1 != u {
            return fail("abelianization is not infinite cyclic".into());
        }
        Ok(())
    }
}

// `a b a^-1 c^-1` up to cyclic permutation and inversion; a relator that
// collapses under free reduction (a kink) also qualifies.
fn is_wirtinger_shape(r: &Word) -> bool {
    let l = r.letters();
    match l.len() {
        0 => true,
        2 => l[0].inverse != l[1].inverse,
        4 => {
            let signs: i64 = l.iter().map(|x| x.sign()).sum();
            signs == 0
                && (0..4).any(|s| {
                    let c: Vec<_> = (0..4).map(|i| l[(s + i) % 4]).collect();
                    c[0].gen == c[2].gen
                        && c[0].inverse != c[2].inverse
                        && c[1].inverse != c[3].inverse
                })
        }
        _ => false,
    }
}

/// Wirtinger presentation of a diagram.
///
/// Arcs are numbered in order of first appearance along the knot starting
/// from edge 1, one generator `x_i` per arc. Each crossing with over arc
/// `o`, incoming under arc `a`, outgoing under arc `b` and sign `e` gives
/// `b = o^-e a o^e`; the last crossing's relator is dropped. The meridian is
/// `x1`; the longitude reads `o^e` at each undercrossing from edge 1 and is
/// corrected by `x1^-writhe`.
pub fn wirtinger(d: &KnotDiagram, name: &str) -> WirtingerData {
    let edges = d.edge_count();
    let mut parent: Vec<usize> = (0..=edges).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in d.crossings() {
        let [_, j, _, l] = c.labels;
        let (a, b) = (find(&mut parent, j), find(&mut parent, l));
        parent[a] = b;
    }
    let mut arc_of_root = vec![usize::MAX; edges + 1];
    let mut arc = vec![0usize; edges + 1];
    let mut arcs = 0;
    for e in 1..=edges {
        let r = find(&mut parent, e);
        if arc_of_root[r] == usize::MAX {
            arc_of_root[r] = arcs;
            arcs += 1;
        }
        arc[e] = arc_of_root[r];
    }

    let gen = |e: usize| Word::generator(arc[e]);
    let mut relators = Vec::with_capacity(d.crossing_count());
    for c in d.crossings() {
        let [i, j, k, _] = c.labels;
        let (o, a, b) = (gen(j), gen(i), gen(k));
        let r = if c.sign < 0 {
            &(&(&o * &a) * &o.inverse()) * &b.inverse()
        } else {
            &(&(&o * &b) * &o.inverse()) * &a.inverse()
        };
        relators.push(r);
    }
    relators.pop();

    let mut under_at = vec![None; edges + 1];
    for c in d.crossings() {
        under_at[c.labels[0]] = Some(c);
    }
    let mut longitude = Word::identity();
    for c in under_at.iter().flatten() {
        longitude = &longitude * &gen(c.labels[1]).pow(c.sign as i64);
    }
    let meridian = Word::generator(0);
    longitude = &longitude * &meridian.pow(-d.writhe());

    let presentation = GroupPresentation::new(default_names("x", arcs), relators)
        .expect("relators only use arc generators");
    WirtingerData { name: name.to_string(), presentation, meridian, longitude }
}
