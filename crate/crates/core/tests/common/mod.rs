//! Independent reference implementations used to check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use knotorder::algebra::{LaurentPoly, PolyMatrix, Ring};
use knotorder::freegroup::{GroupPresentation, GroupRingElem, Word};
use knotorder::reps::{Mat2, Rep2};

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows();
    let idx: Vec<usize> = (0..n).collect();
    expand(m, &idx, 0)
}

fn expand(m: &PolyMatrix, cols: &[usize], row: usize) -> LaurentPoly {
    let ring = m.ring();
    if cols.is_empty() {
        return LaurentPoly::one(ring);
    }
    let mut acc = LaurentPoly::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[(row, c)].checked_mul(&expand(m, &rest, row + 1)).unwrap();
        acc = if k % 2 == 0 { acc.checked_add(&term).unwrap() } else { acc.checked_sub(&term).unwrap() };
    }
    acc
}

/// Every tuple of `SL(2, F_p)` matrices satisfying the relators.
pub fn brute_force_reps(g: &GroupPresentation, p: u32) -> BTreeSet<Rep2> {
    let all = Mat2::all(p);
    let u = g.generator_count();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; u];
    loop {
        let images: Vec<Mat2> = idx.iter().map(|&i| all[i]).collect();
        let r = Rep2::new(p, images).unwrap();
        if r.satisfies(g) {
            out.insert(r);
        }
        let Some(k) = (0..u).rev().find(|&k| idx[k] + 1 < all.len()) else { break };
        idx[k] += 1;
        for t in &mut idx[k + 1..] {
            *t = 0;
        }
    }
    out
}

/// Smallest member of the orbit of `r` under simultaneous conjugation.
pub fn orbit_min(r: &Rep2) -> Rep2 {
    Mat2::all(r.prime()).iter().map(|g| r.conjugate_by(g)).min().unwrap()
}

// Words as signed 1-based indices, group-ring elements as maps word -> coefficient.
pub type SWord = Vec<i64>;
pub type SElem = BTreeMap<SWord, i64>;

pub fn to_signed(w: &Word) -> SWord {
    w.letters().iter().map(|l| l.sign() * (l.gen as i64 + 1)).collect()
}

pub fn reduce(w: &[i64]) -> SWord {
    let mut out: SWord = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn add_into(acc: &mut SElem, w: SWord, c: i64) {
    let e = acc.entry(reduce(&w)).or_insert(0);
    *e += c;
    if *e == 0 {
        let key = reduce(&w);
        acc.remove(&key);
    }
}

/// Fox derivative by recursion on the first letter:
/// `d(a w) = d(a) + a d(w)`, with `d(x_j) = 1`, `d(x_j^-1) = -x_j^-1`.
pub fn fox_oracle(w: &[i64], j: usize) -> SElem {
    let mut out = SElem::new();
    let Some((&a, rest)) = w.split_first() else { return out };
    let gen = a.unsigned_abs() as usize - 1;
    if gen == j {
        if a > 0 {
            add_into(&mut out, vec![], 1);
        } else {
            add_into(&mut out, vec![a], -1);
        }
    }
    for (v, c) in fox_oracle(rest, j) {
        let mut word = vec![a];
        word.extend(v);
        add_into(&mut out, word, c);
    }
    out
}

pub fn elem_to_map(e: &GroupRingElem) -> SElem {
    let mut out = SElem::new();
    for (w, c) in e.terms() {
        add_into(&mut out, to_signed(w), c);
    }
    out
}

/// Monic linear factors `t - a` of `f` over `F_p`, found by evaluation at
/// every `a`, with multiplicity.
pub fn linear_factors(f: &LaurentPoly, p: u64) -> Vec<u64> {
    let Ring::Fp(q) = f.ring() else { panic!("needs a prime field") };
    assert_eq!(q, p);
    let mut out = Vec::new();
    let mut g = f.clone();
    for a in 0..p {
        loop {
            let root = g.terms().fold(0i128, |acc, (k, c)| {
                let k = k.rem_euclid(p as i64 - 1) as u32;
                (acc + c * (a as i128).pow(k)) % p as i128
            });
            if a == 0 || root != 0 || g.is_zero() {
                break;
            }
            let lin = LaurentPoly::from_terms(f.ring(), [(1, 1), (0, -(a as i128))]);
            match g.exact_div(&lin).unwrap() {
                Some(q) => {
                    out.push(a);
                    g = q;
                }
                None => break,
            }
        }
    }
    out
}
