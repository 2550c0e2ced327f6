mod common;

use knotorder::algebra::{LaurentPoly, Ring};
use knotorder::knots::{available, builtin, builtin_diagram, builtin_from_pd, parse_pd, wirtinger};
use knotorder::order::{Triviality, WordSolver};
use knotorder::reps::{enumerate_reps, EnumOptions};
use knotorder::twisted::classical_alexander;
use knotorder::Error;

const FIXTURE: &str = include_str!("data/alexander.txt");

fn z(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, Ring::Int).unwrap()
}

#[test]
fn alexander_polynomials_match_knotinfo() {
    let mut checked = 0;
    for line in FIXTURE.lines().filter(|l| !l.trim().is_empty()) {
        let (name, poly) = line.split_once(':').unwrap();
        let w = builtin_from_pd(name.trim()).unwrap();
        assert_eq!(classical_alexander(&w).unwrap(), z(poly).canonical(), "{name}");
        checked += 1;
    }
    assert_eq!(checked, available().len() - 1);
}

#[test]
fn stored_presentations_agree_with_diagrams() {
    for name in ["3_1", "8_5", "8_18"] {
        let stored = builtin(name).unwrap();
        let derived = builtin_from_pd(name).unwrap();
        assert_eq!(classical_alexander(&stored).unwrap(), classical_alexander(&derived).unwrap(), "{name}");
    }
}

#[test]
fn trefoil_diagram_gives_the_stored_presentation() {
    let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    let w = wirtinger(&d, "3_1");
    let stored = builtin("3_1").unwrap();
    assert_eq!(w.presentation, stored.presentation);
    assert_eq!(w.meridian, stored.meridian);
    assert_eq!(w.longitude, stored.longitude);
    assert_eq!(classical_alexander(&w).unwrap(), z("t^2 - t + 1"));
}

#[test]
fn trefoil_longitudes_are_conjugate() {
    // the longitude paired with the meridian x3 is conjugate, by x2, to the
    // stored one paired with x1
    let k = builtin("3_1").unwrap();
    let g = &k.presentation;
    let s = WordSolver::new(g);
    let l3 = g.word("x2^-1 x3^-1 x1^-1 x3 x3 x3").unwrap();
    let x2 = g.word("x2").unwrap();
    assert_eq!(l3.exponent_sum(), 0);
    assert_eq!(s.equal(&g.word("x3").unwrap().conjugate_by(&x2), &k.meridian), Triviality::Trivial);
    assert_eq!(s.equal(&l3.conjugate_by(&x2), &k.longitude), Triviality::Trivial);
}

#[test]
fn every_table_knot_is_a_valid_wirtinger_presentation() {
    for name in available().iter().filter(|n| *n != "0_1") {
        let w = builtin(name).unwrap();
        w.validate().unwrap();
        assert_eq!(w.longitude.exponent_sum(), 0, "{name}");
        assert_eq!(w.presentation.relators().len() + 1, w.generator_count());
        let d = builtin_diagram(name).unwrap();
        assert_eq!(parse_pd(&d.to_pd()).unwrap(), *d);
    }
}

#[test]
fn longitude_commutes_with_meridian_under_representations() {
    let all = EnumOptions { nonabelian_only: false, up_to_conjugacy: true };
    for name in available().iter().filter(|n| n.starts_with(['3', '4', '5', '6', '7', '8'])) {
        let w = builtin(name).unwrap();
        for r in enumerate_reps(&w, 3, all).unwrap() {
            let (m, l) = (r.eval(&w.meridian), r.eval(&w.longitude));
            assert!(m.commutes_with(&l), "{name}");
        }
    }
}

#[test]
fn diagram_errors_have_distinct_kinds() {
    assert!(matches!(parse_pd(""), Err(Error::EmptyPd)));
    assert!(matches!(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"), Err(Error::PdMultiplicity { .. })));
    assert!(matches!(parse_pd("X[1,2,3"), Err(Error::PdSyntax(_))));
    // Hopf link
    assert!(matches!(parse_pd("X[4,1,3,2] X[2,3,1,4]"), Err(Error::PdMultiComponent)));
}

#[test]
fn unknot_and_unknown_names() {
    let u = builtin("0_1").unwrap();
    assert_eq!(classical_alexander(&u).unwrap(), z("1"));
    let e = builtin("3_7").unwrap_err();
    assert!(matches!(e, Error::UnknownKnot { .. }));
}
