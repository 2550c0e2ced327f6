use std::path::Path;
use std::process::Command;

use knotorder_cli::{run, Outcome, EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_OK};

const PHI: &str = "source: 8_5
target: 3_1
y1 -> x3
y2 -> x2
y3 -> x1
y4 -> x3
y5 -> x3
y6 -> x2
y7 -> x1
y8 -> x3
";

const PHI_PRIME: &str = "source: 8_18
target: 3_1
y1 -> x1
y2 -> x2
y3 -> x1
y4 -> x3
y5 -> x3
y6 -> x1 x3 x1^-1
y7 -> x3
y8 -> x1
";

fn knotorder(args: &[&str]) -> Outcome {
    run(std::iter::once("knotorder").chain(args.iter().copied()))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn alex_prints_the_canonical_polynomial() {
    let o = knotorder(&["alex", "8_11"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2\n");
    assert_eq!(knotorder(&["alex", "3_1"]).stdout, "t^2 - t + 1\n");
}

#[test]
fn talex_lists_sorted_pairs() {
    let o = knotorder(&["talex", "8_11", "--prime", "5", "--all"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().count(), 10);
    assert!(o.stdout.contains("N = t^8 + t^6 + t^2 + 1 ; D = t^2 + 1 ; p = 5"));
    let nonabelian = knotorder(&["talex", "8_11", "--prime", "5"]);
    assert_eq!(nonabelian.stdout.lines().count(), 5);
    for line in nonabelian.stdout.lines() {
        let pair = line.split(" ; rep").next().unwrap();
        assert!(o.stdout.contains(pair), "{line}");
    }
}

#[test]
fn order_reports_certificates_and_inconclusive_runs() {
    let o = knotorder(&["order", "8_11", "3_1", "--prime", "5"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("NO-SURJECTION\ncertificate: no-surjection\nkind: twisted\n"));
    assert!(o.stdout.contains("witness-pair: N = t^4 + 2*t^3 + 2*t^2 + 2*t + 1 ; D = t^2 + 2*t + 1"));

    let o = knotorder(&["order", "3_1", "8_11", "--prime", "5"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("kind: classical"));

    let o = knotorder(&["order", "8_18", "3_1", "--prime", "3", "--all"]);
    assert_eq!(o.code, EXIT_INCONCLUSIVE);
    assert!(o.stdout.starts_with("INCONCLUSIVE\n"));
}

#[test]
fn printed_certificate_verifies() {
    use knotorder::knots::builtin;
    use knotorder::order::Certificate;
    let o = knotorder(&["order", "8_11", "3_1", "--prime", "5", "--all"]);
    let body = o.stdout.strip_prefix("NO-SURJECTION\n").unwrap();
    let c = Certificate::parse(body).unwrap();
    assert!(c.verify(&builtin("8_11").unwrap(), &builtin("3_1").unwrap()).unwrap());
}

#[test]
fn bad_primes_are_rejected_by_name() {
    let o = knotorder(&["talex", "3_1", "--prime", "4"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("`4`"), "{}", o.stderr);
    let o = knotorder(&["talex", "3_1", "--prime", "13"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("`13`"));
    assert!(o.stdout.is_empty());
    let o = knotorder(&["talex", "3_1", "--prime", "13", "--allow-any-prime"]);
    assert_eq!(o.code, EXIT_OK);
    let o = knotorder(&["order", "3_1", "4_1", "--prime", "five"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("`five`"));
}

#[test]
fn unknown_knots_and_usage_errors() {
    let o = knotorder(&["alex", "9_99"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("9_99"));
    let o = knotorder(&["frobnicate"]);
    assert_eq!(o.code, EXIT_ERROR);
    let o = knotorder(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("degree-one"));
}

#[test]
fn verify_hom_and_degree_one_on_map_files() {
    let dir = tempfile::tempdir().unwrap();
    let phi = write(dir.path(), "phi.map", PHI);
    let phi_prime = write(dir.path(), "phi_prime.map", PHI_PRIME);

    for m in [&phi, &phi_prime] {
        let o = knotorder(&["verify-hom", path(m)]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert!(o.stdout.starts_with("SURJECTION-VERIFIED\n"));
    }

    let o = knotorder(&["degree-one", path(&phi)]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("NOT-DEGREE-ONE\na = 0\nb = -2\n"), "{}", o.stdout);
    let o = knotorder(&["degree-one", path(&phi_prime)]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("DEGREE-ONE\na = 0\nb = 1\n"), "{}", o.stdout);
}

#[test]
fn maps_that_are_not_homomorphisms() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.map", &PHI.replace("y2 -> x2", "y2 -> x1"));
    let o = knotorder(&["verify-hom", path(&bad)]);
    assert_eq!(o.code, EXIT_INCONCLUSIVE);
    assert!(o.stdout.starts_with("INCONCLUSIVE\n"));
    let o = knotorder(&["degree-one", path(&bad)]);
    assert_eq!(o.code, EXIT_ERROR);

    let short = write(dir.path(), "short.map", &PHI.replace("y8 -> x3\n", ""));
    let o = knotorder(&["verify-hom", path(&short)]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("y8"), "{}", o.stderr);

    let garbled = write(dir.path(), "garbled.map", &PHI.replace("y3 -> x1", "y3 => x1"));
    let o = knotorder(&["verify-hom", path(&garbled)]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("garbled.map"));

    let o = knotorder(&["verify-hom", path(&dir.path().join("missing.map"))]);
    assert_eq!(o.code, EXIT_ERROR);
}

#[test]
fn maps_can_name_knot_files() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "trefoil.pd", "trefoil: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n");
    let m = write(dir.path(), "id.map", "source: trefoil.pd\ntarget: 3_1\nx1 -> x1\nx2 -> x2\nx3 -> x3\n");
    let o = knotorder(&["verify-hom", path(&m)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let o = knotorder(&["degree-one", path(&m)]);
    assert!(o.stdout.starts_with("DEGREE-ONE\na = 0\nb = 1\n"), "{}", o.stdout);
}

#[test]
fn ingest_is_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let src = write(dir.path(), "in.pd", "3_1: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\nfig8: X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n");
    let first = knotorder(&["ingest", path(&src)]);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    assert!(first.stdout.contains("# alexander: t^2 - t + 1"));
    assert!(first.stdout.contains("# alexander: t^2 - 3*t + 1"));
    let again = write(dir.path(), "again.pd", &first.stdout);
    let second = knotorder(&["ingest", path(&again)]);
    assert_eq!(second.stdout, first.stdout);

    let bad = write(dir.path(), "bad.pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]\n");
    let o = knotorder(&["ingest", path(&bad)]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("bad.pd"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_knotorder");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["alex", "4_1"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "t^2 - 3*t + 1\n");
    assert_eq!(status(&["order", "8_5", "3_1", "--prime", "2"]).status.code(), Some(EXIT_INCONCLUSIVE));
    let bad = status(&["talex", "3_1", "--prime", "9"]);
    assert_eq!(bad.status.code(), Some(EXIT_ERROR));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("`9`"));
}
