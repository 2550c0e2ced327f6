//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text for stdout and stderr, so it can be driven from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use knotorder::algebra::is_prime;
use knotorder::knots::{builtin, parse_pd_file, wirtinger, PresentationFile, WirtingerData};
use knotorder::order::{
    no_surjection_certificate, pair_table, peripheral_image, verify_surjection, HomFile, OrderVerdict, RepScope,
    WordSolver,
};
use knotorder::reps::{enumerate_reps, EnumOptions};
use knotorder::twisted::{classical_alexander, TAPair};
use knotorder::Error;

/// Primes accepted without `--allow-any-prime`.
pub const DEFAULT_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 17];

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "knotorder", version, about = "Twisted Alexander polynomials and surjections of knot groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct PrimeArgs {
    /// Characteristic of the field F_p
    #[arg(long)]
    prime: String,
    /// Accept primes outside 2, 3, 5, 7, 11, 17
    #[arg(long)]
    allow_any_prime: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classical Alexander polynomial
    Alex { knot: String },
    /// Twisted Alexander pairs over SL(2, F_p), deduplicated and sorted
    Talex {
        knot: String,
        #[command(flatten)]
        prime: PrimeArgs,
        /// Include abelian representations
        #[arg(long)]
        all: bool,
    },
    /// Look for a certificate that G(K1) does not surject onto G(K2)
    Order {
        k1: String,
        k2: String,
        #[command(flatten)]
        prime: PrimeArgs,
        /// Range over all representations instead of nonabelian ones
        #[arg(long)]
        all: bool,
    },
    /// Check that a map file defines a surjective homomorphism
    VerifyHom { mapfile: PathBuf },
    /// Image of the peripheral subgroup under a verified map
    DegreeOne {
        mapfile: PathBuf,
        /// Largest |b| tried
        #[arg(long, default_value_t = 8)]
        bound: i64,
    },
    /// Parse PD codes and print them with their Wirtinger presentations
    Ingest { pdfile: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run the program on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(msg) => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

type Reply = std::result::Result<(i32, String), String>;

fn dispatch(cmd: Command) -> Reply {
    match cmd {
        Command::Alex { knot } => {
            let k = load_knot(&knot, None)?;
            Ok((EXIT_OK, format!("{}\n", classical_alexander(&k).map_err(err)?)))
        }
        Command::Talex { knot, prime, all } => {
            let p = check_prime(&prime)?;
            let k = load_knot(&knot, None)?;
            let opts = EnumOptions { nonabelian_only: !all, up_to_conjugacy: true };
            let reps = enumerate_reps(&k, p, opts).map_err(err)?;
            let mut pairs: Vec<TAPair> = pair_table(&k, &reps).map_err(err)?;
            pairs.sort_by_key(TAPair::key);
            let mut out = String::new();
            for pair in &pairs {
                let _ = writeln!(out, "{pair}");
            }
            Ok((EXIT_OK, out))
        }
        Command::Order { k1, k2, prime, all } => {
            let p = check_prime(&prime)?;
            let (a, b) = (load_knot(&k1, None)?, load_knot(&k2, None)?);
            let scope = if all { RepScope::All } else { RepScope::Nonabelian };
            match no_surjection_certificate(&a, &b, p, scope).map_err(err)? {
                OrderVerdict::NoSurjection(c) => Ok((EXIT_OK, format!("NO-SURJECTION\n{}", c.to_text()))),
                OrderVerdict::Inconclusive(why) => Ok((EXIT_INCONCLUSIVE, format!("INCONCLUSIVE\n{why}\n"))),
                OrderVerdict::SurjectionVerified(_) => unreachable!("the search never exhibits surjections"),
            }
        }
        Command::VerifyHom { mapfile } => {
            let (h, witnesses, _, target) = load_map(&mapfile)?;
            let solver = WordSolver::new(&target.presentation);
            let ev = verify_surjection(&h, &witnesses, &solver);
            let body = ev.to_text(&h);
            if ev.is_verified() {
                Ok((EXIT_OK, format!("SURJECTION-VERIFIED\n{body}")))
            } else {
                let why = if ev.is_homomorphism() {
                    "surjectivity not established"
                } else {
                    "relator images not all shown trivial"
                };
                Ok((EXIT_INCONCLUSIVE, format!("INCONCLUSIVE\n{why}\n{body}")))
            }
        }
        Command::DegreeOne { mapfile, bound } => {
            let (h, _, source, target) = load_map(&mapfile)?;
            let solver = WordSolver::new(&target.presentation);
            let pi = peripheral_image(&h, &source, &target, &solver, bound).map_err(err)?;
            let g = &target.presentation;
            let conj = if pi.conjugator.is_empty() { "1".to_string() } else { g.display_word(&pi.conjugator) };
            if !pi.solved {
                return Ok((EXIT_INCONCLUSIVE, format!("INCONCLUSIVE\na = {}\nno b with |b| <= {bound}\n", pi.a)));
            }
            let verdict = if pi.b.abs() == 1 { "DEGREE-ONE" } else { "NOT-DEGREE-ONE" };
            Ok((EXIT_OK, format!("{verdict}\na = {}\nb = {}\nconjugator = {conj}\n", pi.a, pi.b)))
        }
        Command::Ingest { pdfile } => {
            let text = read(&pdfile)?;
            let knots = parse_pd_file(&text).map_err(|e| format!("{}: {e}", pdfile.display()))?;
            let mut out = String::new();
            for (name, d) in knots {
                let w = wirtinger(&d, &name);
                let _ = writeln!(out, "{name}: {}", d.to_pd());
                for line in PresentationFile::from(&w).to_text().lines().filter(|l| !l.starts_with("name:")) {
                    let _ = writeln!(out, "# {line}");
                }
                let _ = writeln!(out, "# alexander: {}", classical_alexander(&w).map_err(err)?);
            }
            Ok((EXIT_OK, out))
        }
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn read(path: &Path) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn check_prime(a: &PrimeArgs) -> std::result::Result<u32, String> {
    let p: u32 = a.prime.trim().parse().map_err(|_| format!("bad prime `{}`", a.prime))?;
    if !is_prime(p as u64) {
        return Err(format!("bad prime `{p}`: not prime"));
    }
    if !a.allow_any_prime && !DEFAULT_PRIMES.contains(&p) {
        return Err(format!("bad prime `{p}`: expected one of 2, 3, 5, 7, 11, 17 (or pass --allow-any-prime)"));
    }
    Ok(p)
}

/// A built-in knot name, or a path to a presentation file (with meridian
/// and longitude) or to a PD file holding one knot. Relative paths are
/// taken from `base` when given.
pub fn load_knot(arg: &str, base: Option<&Path>) -> std::result::Result<WirtingerData, String> {
    let path = match base {
        Some(b) if Path::new(arg).is_relative() => b.join(arg),
        _ => PathBuf::from(arg),
    };
    if !path.is_file() {
        return builtin(arg).map_err(|e| format!("`{arg}`: {e}"));
    }
    let text = read(&path)?;
    let at = |e: Error| format!("{}: {e}", path.display());
    if text.lines().any(|l| l.trim_start().starts_with("gens:")) {
        let mut k = PresentationFile::parse(&text).map_err(at)?.into_knot().map_err(at)?;
        if k.name.is_empty() {
            k.name = arg.to_string();
        }
        return Ok(k);
    }
    let mut knots = parse_pd_file(&text).map_err(at)?;
    if knots.len() != 1 {
        return Err(format!("{}: expected one knot, found {}", path.display(), knots.len()));
    }
    let (name, d) = knots.remove(0);
    Ok(wirtinger(&d, &name))
}

type Map = (knotorder::freegroup::GroupHom, Vec<(usize, knotorder::freegroup::Word)>, WirtingerData, WirtingerData);

fn load_map(path: &Path) -> std::result::Result<Map, String> {
    let text = read(path)?;
    let f = HomFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let base = path.parent();
    let source = load_knot(&f.source, base)?;
    let target = load_knot(&f.target, base)?;
    let (h, w) = f.resolve(&source, &target).map_err(|e| {
        let mut msg = format!("{}: {e}", path.display());
        if matches!(e, Error::HomArity { .. }) {
            let missing: Vec<&str> = source
                .presentation
                .names()
                .iter()
                .filter(|n| !f.images.iter().any(|(g, _)| g == *n))
                .map(String::as_str)
                .collect();
            msg.push_str(&format!(" (no image for {})", missing.join(", ")));
        }
        msg
    })?;
    Ok((h, w, source, target))
}
