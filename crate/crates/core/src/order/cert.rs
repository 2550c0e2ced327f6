use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::hom::SurjectionEvidence;
use crate::algebra::{LaurentPoly, Ring};
use crate::error::{Error, Result};
use crate::knots::WirtingerData;
use crate::reps::{enumerate_reps, EnumOptions, Rep2};
use crate::twisted::{classical_alexander, twisted_pair, TAPair};

/// Which source representations enter the table of source pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepScope {
    /// Every representation. Witnesses may be any target representation.
    All,
    /// Nonabelian representations only. Witnesses must then be nonabelian,
    /// so that their pullbacks under a surjection are again nonabelian.
    Nonabelian,
}

impl RepScope {
    fn options(self) -> EnumOptions {
        EnumOptions { nonabelian_only: self == RepScope::Nonabelian, up_to_conjugacy: true }
    }

    fn label(self) -> &'static str {
        match self {
            RepScope::All => "all",
            RepScope::Nonabelian => "nonabelian",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defeat {
    DenominatorMismatch,
    NotDivisible,
}

impl Defeat {
    fn label(self) -> &'static str {
        match self {
            Defeat::DenominatorMismatch => "denominator-mismatch",
            Defeat::NotDivisible => "not-divisible",
        }
    }

    /// Why `source` cannot be the pair of a pullback of the witness, if it
    /// cannot. Denominators are compared first.
    pub fn between(source: &TAPair, witness: &TAPair) -> Result<Option<Defeat>> {
        if source.denominator != witness.denominator {
            return Ok(Some(Defeat::DenominatorMismatch));
        }
        if !source.numerator.is_divisible_by(&witness.numerator)? {
            return Ok(Some(Defeat::NotDivisible));
        }
        Ok(None)
    }
}

/// `source` has a twisted pair for every representation; a surjection onto
/// `target` would pull the witness back to one of them, whose numerator is
/// then divisible by the witness numerator with equal denominators. Each
/// source pair fails that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCertificate {
    pub source: String,
    pub target: String,
    pub p: u64,
    pub scope: RepScope,
    pub witness: Rep2,
    pub witness_names: Vec<String>,
    pub witness_pair: TAPair,
    pub source_pairs: Vec<(TAPair, Defeat)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The target Alexander polynomial does not divide the source one.
    Classical { source: String, target: String, source_poly: LaurentPoly, target_poly: LaurentPoly },
    Twisted(TwistedCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderVerdict {
    NoSurjection(Certificate),
    SurjectionVerified(SurjectionEvidence),
    Inconclusive(String),
}

impl OrderVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            OrderVerdict::NoSurjection(_) => "NoSurjection",
            OrderVerdict::SurjectionVerified(_) => "SurjectionVerified",
            OrderVerdict::Inconclusive(_) => "Inconclusive",
        }
    }
}

/// Twisted pairs of every representation in `reps`, one entry per distinct
/// pair, labelled by the first representation producing it (`r0`, `r1`, ...
/// in the order given).
pub fn pair_table(w: &WirtingerData, reps: &[Rep2]) -> Result<Vec<TAPair>> {
    let pairs = reps
        .par_iter()
        .enumerate()
        .map(|(i, r)| twisted_pair(w, r, &format!("r{i}")))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = BTreeSet::new();
    Ok(pairs.into_iter().filter(|p| seen.insert(p.key())).collect())
}

/// Search for an obstruction to a surjection `G(source) -> G(target)`.
///
/// First compares classical Alexander polynomials over the integers, then
/// looks for a target representation whose twisted pair over `F_p` rules
/// out every source pair.
pub fn no_surjection_certificate(
    source: &WirtingerData,
    target: &WirtingerData,
    p: u32,
    scope: RepScope,
) -> Result<OrderVerdict> {
    let d1 = classical_alexander(source)?;
    let d2 = classical_alexander(target)?;
    if !d1.is_divisible_by(&d2)? {
        return Ok(OrderVerdict::NoSurjection(Certificate::Classical {
            source: source.name.clone(),
            target: target.name.clone(),
            source_poly: d1,
            target_poly: d2,
        }));
    }
    let table = pair_table(source, &enumerate_reps(source, p, scope.options())?)?;
    let reps = enumerate_reps(target, p, scope.options())?;
    let mut candidates = reps
        .par_iter()
        .enumerate()
        .map(|(i, r)| Ok((r, twisted_pair(target, r, &format!("w{i}"))?)))
        .collect::<Result<Vec<_>>>()?;
    // nonabelian candidates first, then by pair
    candidates.sort_by_key(|(r, wp)| (!r.is_nonabelian(), wp.key()));
    candidates.dedup_by_key(|(r, wp)| (r.is_nonabelian(), wp.key()));
    for (r, wp) in candidates {
        let defeats = table
            .iter()
            .map(|s| Ok(Defeat::between(s, &wp)?.map(|d| (s.clone(), d))))
            .collect::<Result<Option<Vec<_>>>>()?;
        if let Some(source_pairs) = defeats {
            return Ok(OrderVerdict::NoSurjection(Certificate::Twisted(TwistedCertificate {
                source: source.name.clone(),
                target: target.name.clone(),
                p: p as u64,
                scope,
                witness: r.clone(),
                witness_names: target.presentation.names().to_vec(),
                witness_pair: wp,
                source_pairs,
            })));
        }
    }
    Ok(OrderVerdict::Inconclusive(format!(
        "no representation of {} into SL(2,F_{p}) separates it from the {} source pairs",
        target.name,
        table.len()
    )))
}

impl Certificate {
    pub fn to_text(&self) -> String {
        let mut s = String::from("certificate: no-surjection\n");
        match self {
            Certificate::Classical { source, target, source_poly, target_poly } => {
                let _ = write!(
                    s,
                    "kind: classical\nsource: {source}\ntarget: {target}\nsource-alexander: {source_poly}\ntarget-alexander: {target_poly}\n"
                );
            }
            Certificate::Twisted(c) => {
                let _ = writeln!(s, "kind: twisted\nsource: {}\ntarget: {}\np: {}", c.source, c.target, c.p);
                let _ = writeln!(s, "source-reps: {}", c.scope.label());
                let _ = writeln!(s, "witness: {}", c.witness.to_text(&c.witness_names));
                let _ = writeln!(s, "witness-pair: {}", c.witness_pair);
                for (pair, d) in &c.source_pairs {
                    let _ = writeln!(s, "pair: {pair} => {}", d.label());
                }
            }
        }
        s
    }

    /// Parse the output of [`Certificate::to_text`]. The witness is read
    /// against the generator names it was written with.
    pub fn parse(text: &str) -> Result<Self> {
        let mut fields: Vec<(usize, &str, &str)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once(':')
                .ok_or(Error::FileFormat { line: n + 1, reason: "expected `key: value`".into() })?;
            fields.push((n + 1, k.trim(), v.trim()));
        }
        let get = |key: &str| {
            fields
                .iter()
                .find(|f| f.1 == key)
                .map(|f| f.2)
                .ok_or(Error::FileFormat { line: 0, reason: format!("missing `{key}:` line") })
        };
        if get("certificate")? != "no-surjection" {
            return Err(Error::FileFormat { line: 1, reason: "not a no-surjection certificate".into() });
        }
        let (source, target) = (get("source")?.to_string(), get("target")?.to_string());
        match get("kind")? {
            "classical" => Ok(Certificate::Classical {
                source,
                target,
                source_poly: LaurentPoly::parse(get("source-alexander")?, Ring::Int)?,
                target_poly: LaurentPoly::parse(get("target-alexander")?, Ring::Int)?,
            }),
            "twisted" => {
                let p: u64 = get("p")?.parse().map_err(|_| Error::FileFormat { line: 0, reason: "bad `p`".into() })?;
                let scope = match get("source-reps")? {
                    "all" => RepScope::All,
                    "nonabelian" => RepScope::Nonabelian,
                    other => return Err(Error::FileFormat { line: 0, reason: format!("unknown scope {other:?}") }),
                };
                let wtext = get("witness")?;
                let witness_names: Vec<String> = wtext
                    .split(';')
                    .skip(1)
                    .filter_map(|part| part.split_once('=').map(|(n, _)| n.trim().to_string()))
                    .collect();
                let witness = Rep2::parse(wtext, &witness_names)?;
                let mut witness_pair = TAPair::parse(get("witness-pair")?)?;
                witness_pair.knot = target.clone();
                let mut source_pairs = Vec::new();
                for &(line, _, v) in fields.iter().filter(|f| f.1 == "pair") {
                    let (pair, reason) =
                        v.rsplit_once("=>").ok_or(Error::FileFormat { line, reason: "expected `pair => reason`".into() })?;
                    let d = match reason.trim() {
                        "denominator-mismatch" => Defeat::DenominatorMismatch,
                        "not-divisible" => Defeat::NotDivisible,
                        other => return Err(Error::FileFormat { line, reason: format!("unknown reason {other:?}") }),
                    };
                    let mut pair = TAPair::parse(pair.trim())?;
                    pair.knot = source.clone();
                    source_pairs.push((pair, d));
                }
                Ok(Certificate::Twisted(TwistedCertificate {
                    source,
                    target,
                    p,
                    scope,
                    witness,
                    witness_names,
                    witness_pair,
                    source_pairs,
                }))
            }
            other => Err(Error::FileFormat { line: 0, reason: format!("unknown certificate kind {other:?}") }),
        }
    }

    /// Whether the recorded data supports the conclusion, without
    /// recomputing anything from the knots.
    pub fn is_consistent(&self) -> Result<bool> {
        match self {
            Certificate::Classical { source_poly, target_poly, .. } => Ok(!source_poly.is_divisible_by(target_poly)?),
            Certificate::Twisted(c) => {
                for (pair, d) in &c.source_pairs {
                    if Defeat::between(pair, &c.witness_pair)? != Some(*d) {
                        return Ok(false);
                    }
                }
                Ok(c.scope == RepScope::All || c.witness.is_nonabelian())
            }
        }
    }

    /// Recompute everything the certificate claims from the two knots.
    pub fn verify(&self, source: &WirtingerData, target: &WirtingerData) -> Result<bool> {
        if !self.is_consistent()? {
            return Ok(false);
        }
        match self {
            Certificate::Classical { source_poly, target_poly, .. } => {
                Ok(classical_alexander(source)? == *source_poly && classical_alexander(target)? == *target_poly)
            }
            Certificate::Twisted(c) => {
                if !c.witness.satisfies(&target.presentation) {
                    return Ok(false);
                }
                if twisted_pair(target, &c.witness, "")?.key() != c.witness_pair.key() {
                    return Ok(false);
                }
                let reps = enumerate_reps(source, c.p as u32, c.scope.options())?;
                let expected: BTreeSet<_> = pair_table(source, &reps)?.iter().map(TAPair::key).collect();
                let recorded: BTreeSet<_> = c.source_pairs.iter().map(|(p, _)| p.key()).collect();
                Ok(expected == recorded)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::builtin;

    #[test]
    fn classical_prefilter() {
        let v = no_surjection_certificate(&builtin("3_1").unwrap(), &builtin("4_1").unwrap(), 3, RepScope::All).unwrap();
        let OrderVerdict::NoSurjection(c) = v else { panic!("expected a certificate") };
        assert!(matches!(c, Certificate::Classical { .. }));
        assert_eq!(Certificate::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn knot_onto_itself_is_not_refuted() {
        let k = builtin("3_1").unwrap();
        for p in [2, 3, 5] {
            let v = no_surjection_certificate(&k, &k, p, RepScope::All).unwrap();
            assert_eq!(v.kind(), "Inconclusive");
        }
    }

    #[test]
    fn tampered_certificate_fails() {
        let (a, b) = (builtin("8_11").unwrap(), builtin("3_1").unwrap());
        let OrderVerdict::NoSurjection(c) = no_surjection_certificate(&a, &b, 5, RepScope::All).unwrap() else {
            panic!("expected a certificate")
        };
        assert!(c.verify(&a, &b).unwrap());
        let back = Certificate::parse(&c.to_text()).unwrap();
        assert_eq!(back, c);
        let Certificate::Twisted(mut t) = c else { panic!("expected a twisted certificate") };
        t.source_pairs.pop();
        assert!(!Certificate::Twisted(t).verify(&a, &b).unwrap());
    }
}
