//! Surjections between knot groups: a word solver, verification of given
//! maps, obstructions from twisted Alexander polynomials and the image of
//! the peripheral subgroup.

mod cert;
mod hom;
mod rewrite;
mod solver;

pub use cert::{no_surjection_certificate, pair_table, Certificate, Defeat, OrderVerdict, RepScope, TwistedCertificate};
pub use hom::{
    peripheral_image, verify_surjection, GeneratorWitness, HomFile, PeripheralImage, RelatorCheck, SurjectionEvidence,
};
pub use rewrite::{kb_complete, kb_complete_ordered, KbLimits, RewriteSystem, Rule, WordOrder};
pub use solver::{known_hint, KbHint, Triviality, WordSolver};
