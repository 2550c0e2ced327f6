//! Free groups, presentations, the integral group ring and Fox calculus.

mod groupring;
mod hom;
mod presentation;
mod word;

pub use groupring::{fox_derivative, GroupRingElem};
pub use hom::GroupHom;
pub use presentation::GroupPresentation;
pub use word::{default_names, Letter, Word};
