pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod freegroup;
pub mod knots;
pub mod order;
pub mod reps;
pub mod twisted;
