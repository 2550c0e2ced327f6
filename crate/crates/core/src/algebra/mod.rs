//! Exact coefficient rings, Laurent polynomials in `t`, and polynomial
//! matrices with fraction-free determinants.

mod laurent;
mod matrix;
mod ring;

pub use laurent::{gcd, LaurentPoly};
pub use matrix::PolyMatrix;
pub(crate) use ring::int_gcd;
pub use ring::{is_prime, Ring};
