//! Arbitrary-precision rationals, dense univariate polynomials and exact
//! real-root machinery.

mod interval;
pub mod linalg;
mod poly;
mod rational;
mod roots;

pub use interval::RationalInterval;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Coefficient, IntPolynomial, Polynomial, RatPolynomial};
pub use rational::{format_rational, parse_bigint, parse_rational, rat, rat_int};
pub use roots::{
    descartes_sign_changes, isolate_real_roots, isolate_real_roots_in, poly_gcd,
    rational_double_root, real_root_count, root_bound, Endpoint, SturmSequence,
};

pub(crate) use rational::serde_helpers;
