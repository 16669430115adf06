//! Exact arithmetic for points of finitely generated additive subgroups of
//! the plane that lie on the unit circle.
//!
//! A group `<1, α, …, α^{k-1}>` generated by the powers of an algebraic
//! integer `α` with `|α| = 1` meets the circle infinitely often whenever `α`
//! is not a root of unity; with three generators it only ever meets the
//! circle finitely often. This crate builds the first kind of group exactly,
//! counts its unit distances in coefficient boxes, and checks every identity
//! used in the rank-three finiteness argument with exact arithmetic.
//!
//! Layout:
//! - [`exact`]: rationals, dense polynomials, Sturm root counting and isolation.
//! - [`polyclass`]: reciprocal / cyclotomic / Salem-like classification and
//!   certified complex embeddings of circle roots.
//! - [`quartic_ring`]: arithmetic in `Z[z]/(q)` with the conjugation `α ↦ α⁻¹`.
//! - [`geometry`]: group specs, circle-point enumeration, unit-distance graphs, exports.
//! - [`rank3`]: the quadratic form of three unit vectors and its case analysis.
//! - [`cli`]: the `circle-orbit` command-line tool.

pub mod cli;
pub mod error;
pub mod limits;
pub mod exact;
pub mod geometry;
pub mod polyclass;
pub mod quartic_ring;
pub mod rank3;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, IntPolynomial, RatPolynomial, RationalInterval};
pub use geometry::{GroupSpec, RingSpec, UnitDistanceGraph};
pub use limits::Limits;
pub use polyclass::{ClassTag, ComplexBox, PolyClassification};
pub use quartic_ring::{RingElement, RingModulus};
pub use rank3::{InnerProductTriple, QuadExtScalar, SolutionSet};
