//! Classification of monic integer polynomials whose roots are units:
//! reciprocality, irreducibility, cyclotomic factors, and whether the roots
//! split as a Salem number, its inverse and conjugates on the unit circle.

mod cyclotomic;
mod embedding;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use cyclotomic::{
    cyclotomic, cyclotomic_divisor, cyclotomic_index, cyclotomic_unit_degree, euler_phi,
    indices_up_to_degree,
};
pub use embedding::{circle_embedding, w_expand, w_reduce, ComplexBox};

use crate::error::{Error, Result};
use crate::exact::{
    isolate_real_roots, poly_gcd, real_root_count, Endpoint, IntPolynomial, RationalInterval,
};

/// Largest degree accepted by [`classify`].
pub const MAX_DEGREE: usize = 8;

/// Palindromic coefficient sequence. The zero polynomial is not reciprocal.
pub fn is_reciprocal(q: &IntPolynomial) -> bool {
    !q.is_zero() && q.is_palindromic()
}

/// Integer roots of a monic integer polynomial (all of its rational roots).
pub fn integer_roots(q: &IntPolynomial) -> Vec<BigInt> {
    let c0 = q.coeff(0);
    if c0.is_zero() {
        let mut out = vec![BigInt::zero()];
        let shifted = IntPolynomial::new(q.coeffs().iter().skip(1).cloned().collect());
        out.extend(integer_roots(&shifted).into_iter().filter(|r| !r.is_zero()));
        return out;
    }
    divisors(&c0.abs())
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .filter(|r| q.eval(r).is_zero())
        .collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n_u = n.to_u64().expect("divisor search on a small integer");
    (1..=n_u)
        .filter(|d| n_u.is_multiple_of(*d))
        .map(BigInt::from)
        .collect()
}

/// Irreducibility over `Z` of a monic quartic: no integer root and no split
/// into two monic integer quadratics.
///
/// For a split `(z² + az + b)(z² + cz + d)` the constants divide `q(0)` and
/// `|a|, |c| ≤ 2R` with `R = 1 + max |q_i|` bounding every root.
pub fn is_irreducible_quartic(q: &IntPolynomial) -> Result<bool> {
    if q.degree() != Some(4) {
        return Err(Error::invalid(format!(
            "irreducible-quartic test needs degree 4, got {:?}",
            q.degree()
        )));
    }
    if !q.is_monic() {
        return Err(Error::invalid("irreducible-quartic test needs a monic polynomial"));
    }
    if !integer_roots(q).is_empty() {
        return Ok(false);
    }
    Ok(quadratic_split(q).is_none())
}

/// A factorisation `q = (z² + az + b)(z² + cz + d)` as `(a, b, c, d)`.
pub fn quadratic_split(q: &IntPolynomial) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
    let c0 = q.coeff(0);
    if c0.is_zero() {
        return None;
    }
    let (q1, q2, q3) = (q.coeff(1), q.coeff(2), q.coeff(3));
    let r = q.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let bound = (&r * BigInt::from(2)).to_i64().expect("coefficient bound fits in i64");
    for b in divisors(&c0.abs()).into_iter().flat_map(|d| [d.clone(), -d]) {
        let d = &c0 / &b;
        for a in -bound..=bound {
            let a = BigInt::from(a);
            let c = &q3 - &a;
            if &b + &d + &a * &c == q2 && &a * &d + &b * &c == q1 {
                return Some((a, b, c, d));
            }
        }
    }
    None
}

/// What is known about irreducibility over `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    Proven,
    Disproven,
    /// Degree above 4 and no factor found by the partial checks.
    NotDisproven,
}

/// Complete for degree ≤ 4. Above that: integer roots, cyclotomic factors,
/// repeated factors, a reciprocal factor of a non-reciprocal polynomial, and
/// integer roots of the w-reduction.
pub fn irreducibility(q: &IntPolynomial) -> Result<Irreducibility> {
    let deg = q
        .degree()
        .ok_or_else(|| Error::invalid("irreducibility of the zero polynomial"))?;
    if !q.is_monic() {
        return Err(Error::invalid("irreducibility test needs a monic polynomial"));
    }
    let verdict = |irr: bool| {
        if irr {
            Irreducibility::Proven
        } else {
            Irreducibility::Disproven
        }
    };
    match deg {
        0 => Err(Error::invalid("constant polynomial")),
        1 => Ok(Irreducibility::Proven),
        2 | 3 => Ok(verdict(integer_roots(q).is_empty())),
        4 => Ok(verdict(is_irreducible_quartic(q)?)),
        _ => {
            if !integer_roots(q).is_empty() || cyclotomic_divisor(q).is_some() {
                return Ok(Irreducibility::Disproven);
            }
            let qr = q.to_rational();
            if poly_gcd(&qr, &qr.derivative())?.degree() != Some(0) {
                return Ok(Irreducibility::Disproven);
            }
            if !is_reciprocal(q) {
                let rev = IntPolynomial::new(q.coeffs().iter().rev().cloned().collect());
                if poly_gcd(&qr, &rev.to_rational())?.degree() != Some(0) {
                    return Ok(Irreducibility::Disproven);
                }
            } else if deg % 2 == 0 && !integer_roots(&w_reduce(q)?).is_empty() {
                return Ok(Irreducibility::Disproven);
            }
            Ok(Irreducibility::NotDisproven)
        }
    }
}

/// Classification tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassTag {
    /// `q` is exactly `Φ_n`.
    Cyclotomic(u64),
    /// Reciprocal, not known reducible, real roots `τ > 1` and `1/τ`, every
    /// other root on the unit circle.
    SalemLike,
    /// Every root is real.
    RealOnly,
    /// No root on the unit circle, some root non-real.
    NoCircleRoot,
    /// Roots on the unit circle but not of Salem shape, e.g. a negative
    /// real pair `-τ, -1/τ`.
    OtherCircle,
    Reducible,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Cyclotomic(n) => write!(f, "Cyclotomic({n})"),
            ClassTag::SalemLike => write!(f, "SalemLike"),
            ClassTag::RealOnly => write!(f, "RealOnly"),
            ClassTag::NoCircleRoot => write!(f, "NoCircleRoot"),
            ClassTag::OtherCircle => write!(f, "OtherCircle"),
            ClassTag::Reducible => write!(f, "Reducible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyClassification {
    pub tag: ClassTag,
    pub reciprocal: bool,
    pub irreducibility: Irreducibility,
    pub real_roots: Vec<RationalInterval>,
    pub circle_roots: Vec<ComplexBox>,
}

/// JSON form: `{tag, real_roots: [[lo,hi]...], circle_roots: [{re,im}...]}`
/// plus the reciprocity and irreducibility facts.
impl Serialize for PolyClassification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PolyClassification", 5)?;
        st.serialize_field("tag", &self.tag.to_string())?;
        st.serialize_field("reciprocal", &self.reciprocal)?;
        st.serialize_field("irreducibility", &self.irreducibility)?;
        st.serialize_field("real_roots", &self.real_roots)?;
        st.serialize_field("circle_roots", &self.circle_roots)?;
        st.end()
    }
}

/// Degree, monicity and `|q(0)| = 1`: the requirements on a ring modulus
/// whose root is a unit.
pub fn check_unit_modulus(q: &IntPolynomial, max_degree: usize) -> Result<()> {
    let deg = q
        .degree()
        .ok_or_else(|| Error::InvalidModulus("zero polynomial".into()))?;
    if deg == 0 || deg > max_degree {
        return Err(Error::InvalidModulus(format!(
            "degree {deg} outside 1..={max_degree}"
        )));
    }
    if !q.is_monic() {
        return Err(Error::InvalidModulus(format!("{q} is not monic")));
    }
    if !q.coeff(0).abs().is_one() {
        return Err(Error::InvalidModulus(format!(
            "constant term {} is not ±1",
            q.coeff(0)
        )));
    }
    Ok(())
}

pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// [`classify_with_width`] at width `10⁻⁶`.
pub fn classify(q: &IntPolynomial) -> Result<PolyClassification> {
    classify_with_width(q, &default_width())
}

pub fn classify_with_width(q: &IntPolynomial, width: &BigRational) -> Result<PolyClassification> {
    check_unit_modulus(q, MAX_DEGREE)?;
    let deg = q.degree().unwrap_or(0);
    let reciprocal = is_reciprocal(q);
    let irreducibility = irreducibility(q)?;
    let real_roots = isolate_real_roots(q, width)?;
    let circle_roots = if reciprocal && deg.is_multiple_of(2) {
        circle_embedding(q, width)?
    } else {
        Vec::new()
    };
    let tag = if let Some(n) = cyclotomic_index(q) {
        ClassTag::Cyclotomic(n)
    } else if irreducibility == Irreducibility::Disproven {
        ClassTag::Reducible
    } else if circle_roots.is_empty() {
        if real_roots.len() == deg {
            ClassTag::RealOnly
        } else {
            ClassTag::NoCircleRoot
        }
    } else if is_salem_shape(q, real_roots.len(), circle_roots.len())? {
        ClassTag::SalemLike
    } else {
        ClassTag::OtherCircle
    };
    Ok(PolyClassification {
        tag,
        reciprocal,
        irreducibility,
        real_roots,
        circle_roots,
    })
}

fn is_salem_shape(q: &IntPolynomial, n_real: usize, n_circle_pairs: usize) -> Result<bool> {
    let deg = q.degree().unwrap_or(0);
    if n_real != 2 || 2 * n_circle_pairs + 2 != deg {
        return Ok(false);
    }
    let one = Endpoint::Finite(BigRational::one());
    let above = real_root_count(q, &one, &Endpoint::PosInf)?;
    let inside = real_root_count(q, &Endpoint::Finite(BigRational::zero()), &one)?;
    Ok(above == 1 && inside == 1)
}

/// Product of two intervals contains 1 (used to check `τ · τ⁻¹ = 1`).
pub fn product_contains_one(a: &RationalInterval, b: &RationalInterval) -> bool {
    a.mul(b).contains(&BigRational::one())
}
