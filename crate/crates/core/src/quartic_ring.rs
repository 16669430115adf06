//! Arithmetic in `R = Z[z]/(q)` for a monic `q` with `q(0) = ±1`.
//!
//! `α` denotes the residue of `z`. Because `q(0)` is a unit, `α⁻¹` lies in
//! `R`, and when `q` is reciprocal the substitution `σ: α ↦ α⁻¹` is a ring
//! involution. Under an embedding sending `α` to a root on the unit circle,
//! `σ` is complex conjugation, so `|u|² = u·σ(u)` and membership of the
//! circle becomes the exact identity `u·σ(u) = 1` in `R`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{linalg, IntPolynomial, RationalInterval};
use crate::polyclass::{self, circle_embedding, ComplexBox, Irreducibility};

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 8;

/// The modulus `q` of `R`, with `α⁻¹` precomputed.
#[derive(Debug)]
pub struct RingModulus {
    q: IntPolynomial,
    k: usize,
    alpha_inv: Vec<BigInt>,
    conjugation: bool,
    irreducibility: Irreducibility,
}

impl RingModulus {
    pub fn new(q: IntPolynomial) -> Result<Arc<Self>> {
        polyclass::check_unit_modulus(&q, MAX_DEGREE)?;
        let k = q.degree().unwrap_or(0);
        if k < MIN_DEGREE {
            return Err(Error::InvalidModulus(format!(
                "degree {k} below {MIN_DEGREE}"
            )));
        }
        // α·(α^{k-1} + q_{k-1}α^{k-2} + … + q_1) = -q_0, and q_0 = ±1.
        let c0 = q.coeff(0);
        let alpha_inv: Vec<BigInt> = (1..=k).map(|i| -(&c0 * q.coeff(i))).collect();
        let irreducibility = polyclass::irreducibility(&q)?;
        let mut m = RingModulus {
            q,
            k,
            alpha_inv,
            conjugation: false,
            irreducibility,
        };
        // σ is a ring map iff q(α⁻¹) = 0 in R.
        let q_at_inv = m.eval_poly_at(&m.q, &m.alpha_inv);
        m.conjugation = q_at_inv.iter().all(Zero::is_zero);
        Ok(Arc::new(m))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Arc<Self>> {
        Self::new(IntPolynomial::from_i64(coeffs))
    }

    pub fn q(&self) -> &IntPolynomial {
        &self.q
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Whether `σ: α ↦ α⁻¹` is a well-defined ring map.
    pub fn has_conjugation(&self) -> bool {
        self.conjugation
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    fn reduce(&self, mut c: Vec<BigInt>) -> Vec<BigInt> {
        let k = self.k;
        for i in (k..c.len()).rev() {
            let t = std::mem::take(&mut c[i]);
            if t.is_zero() {
                continue;
            }
            for j in 0..k {
                let qj = self.q.coeff(j);
                if !qj.is_zero() {
                    c[i - k + j] -= &t * qj;
                }
            }
        }
        c.resize(k, BigInt::zero());
        c
    }

    fn mul_raw(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); 2 * self.k - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    fn eval_poly_at(&self, poly: &IntPolynomial, x: &[BigInt]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.k];
        for c in poly.coeffs().iter().rev() {
            acc = self.mul_raw(&acc, x);
            acc[0] += c;
        }
        acc
    }
}

/// Element `c₀ + c₁α + … + c_{k-1}α^{k-1}` of `R`.
#[derive(Clone)]
pub struct RingElement {
    coeffs: Vec<BigInt>,
    modulus: Arc<RingModulus>,
}

impl RingElement {
    pub fn new(modulus: &Arc<RingModulus>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != modulus.k {
            return Err(Error::invalid(format!(
                "expected {} coefficients, got {}",
                modulus.k,
                coeffs.len()
            )));
        }
        Ok(RingElement {
            coeffs,
            modulus: Arc::clone(modulus),
        })
    }

    pub fn from_i64(modulus: &Arc<RingModulus>, coeffs: &[i64]) -> Result<Self> {
        Self::new(modulus, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_int(modulus: &Arc<RingModulus>, n: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); modulus.k];
        coeffs[0] = n.into();
        RingElement {
            coeffs,
            modulus: Arc::clone(modulus),
        }
    }

    pub fn zero(modulus: &Arc<RingModulus>) -> Self {
        Self::from_int(modulus, 0)
    }

    pub fn one(modulus: &Arc<RingModulus>) -> Self {
        Self::from_int(modulus, 1)
    }

    /// The residue of `z`.
    pub fn alpha(modulus: &Arc<RingModulus>) -> Self {
        let mut e = Self::zero(modulus);
        e.coeffs[1] = BigInt::one();
        e
    }

    pub fn alpha_inverse(modulus: &Arc<RingModulus>) -> Self {
        RingElement {
            coeffs: modulus.alpha_inv.clone(),
            modulus: Arc::clone(modulus),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &Arc<RingModulus> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_modulus(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus.q == other.modulus.q
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_modulus(other) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "modulus mismatch: {} vs {}",
                self.modulus.q, other.modulus.q
            )))
        }
    }

    fn with_coeffs(&self, coeffs: Vec<BigInt>) -> Self {
        RingElement {
            coeffs,
            modulus: Arc::clone(&self.modulus),
        }
    }

    /// `u·v` reduced modulo `q`.
    pub fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.modulus.mul_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Inverse with integer coefficients, if `u` is a unit of `R`.
    ///
    /// Solves `u·x = 1` as the `k × k` rational system whose columns are
    /// `u·α^j`, then keeps the solution only when it is integral.
    pub fn ring_inverse(&self) -> Option<Self> {
        let k = self.modulus.k;
        if self.is_zero() {
            return None;
        }
        let mut cols = Vec::with_capacity(k);
        let mut cur = self.coeffs.clone();
        let alpha = RingElement::alpha(&self.modulus).coeffs;
        for _ in 0..k {
            cols.push(cur.clone());
            cur = self.modulus.mul_raw(&cur, &alpha);
        }
        let rows: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| BigRational::from_integer(cols[j][i].clone()))
                    .collect()
            })
            .collect();
        let mut rhs = vec![BigRational::zero(); k];
        rhs[0] = BigRational::one();
        let x = linalg::solve_square(&rows, &rhs).ok()?;
        if x.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(self.with_coeffs(x.into_iter().map(|c| c.to_integer()).collect()))
    }

    /// `σ(u) = Σ cᵢ α^{-i}`.
    pub fn conjugation(&self) -> Result<Self> {
        if !self.modulus.conjugation {
            return Err(Error::InvalidModulus(format!(
                "{} is not reciprocal: α ↦ α⁻¹ is not a ring map",
                self.modulus.q
            )));
        }
        let poly = IntPolynomial::new(self.coeffs.clone());
        Ok(self.with_coeffs(self.modulus.eval_poly_at(&poly, &self.modulus.alpha_inv)))
    }

    /// `u·σ(u)`, the squared modulus under a circle embedding.
    pub fn circle_norm(&self) -> Result<Self> {
        let conj = self.conjugation()?;
        self.ring_mul(&conj)
    }

    /// `circle_norm(u) == 1` in `R`.
    pub fn on_unit_circle(&self) -> Result<bool> {
        Ok(self.circle_norm()?.is_one())
    }

    /// The circle test together with whether a negative answer is decisive.
    pub fn circle_test(&self) -> Result<CircleVerdict> {
        let on_circle = self.on_unit_circle()?;
        let exact = on_circle || self.modulus.irreducibility == Irreducibility::Proven;
        Ok(CircleVerdict { on_circle, exact })
    }
}

/// Result of the exact circle test.
///
/// A positive answer is always sound. A negative one relies on the embedding
/// being injective, which is only guaranteed for an irreducible modulus;
/// otherwise `exact` is false and the answer is only a sufficient condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CircleVerdict {
    pub on_circle: bool,
    pub exact: bool,
}

/// `α^m` for any integer `m`, by square-and-multiply.
pub fn power(modulus: &Arc<RingModulus>, m: i64) -> Result<RingElement> {
    let base = if m < 0 {
        RingElement::alpha(modulus)
            .ring_inverse()
            .ok_or_else(|| Error::InvalidModulus("α has no integral inverse".into()))?
    } else {
        RingElement::alpha(modulus)
    };
    let mut e = m.unsigned_abs();
    let mut acc = RingElement::one(modulus);
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.ring_mul(&sq)?;
        }
        sq = sq.ring_mul(&sq)?;
        e >>= 1;
    }
    Ok(acc)
}

/// `α^m` for `m` in `m_min..=m_max`.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub m_min: i64,
    pub elements: Vec<RingElement>,
    /// All coefficient vectors pairwise distinct.
    pub distinct: bool,
}

pub fn orbit(modulus: &Arc<RingModulus>, m_min: i64, m_max: i64) -> Result<Orbit> {
    if m_min > m_max {
        return Err(Error::invalid(format!("empty range {m_min}..={m_max}")));
    }
    let alpha = RingElement::alpha(modulus);
    let mut cur = power(modulus, m_min)?;
    let mut elements = Vec::with_capacity((m_max - m_min + 1) as usize);
    for _ in m_min..=m_max {
        elements.push(cur.clone());
        cur = cur.ring_mul(&alpha)?;
    }
    let seen: HashSet<&[BigInt]> = elements.iter().map(|e| e.coeffs()).collect();
    let distinct = seen.len() == elements.len();
    Ok(Orbit {
        m_min,
        elements,
        distinct,
    })
}

/// Certified enclosure of ring elements under the embedding sending `α` to
/// one of the circle roots of the modulus.
#[derive(Clone, Debug)]
pub struct CircleEmbedding {
    modulus: Arc<RingModulus>,
    root_index: usize,
    width: BigRational,
    alpha: ComplexBox,
    powers: Vec<ComplexBox>,
}

impl CircleEmbedding {
    pub fn new(modulus: &Arc<RingModulus>, root_index: usize, width: &BigRational) -> Result<Self> {
        let boxes = circle_embedding(&modulus.q, width)?;
        let alpha = boxes.get(root_index).cloned().ok_or_else(|| {
            Error::invalid(format!(
                "circle root {root_index} requested, modulus has {}",
                boxes.len()
            ))
        })?;
        let powers = alpha.powers(modulus.k);
        Ok(CircleEmbedding {
            modulus: Arc::clone(modulus),
            root_index,
            width: width.clone(),
            alpha,
            powers,
        })
    }

    pub fn alpha(&self) -> &ComplexBox {
        &self.alpha
    }

    pub fn width(&self) -> &BigRational {
        &self.width
    }

    /// Same root at a finer width.
    pub fn refined(&self, width: &BigRational) -> Result<Self> {
        Self::new(&self.modulus, self.root_index, width)
    }

    pub fn embed(&self, u: &RingElement) -> ComplexBox {
        ComplexBox::combine(&self.powers, &u.coeffs)
    }

    pub fn embed_coeffs(&self, coeffs: &[BigInt]) -> ComplexBox {
        ComplexBox::combine(&self.powers, coeffs)
    }

    pub fn modulus_sq(&self, u: &RingElement) -> RationalInterval {
        self.embed(u).modulus_sq()
    }
}

/// Outcome of the interval check of `|u| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalCircleCheck {
    /// The enclosure of `|u|²` contains 1 at the final width.
    ContainsOne { width: BigRational },
    /// The enclosure excludes 1 at the final width.
    ExcludesOne { width: BigRational },
}

/// Interval check of `|u|² = 1`, refining by factors of `10⁴` (from the
/// embedding's width down to `min_width`) until the enclosure excludes 1.
pub fn interval_circle_check(
    emb: &CircleEmbedding,
    u: &RingElement,
    min_width: &BigRational,
) -> Result<IntervalCircleCheck> {
    let one = BigRational::one();
    let step = BigRational::from_integer(10_000.into());
    let mut cur = emb.clone();
    loop {
        let m = cur.modulus_sq(u);
        if !m.contains(&one) {
            return Ok(IntervalCircleCheck::ExcludesOne {
                width: cur.width.clone(),
            });
        }
        let next = &cur.width / &step;
        if next < *min_width {
            return Ok(IntervalCircleCheck::ContainsOne {
                width: cur.width.clone(),
            });
        }
        cur = cur.refined(&next)?;
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_modulus(other) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `{"modulus": [...], "coeffs": [...]}`, all integers as decimal strings.
impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RingElement", 2)?;
        st.serialize_field("modulus", &self.modulus.q)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

// Operator forms panic on a modulus mismatch; use the `checked_*` and
// `ring_mul` methods where the moduli are not known to agree.
impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: Self) -> RingElement {
        self.checked_add(rhs).expect("ring elements share a modulus")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: Self) -> RingElement {
        self.checked_sub(rhs).expect("ring elements share a modulus")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: Self) -> RingElement {
        self.ring_mul(rhs).expect("ring elements share a modulus")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.with_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Largest coefficient magnitude.
pub fn height(u: &RingElement) -> BigInt {
    u.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
}
