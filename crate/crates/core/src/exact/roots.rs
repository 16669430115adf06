use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPolynomial, RatPolynomial, RationalInterval};
use crate::error::{Error, Result};

/// Sign changes in the nonzero coefficients, read from the top degree down.
pub fn descartes_sign_changes(poly: &IntPolynomial) -> Result<usize> {
    if poly.is_zero() {
        return Err(Error::invalid("sign changes of the zero polynomial"));
    }
    let signs: Vec<bool> = poly
        .coeffs()
        .iter()
        .rev()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Endpoint of an open interval on the real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Endpoint {
    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInf => 2,
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        })
    }
}

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<RatPolynomial>,
}

impl SturmSequence {
    /// Fails on the zero polynomial.
    pub fn new(poly: &RatPolynomial) -> Result<Self> {
        let base = squarefree_part(poly)?.normalize_positive();
        let mut chain = vec![base.clone()];
        let mut prev = base;
        let mut cur = prev.derivative().normalize_positive();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let (_, r) = prev.div_rem(&cur)?;
            prev = cur;
            cur = (-&r).normalize_positive();
        }
        Ok(SturmSequence { chain })
    }

    /// The squarefree polynomial the chain starts from.
    pub fn base(&self) -> &RatPolynomial {
        &self.chain[0]
    }

    fn sign_at(p: &RatPolynomial, x: &Endpoint) -> i8 {
        let s = match x {
            Endpoint::Finite(v) => {
                let val = p.eval(v);
                if val.is_zero() {
                    0
                } else if val.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Endpoint::PosInf | Endpoint::NegInf => {
                let lead = p.leading().map(|c| c.is_positive()).unwrap_or(false);
                let mut s = if lead { 1 } else { -1 };
                if *x == Endpoint::NegInf && p.degree().unwrap_or(0) % 2 == 1 {
                    s = -s;
                }
                s
            }
        };
        s
    }

    /// Sign variations along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Endpoint) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| Self::sign_at(p, x))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    ///
    /// Zeros skipped at a root `a` of the base give the count just right of
    /// `a`; at a root `b` they miss exactly the one variation present just
    /// left of `b`. Hence `V(lo) - V(hi) - [base(hi) = 0]`.
    pub fn count_open(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        if lo >= hi {
            return 0;
        }
        let hi_is_root = match hi {
            Endpoint::Finite(b) => self.base().eval(b).is_zero(),
            _ => false,
        };
        let v_lo = self.variations(lo);
        let v_hi = self.variations(hi);
        v_lo - v_hi - usize::from(hi_is_root)
    }

    fn count_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.count_open(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone()))
    }

    fn is_root(&self, x: &BigRational) -> bool {
        self.base().eval(x).is_zero()
    }
}

fn squarefree_part(poly: &RatPolynomial) -> Result<RatPolynomial> {
    if poly.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    let d = poly.derivative();
    if d.is_zero() {
        return Ok(poly.clone());
    }
    let g = poly_gcd(poly, &d)?;
    Ok(poly.div_rem(&g)?.0)
}

/// Exact number of distinct real roots in the open interval `(lo, hi)`.
pub fn real_root_count(poly: &IntPolynomial, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if poly.is_zero() {
        return Err(Error::invalid("root count of the zero polynomial"));
    }
    if lo >= hi {
        return Err(Error::invalid("empty interval"));
    }
    Ok(SturmSequence::new(&poly.to_rational())?.count_open(lo, hi))
}

/// A positive integer strictly larger than the modulus of every complex root
/// (Cauchy: `1 + max |c_i / c_n|`, rounded up, plus one).
pub fn root_bound(poly: &IntPolynomial) -> Result<BigInt> {
    let lead = poly
        .leading()
        .ok_or_else(|| Error::invalid("root bound of the zero polynomial"))?
        .abs();
    let n = poly.degree().unwrap_or(0);
    let max = poly.coeffs()[..n]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(max.ceil().to_integer() + BigInt::from(2))
}

/// Isolating intervals for every real root, each of width at most `width`,
/// disjoint and sorted ascending.
pub fn isolate_real_roots(poly: &IntPolynomial, width: &BigRational) -> Result<Vec<RationalInterval>> {
    let m = BigRational::from_integer(root_bound(poly)?);
    isolate_real_roots_in(poly, &-m.clone(), &m, width)
}

/// As [`isolate_real_roots`], restricted to roots in the open interval `(lo, hi)`.
pub fn isolate_real_roots_in(
    poly: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Result<Vec<RationalInterval>> {
    if !width.is_positive() {
        return Err(Error::invalid("isolation width must be positive"));
    }
    if lo >= hi {
        return Err(Error::invalid("empty isolation range"));
    }
    if poly.is_zero() {
        return Err(Error::invalid("roots of the zero polynomial"));
    }
    let sturm = SturmSequence::new(&poly.to_rational())?;
    let two = BigRational::from_integer(2.into());

    // Bisect until every open piece holds at most one root.
    let mut found: Vec<(BigRational, BigRational)> = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match sturm.count_between(&a, &b) {
            0 => {}
            1 => found.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                if sturm.is_root(&mid) {
                    found.push((mid.clone(), mid.clone()));
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));

    let mut out: Vec<(BigRational, BigRational)> = found
        .into_iter()
        .map(|(a, b)| refine(&sturm, a, b, width))
        .collect();

    // Closed intervals may still share an endpoint; shrink neighbours apart.
    loop {
        let touching: Vec<usize> = (1..out.len()).filter(|&i| out[i - 1].1 >= out[i].0).collect();
        if touching.is_empty() {
            break;
        }
        for i in touching {
            for j in [i - 1, i] {
                let (a, b) = out[j].clone();
                let half = (&b - &a) / &two;
                if half.is_positive() {
                    out[j] = refine(&sturm, a, b, &half);
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(a, b)| RationalInterval::from_sorted(a, b))
        .collect())
}

/// Shrinks `[a, b]`, known to hold exactly one root of the base in its
/// interior (or `a == b` at a root), until the width is at most `width` and
/// neither endpoint is some other root.
fn refine(
    sturm: &SturmSequence,
    mut a: BigRational,
    mut b: BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    if a == b {
        return (a, b);
    }
    let two = BigRational::from_integer(2.into());
    while &(&b - &a) > width || sturm.is_root(&a) || sturm.is_root(&b) {
        let mid = (&a + &b) / &two;
        if sturm.is_root(&mid) {
            return (mid.clone(), mid);
        }
        if sturm.count_between(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a, b)
}

/// Monic gcd over the rationals.
pub fn poly_gcd(a: &RatPolynomial, b: &RatPolynomial) -> Result<RatPolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("gcd of two zero polynomials"));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

/// The repeated root of a rational cubic, if any.
///
/// Reads the gcd with the derivative: degree 1 gives the double root, degree
/// 2 means a triple root `(λ-ρ)²`, degree 0 means no repeated root.
pub fn rational_double_root(cubic: &RatPolynomial) -> Result<Option<BigRational>> {
    if cubic.degree() != Some(3) {
        return Err(Error::invalid(format!(
            "expected a cubic, got degree {:?}",
            cubic.degree()
        )));
    }
    let g = poly_gcd(cubic, &cubic.derivative())?;
    match g.degree() {
        Some(0) => Ok(None),
        Some(1) => Ok(Some(-g.coeff(0))),
        Some(2) => Ok(Some(-g.coeff(1) / BigRational::from_integer(2.into()))),
        d => Err(Error::Invariant(format!(
            "gcd of a cubic with its derivative has degree {d:?}"
        ))),
    }
}
