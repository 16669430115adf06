use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::format_rational;
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid(format!(
                "interval endpoints out of order: [{}, {}]",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub(crate) fn from_sorted(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RationalInterval { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Strictly inside the open interval `(lo, hi)` of `other`.
    pub fn inside_open(&self, lo: &BigRational, hi: &BigRational) -> bool {
        lo < &self.lo && &self.hi < hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_sorted(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_sorted(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        Self::from_sorted(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().cloned().unwrap_or_else(BigRational::zero);
        let hi = cands.iter().max().cloned().unwrap_or_else(BigRational::zero);
        Self::from_sorted(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if c.is_negative() {
            Self::from_sorted(b, a)
        } else {
            Self::from_sorted(a, b)
        }
    }

    /// Tight enclosure of `{x² : x ∈ self}`.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains(&BigRational::zero()) {
            Self::from_sorted(BigRational::zero(), a.max(b))
        } else if a <= b {
            Self::from_sorted(a, b)
        } else {
            Self::from_sorted(b, a)
        }
    }

    /// Enclosure of `√x` over a nonnegative interval, each endpoint located
    /// by bisection to within `tol`.
    pub fn sqrt(&self, tol: &BigRational) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::invalid("square root of an interval reaching below zero"));
        }
        let lo = sqrt_bound(&self.lo, tol, false);
        let hi = sqrt_bound(&self.hi, tol, true);
        Ok(Self::from_sorted(lo, hi))
    }
}

/// Rational `r` with `r² ≤ x` (`upper = false`) or `r² ≥ x` (`upper = true`)
/// and `|r - √x| ≤ tol`. Bisection on `[0, max(1, x)]`.
fn sqrt_bound(x: &BigRational, tol: &BigRational, upper: bool) -> BigRational {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let mut lo = BigRational::zero();
    let mut hi = if x > &one { x.clone() } else { one };
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let sq = &mid * &mid;
        if &sq == x {
            return mid;
        }
        if &sq < x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if upper {
        hi
    } else {
        lo
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

/// Serialized as a two-element array `["lo", "hi"]` of `num/den` strings.
impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&format_rational(&self.lo))?;
        seq.serialize_element(&format_rational(&self.hi))?;
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn iv(a: (i64, i64), b: (i64, i64)) -> RationalInterval {
        RationalInterval::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(RationalInterval::new(rat(1, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn multiplication_covers_sign_mixtures() {
        let a = iv((-1, 1), (2, 1));
        let b = iv((-3, 1), (1, 1));
        let m = a.mul(&b);
        assert_eq!(m, iv((-6, 1), (3, 1)));
    }

    #[test]
    fn square_straddling_zero_starts_at_zero() {
        assert_eq!(iv((-1, 2), (1, 3)).square(), iv((0, 1), (1, 4)));
        assert_eq!(iv((-3, 1), (-2, 1)).square(), iv((4, 1), (9, 1)));
    }

    #[test]
    fn sqrt_encloses_root_two() {
        let tol = rat(1, 1_000_000);
        let r = RationalInterval::point(rat(2, 1)).sqrt(&tol).unwrap();
        assert!(r.lo() * r.lo() <= rat(2, 1));
        assert!(r.hi() * r.hi() >= rat(2, 1));
        assert!(r.width() <= rat(2, 1_000_000));
        let exact = RationalInterval::point(rat(9, 4)).sqrt(&tol).unwrap();
        assert!(exact.contains(&rat(3, 2)));
    }

    #[test]
    fn serializes_as_pair() {
        let s = serde_json::to_string(&iv((1, 2), (3, 4))).unwrap();
        assert_eq!(s, r#"["1/2","3/4"]"#);
    }
}
