use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational};

/// Exact real number `a + b·√d` in a real quadratic field `Q(√d)`.
///
/// `d` is a squarefree positive integer; `d = 1` is the plain rationals and
/// is folded into `a`. A scalar with `b = 0` is compatible with every field.
#[derive(Clone)]
pub struct QuadExtScalar {
    a: BigRational,
    b: BigRational,
    d: u64,
}

pub fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadExtScalar {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if !is_squarefree(d) {
            return Err(Error::invalid(format!("{d} is not a squarefree positive integer")));
        }
        if d == 1 {
            return Ok(QuadExtScalar { a: a + b, b: BigRational::zero(), d: 1 });
        }
        Ok(QuadExtScalar { a, b, d })
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExtScalar { a, b: BigRational::zero(), d: 1 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// The field this scalar lives in; `1` when it is rational.
    pub fn field(&self) -> u64 {
        if self.b.is_zero() {
            1
        } else {
            self.d
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Common field of two scalars, or an error when they are incompatible.
    pub fn common_field(&self, other: &Self) -> Result<u64> {
        match (self.field(), other.field()) {
            (1, f) | (f, 1) => Ok(f),
            (f, g) if f == g => Ok(f),
            (f, g) => Err(Error::invalid(format!(
                "scalars from Q(√{f}) and Q(√{g}) cannot be combined"
            ))),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let d = self.common_field(o)?;
        Ok(QuadExtScalar { a: &self.a + &o.a, b: &self.b + &o.b, d })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let d = self.common_field(o)?;
        let dr = BigRational::from_integer(d.into());
        Ok(QuadExtScalar {
            a: &self.a * &o.a + &self.b * &o.b * dr,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
        })
    }

    /// `a² - d·b²`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.into())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        let n = self.norm();
        Ok(QuadExtScalar { a: &self.a / &n, b: -&self.b / &n, d: self.d })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.common_field(o)?;
        self.checked_mul(&o.recip()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadExtScalar { a: &self.a * c, b: &self.b * c, d: self.d }
    }

    /// Exact sign: compares `a²` with `d·b²` when the parts disagree.
    pub fn signum(&self) -> i8 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = &self.b * &self.b * BigRational::from_integer(self.d.into());
        match a2.cmp(&db2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `|x| < 1`.
    pub fn abs_lt_one(&self) -> bool {
        (&self.abs() - &Self::one()).signum() < 0
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    /// Parses `"num/den"` (rational) or a pair `[a, b]` for `a + b√d`.
    pub fn from_json(v: &serde_json::Value, d: u64) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => Ok(Self::rational(parse_rational(s)?)),
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| Error::invalid(format!("scalar {n} is not an integer")))?;
                Ok(Self::from_int(i))
            }
            serde_json::Value::Array(parts) if parts.len() == 2 => {
                let a = Self::from_json(&parts[0], d)?;
                let b = Self::from_json(&parts[1], d)?;
                if !a.is_rational() || !b.is_rational() {
                    return Err(Error::invalid("nested irrational scalar"));
                }
                Self::new(a.a, b.a, d)
            }
            other => Err(Error::invalid(format!("cannot read scalar from {other}"))),
        }
    }

    /// `["a", "b"]` as `num/den` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([format_rational(&self.a), format_rational(&self.b)])
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadExtScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExtScalar {}

impl PartialOrd for QuadExtScalar {
    /// `None` across incompatible fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl fmt::Debug for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

// Operator forms panic on incompatible fields; the public entry points of
// this module validate a single field up front.
impl Add for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn add(self, o: Self) -> QuadExtScalar {
        self.checked_add(o).expect("scalars share a quadratic field")
    }
}

impl Sub for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn sub(self, o: Self) -> QuadExtScalar {
        self.checked_sub(o).expect("scalars share a quadratic field")
    }
}

impl Mul for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn mul(self, o: Self) -> QuadExtScalar {
        self.checked_mul(o).expect("scalars share a quadratic field")
    }
}

impl Neg for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        QuadExtScalar { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExtScalar {
            type Output = QuadExtScalar;
            fn $m(self, o: Self) -> QuadExtScalar {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Shorthand: `a + b√d` from small integer fractions.
pub fn qe(a: (i64, i64), b: (i64, i64), d: u64) -> QuadExtScalar {
    QuadExtScalar::new(
        BigRational::new(a.0.into(), a.1.into()),
        BigRational::new(b.0.into(), b.1.into()),
        d,
    )
    .expect("valid quadratic scalar")
}

/// Shorthand for a rational scalar.
pub fn qr(n: i64, den: i64) -> QuadExtScalar {
    QuadExtScalar::rational(BigRational::new(n.into(), den.into()))
}

impl From<BigRational> for QuadExtScalar {
    fn from(a: BigRational) -> Self {
        Self::rational(a)
    }
}

impl Default for QuadExtScalar {
    fn default() -> Self {
        Self::zero()
    }
}

#[allow(dead_code)]
fn _assert_traits() {
    fn is_send_sync<T: Send + Sync>() {}
    is_send_sync::<QuadExtScalar>();
    let _ = BigInt::one();
}
