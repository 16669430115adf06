use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::serde_helpers::bigint;

/// `x = dst, y = drt, z = drs` with `r + s + t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgyptianParam {
    #[serde(with = "bigint")]
    pub d: BigInt,
    #[serde(with = "bigint")]
    pub r: BigInt,
    #[serde(with = "bigint")]
    pub s: BigInt,
    #[serde(with = "bigint")]
    pub t: BigInt,
}

impl EgyptianParam {
    pub fn reconstruct(&self) -> [BigInt; 3] {
        [&self.d * &self.s * &self.t, &self.d * &self.r * &self.t, &self.d * &self.r * &self.s]
    }
}

/// `z² = (z + x)(z + y)`.
pub fn check_square_identity(x: i64, y: i64, z: i64) -> bool {
    let (x, y, z) = (x as i128, y as i128, z as i128);
    z * z == (z + x) * (z + y)
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::from(1);
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Canonical `(d, r, s, t)` for a solution of `1/x + 1/y + 1/z = 0`:
/// smallest `|d|` (its sign is forced to be that of `xyz`), then `r > 0`.
pub fn egyptian_parametrize_big(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<EgyptianParam> {
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::invalid("egyptian parametrization needs nonzero coordinates"));
    }
    if !(y * z + x * z + x * y).is_zero() {
        return Err(Error::invalid(format!("({x}, {y}, {z}) does not solve 1/x + 1/y + 1/z = 0")));
    }
    let negative = (x * y * z).is_negative();
    let g = x.gcd(y).gcd(z);
    for m in divisors(&g) {
        let d = if negative { -m } else { m };
        // r² = yz / (dx)
        let (r2, rem) = (y * z).div_rem(&(&d * x));
        if !rem.is_zero() {
            continue;
        }
        let Some(r) = exact_sqrt(&r2) else { continue };
        let dr = &d * &r;
        if !(z % &dr).is_zero() || !(y % &dr).is_zero() {
            continue;
        }
        let s = z / &dr;
        let t = y / &dr;
        let p = EgyptianParam { d, r, s, t };
        if (&p.r + &p.s + &p.t).is_zero() && p.reconstruct() == [x.clone(), y.clone(), z.clone()] {
            return Ok(p);
        }
    }
    Err(Error::Invariant(format!("no parametrization found for ({x}, {y}, {z})")))
}

pub fn egyptian_parametrize(x: i64, y: i64, z: i64) -> Result<EgyptianParam> {
    egyptian_parametrize_big(&x.into(), &y.into(), &z.into())
}

/// Parametrization of a solution of `a/x + b/y + c/z = 0` (with `abc ≠ 0`)
/// as `x = dst/(bc), y = drt/(ac), z = drs/(ab)`: the canonical
/// parameters of `(bcx, acy, abz)`.
pub fn weighted_parametrize(abc: &[BigInt; 3], x: i64, y: i64, z: i64) -> Result<EgyptianParam> {
    let [a, b, c] = abc;
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::invalid("weighted parametrization needs abc ≠ 0"));
    }
    let (x, y, z) = (BigInt::from(x), BigInt::from(y), BigInt::from(z));
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::invalid("weighted parametrization needs nonzero coordinates"));
    }
    if !(a * &y * &z + b * &x * &z + c * &x * &y).is_zero() {
        return Err(Error::invalid("point does not solve a/x + b/y + c/z = 0"));
    }
    let p = egyptian_parametrize_big(&(b * c * &x), &(a * c * &y), &(a * b * &z))?;
    let [px, py, pz] = p.reconstruct();
    if px != b * c * &x || py != a * c * &y || pz != a * b * &z {
        return Err(Error::Invariant("weighted parametrization does not reproduce the point".into()));
    }
    Ok(p)
}
