use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{kappa, EgyptianParam, InnerProductTriple, QuadExtScalar};
use crate::error::{Error, Result};
use crate::exact::{format_rational, RatPolynomial};

fn int(v: &BigInt) -> QuadExtScalar {
    QuadExtScalar::rational(BigRational::from_integer(v.clone()))
}

fn ser_scalar<S: Serializer>(v: &QuadExtScalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.to_json().serialize(s)
}

/// `coef_r · r + coef_s · s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearForm {
    #[serde(serialize_with = "ser_scalar")]
    pub coef_r: QuadExtScalar,
    #[serde(serialize_with = "ser_scalar")]
    pub coef_s: QuadExtScalar,
}

impl LinearForm {
    pub fn eval(&self, r: &BigInt, s: &BigInt) -> QuadExtScalar {
        &self.coef_r.scale(&BigRational::from_integer(r.clone()))
            + &self.coef_s.scale(&BigRational::from_integer(s.clone()))
    }
}

/// `φ₁(r,s) = (κ₁c - a)r - as` and `φ₂(r,s) = (κ₂c - b)s - br`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiForms {
    pub phi1: LinearForm,
    pub phi2: LinearForm,
}

pub fn phi_forms(abc: &[BigInt; 3], t: &InnerProductTriple) -> Result<PhiForms> {
    let (k1, k2) = kappa(t)?;
    let [a, b, c] = abc.each_ref().map(int);
    Ok(PhiForms {
        phi1: LinearForm { coef_r: &(&k1 * &c) - &a, coef_s: -&a },
        phi2: LinearForm { coef_r: -&b, coef_s: &(&k2 * &c) - &b },
    })
}

/// Both sides of `‖sφ₁v₁ + rφ₂v₂‖² = (abcn)²/d²` at a concrete parameter.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    /// The point `(dst/(bc), drt/(ac), drs/(ab))`.
    #[serde(serialize_with = "ser_point")]
    pub point: [BigRational; 3],
    /// `Q` at the point.
    #[serde(serialize_with = "ser_scalar")]
    pub q_value: QuadExtScalar,
    /// `‖sφ₁v₁ + rφ₂v₂‖²`, computed from the Gram entries.
    #[serde(serialize_with = "ser_scalar")]
    pub lhs: QuadExtScalar,
    /// `(abcn)²/d²`.
    #[serde(serialize_with = "ser_scalar")]
    pub rhs: QuadExtScalar,
    /// `lhs = (abc)²·Q/d²` (holds for every planar triple and parameter).
    pub identity_holds: bool,
    /// The point solves `Q = n²`.
    pub is_solution: bool,
    /// `lhs = rhs`.
    pub equality_holds: bool,
    /// `lhs ≤ (abcn)²`.
    pub within_bound: bool,
}

fn ser_point<S: Serializer>(v: &[BigRational; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
}

pub fn bound_check(abc: &[BigInt; 3], t: &InnerProductTriple, p: &EgyptianParam) -> Result<BoundCheck> {
    let [a, b, c] = abc;
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::invalid("bound check needs abc ≠ 0"));
    }
    if (&p.r + &p.s + &p.t) != BigInt::zero() || p.d.is_zero() {
        return Err(Error::invalid("parameters must satisfy r + s + t = 0 and d ≠ 0"));
    }
    let forms = phi_forms(abc, t)?;
    let r = |n: &BigInt| BigRational::from_integer(n.clone());
    let point = [
        r(&(&p.d * &p.s * &p.t)) / r(&(b * c)),
        r(&(&p.d * &p.r * &p.t)) / r(&(a * c)),
        r(&(&p.d * &p.r * &p.s)) / r(&(a * b)),
    ];
    let q_value = super::q_eval_rational(t, &point);
    let x1 = forms.phi1.eval(&p.r, &p.s).scale(&r(&p.s));
    let x2 = forms.phi2.eval(&p.r, &p.s).scale(&r(&p.r));
    let two_gamma = t.gamma().scale(&BigRational::from_integer(2.into()));
    let lhs = &(&(&x1 * &x1) + &(&x2 * &x2)) + &(&two_gamma * &(&x1 * &x2));
    let abc_sq = r(&(a * b * c)) * r(&(a * b * c));
    let d_sq = r(&(&p.d * &p.d));
    let n = BigRational::from_integer(t.n().into());
    let rhs = QuadExtScalar::rational(&abc_sq * &n * &n / &d_sq);
    let cap = QuadExtScalar::rational(&abc_sq * &n * &n);
    let identity_holds = lhs == q_value.scale(&(&abc_sq / &d_sq));
    let is_solution = q_value == QuadExtScalar::rational(&n * &n);
    let equality_holds = lhs == rhs;
    let within_bound = lhs.partial_cmp(&cap).is_some_and(|o| o.is_le());
    Ok(BoundCheck { point, q_value, lhs, rhs, identity_holds, is_solution, equality_holds, within_bound })
}

/// `a(α-βγ) + b(β-αγ) + c(γ-αβ)`.
pub fn proportionality_residual(abc: &[BigInt; 3], t: &InnerProductTriple) -> QuadExtScalar {
    let den = super::denominators(t);
    abc.iter()
        .zip(den.iter())
        .fold(QuadExtScalar::zero(), |acc, (k, d)| &acc + &(&int(k) * d))
}

/// `(κ₁c - a)(κ₂c - b) - ab`. Equals `c(γ-αβ)·residual / ((α-βγ)(β-αγ))`,
/// so the two forms vanish together exactly when `c ≠ 0`.
pub fn proportionality_kappa_form(abc: &[BigInt; 3], t: &InnerProductTriple) -> Result<QuadExtScalar> {
    let (k1, k2) = kappa(t)?;
    let [a, b, c] = abc.each_ref().map(int);
    let f1 = &(&k1 * &c) - &a;
    let f2 = &(&k2 * &c) - &b;
    Ok(&(&f1 * &f2) - &(&a * &b))
}

/// `p₁(λ)` and `p₂(λ)` after substituting `(α,β,γ) = λ(a,b,c) + (α₀,β₀,γ₀)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasePolynomials {
    pub abc: [BigInt; 3],
    pub offset: [BigRational; 3],
    /// `1 + 2αβγ - α² - β² - γ²`.
    pub p1: RatPolynomial,
    /// `a(α-βγ) + b(β-αγ) + c(γ-αβ)`.
    pub p2: RatPolynomial,
}

impl Serialize for CasePolynomials {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "abc": self.abc.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "offset": self.offset.iter().map(format_rational).collect::<Vec<_>>(),
            "p1": self.p1,
            "p2": self.p2,
        })
        .serialize(s)
    }
}

pub fn build_case_polynomials(abc: &[BigInt; 3], offset: &[BigRational; 3]) -> Result<CasePolynomials> {
    if abc.iter().all(Zero::is_zero) {
        return Err(Error::invalid("(a, b, c) must be nonzero"));
    }
    let lin = |k: &BigInt, c0: &BigRational| {
        RatPolynomial::new(vec![c0.clone(), BigRational::from_integer(k.clone())])
    };
    let al = lin(&abc[0], &offset[0]);
    let be = lin(&abc[1], &offset[1]);
    let ga = lin(&abc[2], &offset[2]);
    let one = RatPolynomial::from_i64(&[1]);
    let two = RatPolynomial::from_i64(&[2]);
    let p1 = &(&(&(&one + &(&two * &(&(&al * &be) * &ga))) - &(&al * &al)) - &(&be * &be)) - &(&ga * &ga);
    let k = |v: &BigInt| RatPolynomial::constant(BigRational::from_integer(v.clone()));
    let p2 = &(&(&k(&abc[0]) * &(&al - &(&be * &ga))) + &(&k(&abc[1]) * &(&be - &(&al * &ga))))
        + &(&k(&abc[2]) * &(&ga - &(&al * &be)));
    let check = &(&two * &p2) + &p1.derivative();
    if !check.is_zero() {
        return Err(Error::Invariant(format!("2·p2 + p1' = {check} is not zero")));
    }
    Ok(CasePolynomials { abc: abc.clone(), offset: offset.clone(), p1, p2 })
}
