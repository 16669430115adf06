//! Three unit vectors `v₁, v₂, v₃` in the plane, described only by their
//! inner products `γ = (v₁,v₂)`, `α = (v₂,v₃)`, `β = (v₃,v₁)`.
//!
//! The lattice point `x v₁ + y v₂ + z v₃` lies on the circle of radius `n`
//! iff `Q(x,y,z) = x² + y² + z² + 2αyz + 2βzx + 2γxy = n²`. This module
//! enumerates those solutions in boxes, classifies the span of their
//! reciprocals, and checks the identities of the case analysis exactly.

mod case3;
mod egyptian;
mod quadext;
mod report;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::limits::Limits;

pub use case3::{
    bound_check, build_case_polynomials, phi_forms, proportionality_kappa_form,
    proportionality_residual, BoundCheck, CasePolynomials, LinearForm, PhiForms,
};
pub use egyptian::{check_square_identity, egyptian_parametrize, weighted_parametrize, EgyptianParam};
pub use quadext::{is_squarefree, qe, qr, QuadExtScalar};
pub use report::{rank3_report, Configuration, Rank3Report, StepReport};

/// Inner products of three unit vectors and the radius `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProductTriple {
    alpha: QuadExtScalar,
    beta: QuadExtScalar,
    gamma: QuadExtScalar,
    n: u64,
    d: u64,
}

impl InnerProductTriple {
    /// All three scalars must share one quadratic field; `n ≥ 1`.
    pub fn new(alpha: QuadExtScalar, beta: QuadExtScalar, gamma: QuadExtScalar, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be a positive integer"));
        }
        let mut d = 1;
        for f in [alpha.field(), beta.field(), gamma.field()] {
            if f != 1 {
                if d != 1 && d != f {
                    return Err(Error::invalid(format!(
                        "inner products mix Q(√{d}) and Q(√{f})"
                    )));
                }
                d = f;
            }
        }
        Ok(InnerProductTriple { alpha, beta, gamma, n, d })
    }

    pub fn alpha(&self) -> &QuadExtScalar {
        &self.alpha
    }

    pub fn beta(&self) -> &QuadExtScalar {
        &self.beta
    }

    pub fn gamma(&self) -> &QuadExtScalar {
        &self.gamma
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The field `Q(√d)` of the triple; `1` when all three are rational.
    pub fn field(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    /// Reads `{"d": 2, "alpha": ["0","7/10"], "beta": ..., "gamma": "3/5", "n": 1}`.
    /// `d` defaults to 1 and `n` to 1.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::invalid("triple must be a JSON object"))?;
        for key in obj.keys() {
            if !["d", "alpha", "beta", "gamma", "n"].contains(&key.as_str()) {
                return Err(Error::invalid(format!("unknown triple field {key:?}")));
            }
        }
        let d = match obj.get("d") {
            None => 1,
            Some(x) => x
                .as_u64()
                .ok_or_else(|| Error::invalid("\"d\" must be a positive integer"))?,
        };
        if !is_squarefree(d) {
            return Err(Error::invalid(format!("d = {d} is not squarefree and positive")));
        }
        let n = match obj.get("n") {
            None => 1,
            Some(x) => x
                .as_u64()
                .ok_or_else(|| Error::invalid("\"n\" must be a positive integer"))?,
        };
        let get = |k: &str| -> Result<QuadExtScalar> {
            let v = obj
                .get(k)
                .ok_or_else(|| Error::invalid(format!("triple is missing {k:?}")))?;
            QuadExtScalar::from_json(v, d)
        };
        Self::new(get("alpha")?, get("beta")?, get("gamma")?, n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "n": self.n,
        })
    }

    /// Same inner products, different radius.
    pub fn with_n(&self, n: u64) -> Result<Self> {
        Self::new(self.alpha.clone(), self.beta.clone(), self.gamma.clone(), n)
    }
}

impl Serialize for InnerProductTriple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `1 + 2αβγ - α² - β² - γ²`, the Gram determinant of three unit vectors.
pub fn gram_residual(alpha: &QuadExtScalar, beta: &QuadExtScalar, gamma: &QuadExtScalar) -> Result<QuadExtScalar> {
    alpha.common_field(beta)?;
    alpha.common_field(gamma)?;
    beta.common_field(gamma)?;
    let two = QuadExtScalar::from_int(2);
    let prod = alpha.checked_mul(beta)?.checked_mul(gamma)?;
    let r = &QuadExtScalar::one() + &(&two * &prod);
    let r = &r - &alpha.checked_mul(alpha)?;
    let r = &r - &beta.checked_mul(beta)?;
    Ok(&r - &gamma.checked_mul(gamma)?)
}

/// The denominators `(α-βγ, β-αγ, γ-αβ)`.
pub fn denominators(t: &InnerProductTriple) -> [QuadExtScalar; 3] {
    let (a, b, g) = (&t.alpha, &t.beta, &t.gamma);
    [a - &(b * g), b - &(a * g), g - &(a * b)]
}

/// `(1/(α-βγ), 1/(β-αγ), 1/(γ-αβ))`: for planar vectors,
/// `c₁v₁ + c₂v₂ + c₃v₃ = 0`.
pub fn reciprocal_coefficients(t: &InnerProductTriple) -> Result<[QuadExtScalar; 3]> {
    let den = denominators(t);
    let names = ["α-βγ", "β-αγ", "γ-αβ"];
    let mut out = Vec::with_capacity(3);
    for (d, name) in den.iter().zip(names) {
        if d.is_zero() {
            return Err(Error::Degenerate(format!("{name} = 0: the vectors are dependent")));
        }
        out.push(d.recip()?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// `(κ₁, κ₂)` with `v₃ = κ₁v₁ + κ₂v₂`.
pub fn kappa(t: &InnerProductTriple) -> Result<(QuadExtScalar, QuadExtScalar)> {
    let [c1, c2, c3] = reciprocal_coefficients(t)?;
    let inv3 = c3.recip()?;
    Ok((-(&c1 * &inv3), -(&c2 * &inv3)))
}

/// `Q(x, y, z)` for rational arguments.
pub fn q_eval_rational(t: &InnerProductTriple, v: &[BigRational; 3]) -> QuadExtScalar {
    let [x, y, z] = v;
    let sq = x * x + y * y + z * z;
    let two = BigRational::from_integer(2.into());
    let cross = &(&t.alpha.scale(&(y * z)) + &t.beta.scale(&(z * x))) + &t.gamma.scale(&(x * y));
    &QuadExtScalar::rational(sq) + &cross.scale(&two)
}

/// `Q(x, y, z)`.
pub fn q_eval(t: &InnerProductTriple, x: i64, y: i64, z: i64) -> QuadExtScalar {
    let r = |v: i64| BigRational::from_integer(v.into());
    q_eval_rational(t, &[r(x), r(y), r(z)])
}

/// Solutions of `Q = n²` in `[-B, B]³`.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionSet {
    pub triple: InnerProductTriple,
    #[serde(rename = "B")]
    pub bound: u64,
    /// Lexicographic order.
    pub all: Vec<[i64; 3]>,
    /// The members with `xyz ≠ 0`.
    pub nonzero: Vec<[i64; 3]>,
}

/// `Q - n²` split as `(rational part, √d part)`, each scaled to integers.
struct IntegerForm {
    l: i128,
    n2: i128,
    rat: [i128; 3],
    irr: [i128; 3],
}

impl IntegerForm {
    const COEFF_LIMIT: i128 = 1 << 60;
    const BOUND_LIMIT: u64 = 1 << 20;

    fn new(t: &InnerProductTriple, bound: u64) -> Option<Self> {
        if bound > Self::BOUND_LIMIT {
            return None;
        }
        let parts = [t.alpha.a(), t.beta.a(), t.gamma.a(), t.alpha.b(), t.beta.b(), t.gamma.b()];
        let l = parts.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let scaled: Vec<i128> = parts
            .iter()
            .map(|p| (p.numer() * (&l / p.denom())).to_i128())
            .collect::<Option<_>>()?;
        let l = l.to_i128()?;
        let n2 = (t.n as i128).checked_mul(t.n as i128)?;
        let ok = |v: i128| v.abs() < Self::COEFF_LIMIT;
        if !ok(l) || !ok(n2) || !scaled.iter().all(|&v| ok(v)) {
            return None;
        }
        Some(IntegerForm {
            l,
            n2,
            rat: [scaled[0], scaled[1], scaled[2]],
            irr: [scaled[3], scaled[4], scaled[5]],
        })
    }

    #[inline]
    fn is_solution(&self, x: i64, y: i64, z: i64) -> bool {
        let (x, y, z) = (x as i128, y as i128, z as i128);
        let (yz, zx, xy) = (y * z, z * x, x * y);
        let irr = self.irr[0] * yz + self.irr[1] * zx + self.irr[2] * xy;
        if irr != 0 {
            return false;
        }
        let cross = self.rat[0] * yz + self.rat[1] * zx + self.rat[2] * xy;
        self.l * (x * x + y * y + z * z - self.n2) + 2 * cross == 0
    }
}

/// Every `(x, y, z) ∈ [-B, B]³` with `Q(x,y,z) = n²`, exactly.
pub fn enumerate_solutions(t: &InnerProductTriple, bound: u64, limits: &Limits) -> Result<SolutionSet> {
    limits.check_box(bound, 3)?;
    let b = i64::try_from(bound).map_err(|_| Error::invalid("bound too large"))?;
    let target = QuadExtScalar::from_int(t.n * t.n);
    let fast = IntegerForm::new(t, bound);
    let slab = |x: i64| -> Vec<[i64; 3]> {
        let mut out = Vec::new();
        for y in -b..=b {
            for z in -b..=b {
                let hit = match &fast {
                    Some(f) => f.is_solution(x, y, z),
                    None => q_eval(t, x, y, z) == target,
                };
                if hit {
                    out.push([x, y, z]);
                }
            }
        }
        out
    };
    let slabs: Vec<Vec<[i64; 3]>> = limits.install(|| (-b..=b).into_par_iter().map(slab).collect())?;
    let all: Vec<[i64; 3]> = slabs.into_iter().flatten().collect();
    let nonzero = all.iter().copied().filter(|v| v.iter().all(|&c| c != 0)).collect();
    Ok(SolutionSet { triple: t.clone(), bound, all, nonzero })
}

/// Dimension of the Q-span of `{(1/x, 1/y, 1/z)}` over the nonzero solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpanCase {
    Empty,
    /// Full span: the inner products are forced rational.
    Case1,
    /// Span of dimension 1.
    Case2,
    /// Span of dimension 2: one linear relation `a/x + b/y + c/z = 0`.
    Case3,
}

impl std::fmt::Display for SpanCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SpanCase::Empty => "Empty",
            SpanCase::Case1 => "Case1",
            SpanCase::Case2 => "Case2",
            SpanCase::Case3 => "Case3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanInfo {
    pub case: SpanCase,
    pub rank: usize,
    /// Solutions whose reciprocal rows are a basis of the span, in input order.
    pub basis: Vec<[i64; 3]>,
}

pub fn reciprocal_row(v: &[i64; 3]) -> Result<Vec<BigRational>> {
    v.iter()
        .map(|&c| {
            if c == 0 {
                Err(Error::invalid("reciprocal of a zero coordinate"))
            } else {
                Ok(BigRational::new(1.into(), c.into()))
            }
        })
        .collect()
}

/// Classifies the span of the reciprocal rows of `nonzero` solutions.
pub fn span_classify(nonzero: &[[i64; 3]]) -> Result<SpanInfo> {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut basis = Vec::new();
    for v in nonzero {
        let row = reciprocal_row(v)?;
        let mut trial = rows.clone();
        trial.push(row);
        if linalg::rank(&trial) > rows.len() {
            rows = trial;
            basis.push(*v);
            if rows.len() == 3 {
                break;
            }
        }
    }
    let case = match rows.len() {
        0 => SpanCase::Empty,
        1 => SpanCase::Case2,
        2 => SpanCase::Case3,
        _ => SpanCase::Case1,
    };
    Ok(SpanInfo { case, rank: rows.len(), basis })
}

/// Primitive integer vector with first nonzero entry positive.
pub(crate) fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// The unique primitive `(a, b, c)` with `a/x + b/y + c/z = 0` on every
/// row, for rows spanning a plane.
pub fn solve_abc(nonzero: &[[i64; 3]]) -> Result<[BigInt; 3]> {
    let rows: Vec<Vec<BigRational>> = nonzero.iter().map(reciprocal_row).collect::<Result<_>>()?;
    let rank = linalg::rank(&rows);
    if rank != 2 {
        return Err(Error::invalid(format!("reciprocal rows span dimension {rank}, not 2")));
    }
    let null = linalg::nullspace(&rows, 3);
    if null.len() != 1 {
        return Err(Error::Invariant(format!("null space of dimension {}", null.len())));
    }
    let v = primitive_integer_vector(&null[0]);
    Ok([v[0].clone(), v[1].clone(), v[2].clone()])
}

/// The linear system `α/x + β/y + γ/z = (n² - x² - y² - z²)/(2xyz)` over
/// the given nonzero solutions.
pub fn case1_system(nonzero: &[[i64; 3]], n: u64) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut rows = Vec::with_capacity(nonzero.len());
    let mut rhs = Vec::with_capacity(nonzero.len());
    for v in nonzero {
        rows.push(reciprocal_row(v)?);
        let [x, y, z] = v.map(BigInt::from);
        let num = &n2 - &x * &x - &y * &y - &z * &z;
        rhs.push(BigRational::new(num, BigInt::from(2) * x * y * z));
    }
    Ok((rows, rhs))
}

/// Unique rational `(α, β, γ)` from three independent rows.
pub fn solve_case1(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Result<[BigRational; 3]> {
    if rows.len() != 3 || rhs.len() != 3 || rows.iter().any(|r| r.len() != 3) {
        return Err(Error::invalid("case-1 solve needs a 3×3 system"));
    }
    let sol = linalg::solve_square(rows, rhs)?;
    Ok([sol[0].clone(), sol[1].clone(), sol[2].clone()])
}

/// Particular rational solution of the same system when the rows span a
/// plane: the `(α₀, β₀, γ₀)` with `(α,β,γ) = λ(a,b,c) + (α₀,β₀,γ₀)`.
pub fn case3_offset(nonzero: &[[i64; 3]], n: u64) -> Result<Option<[BigRational; 3]>> {
    let (rows, rhs) = case1_system(nonzero, n)?;
    Ok(linalg::solve_particular(&rows, &rhs)?.map(|s| [s[0].clone(), s[1].clone(), s[2].clone()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    pub(crate) fn hand_triple() -> InnerProductTriple {
        InnerProductTriple::new(qe((0, 1), (7, 10), 2), qe((0, 1), (1, 2), 2), qr(3, 5), 1).unwrap()
    }

    fn equilateral() -> InnerProductTriple {
        InnerProductTriple::new(qr(-1, 2), qr(-1, 2), qr(-1, 2), 1).unwrap()
    }

    #[test]
    fn gram_examples() {
        let z = QuadExtScalar::zero;
        let o = QuadExtScalar::one;
        assert!(gram_residual(&o(), &o(), &o()).unwrap().is_zero());
        assert!(gram_residual(&z(), &o(), &z()).unwrap().is_zero());
        let t = hand_triple();
        assert!(gram_residual(t.alpha(), t.beta(), t.gamma()).unwrap().is_zero());
        assert_eq!(gram_residual(&z(), &z(), &z()).unwrap(), o());
        let s3 = QuadExtScalar::sqrt(3).unwrap();
        assert!(gram_residual(&t.alpha, &s3, &z()).is_err());
    }

    #[test]
    fn reciprocal_and_kappa_examples() {
        let deg = InnerProductTriple::new(qr(0, 1), qr(1, 1), qr(0, 1), 1).unwrap();
        assert!(matches!(reciprocal_coefficients(&deg), Err(Error::Degenerate(_))));
        assert!(kappa(&deg).is_err());
        let eq = equilateral();
        let c = reciprocal_coefficients(&eq).unwrap();
        assert!(c.iter().all(|ci| *ci == qr(-4, 3)));
        assert_eq!(kappa(&eq).unwrap(), (qr(-1, 1), qr(-1, 1)));
        let t = hand_triple();
        let [c1, c2, c3] = reciprocal_coefficients(&t).unwrap();
        let (k1, k2) = kappa(&t).unwrap();
        assert!((&c1 + &(&k1 * &c3)).is_zero());
        assert!((&c2 + &(&k2 * &c3)).is_zero());
    }

    #[test]
    fn q_eval_examples() {
        assert_eq!(q_eval(&hand_triple(), 1, 0, 0), QuadExtScalar::one());
        assert!(q_eval(&equilateral(), 1, 1, 1).is_zero());
        assert_eq!(q_eval(&hand_triple(), 1, 1, 0), qr(16, 5));
        assert_eq!(q_eval(&equilateral(), 2, 1, 1), QuadExtScalar::one());
    }

    #[test]
    fn hand_triple_has_six_solutions() {
        let s = enumerate_solutions(&hand_triple(), 50, &Limits::default()).unwrap();
        assert_eq!(
            s.all,
            vec![[-1, 0, 0], [0, -1, 0], [0, 0, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0]]
        );
        assert!(s.nonzero.is_empty());
    }

    #[test]
    fn fast_path_agrees_with_exact_evaluation() {
        let eq = equilateral();
        let dep = InnerProductTriple::new(qr(1, 1), qr(3, 5), qr(3, 5), 1).unwrap();
        for t in [hand_triple(), eq, dep, hand_triple().with_n(5).unwrap()] {
            let s = enumerate_solutions(&t, 6, &Limits::default()).unwrap();
            let target = QuadExtScalar::from_int(t.n() * t.n());
            let mut brute = Vec::new();
            for x in -6..=6 {
                for y in -6..=6 {
                    for z in -6..=6 {
                        if q_eval(&t, x, y, z) == target {
                            brute.push([x, y, z]);
                        }
                    }
                }
            }
            assert_eq!(s.all, brute);
        }
    }

    #[test]
    fn equilateral_kernel_translate() {
        let s = enumerate_solutions(&equilateral(), 2, &Limits::default()).unwrap();
        assert!(s.all.contains(&[1, 0, 0]) && s.all.contains(&[2, 1, 1]));
    }

    #[test]
    fn enumeration_cap() {
        let l = Limits::with_cap(100);
        assert!(matches!(
            enumerate_solutions(&hand_triple(), 2, &l),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn span_examples() {
        let s = span_classify(&[[3, 6, -2], [2, 2, -1], [6, 3, -2]]).unwrap();
        assert_eq!(s.case, SpanCase::Case3);
        assert_eq!(s.basis, vec![[3, 6, -2], [2, 2, -1]]);
        assert_eq!(span_classify(&[[1, 1, 1], [-1, -1, -1]]).unwrap().case, SpanCase::Case2);
        assert_eq!(span_classify(&[]).unwrap().case, SpanCase::Empty);
        assert_eq!(span_classify(&[[1, 1, 1], [1, -1, 2], [2, 3, 5]]).unwrap().case, SpanCase::Case1);
    }

    #[test]
    fn abc_examples() {
        let abc = solve_abc(&[[3, 6, -2], [2, 2, -1]]).unwrap();
        assert_eq!(abc, [1, 1, 1].map(BigInt::from));
        // 2/x + 1/y + 1/z = 0, brute force
        let mut sols = Vec::new();
        for x in -20i64..=20 {
            for y in -20i64..=20 {
                for z in -20i64..=20 {
                    if x * y * z != 0 && 2 * y * z + x * z + x * y == 0 {
                        sols.push([x, y, z]);
                    }
                }
            }
        }
        assert_eq!(solve_abc(&sols).unwrap(), [2, 1, 1].map(BigInt::from));
        assert!(solve_abc(&[[1, 1, 1], [1, -1, 2], [2, 3, 5]]).is_err());
    }

    #[test]
    fn case1_round_trip() {
        let rows = vec![
            vec![rat(1, 1), rat(1, 1), rat(1, 1)],
            vec![rat(1, 1), rat(-1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(-1, 1)],
        ];
        let truth = [rat(1, 2), rat(1, 3), rat(1, 4)];
        let rhs: Vec<BigRational> = rows
            .iter()
            .map(|r| r.iter().zip(&truth).map(|(a, b)| a * b).sum())
            .collect();
        assert_eq!(solve_case1(&rows, &rhs).unwrap(), truth);
        let singular = vec![rows[0].clone(), rows[0].clone(), rows[1].clone()];
        assert!(solve_case1(&singular, &rhs).is_err());
    }

    #[test]
    fn case1_from_equilateral_solutions() {
        let t = equilateral();
        let s = enumerate_solutions(&t, 4, &Limits::default()).unwrap();
        let span = span_classify(&s.nonzero).unwrap();
        assert_eq!(span.case, SpanCase::Case1);
        let (rows, rhs) = case1_system(&span.basis, 1).unwrap();
        let got = solve_case1(&rows, &rhs).unwrap();
        assert_eq!(got, [rat(-1, 2), rat(-1, 2), rat(-1, 2)]);
        let back = InnerProductTriple::new(
            got[0].clone().into(),
            got[1].clone().into(),
            got[2].clone().into(),
            1,
        )
        .unwrap();
        for v in &s.nonzero {
            assert_eq!(q_eval(&back, v[0], v[1], v[2]), QuadExtScalar::one());
        }
    }

    #[test]
    fn triple_json_round_trip() {
        let t = hand_triple();
        let j = t.to_json();
        assert_eq!(InnerProductTriple::from_json(&j).unwrap(), t);
        let raw = serde_json::json!({"d": 2, "alpha": ["0", "7/10"], "beta": ["0", "1/2"], "gamma": "3/5"});
        assert_eq!(InnerProductTriple::from_json(&raw).unwrap(), t);
        assert!(InnerProductTriple::from_json(&serde_json::json!({"alpha": "1"})).is_err());
        assert!(InnerProductTriple::from_json(&serde_json::json!({"d": 4, "alpha": "1", "beta": "1", "gamma": "1"})).is_err());
        assert!(InnerProductTriple::from_json(&serde_json::json!([1, 2])).is_err());
    }
}
