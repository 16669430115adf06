use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{isolate_real_roots_in, IntPolynomial, RationalInterval};

/// Axis-aligned rational box in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexBox {
    pub re: RationalInterval,
    pub im: RationalInterval,
}

impl ComplexBox {
    pub fn point(re: BigRational, im: BigRational) -> Self {
        ComplexBox {
            re: RationalInterval::point(re),
            im: RationalInterval::point(im),
        }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::point(BigRational::one(), BigRational::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ComplexBox {
            re: self.re.scale(c),
            im: self.im.scale(c),
        }
    }

    /// Enclosure of `|x|²` over the box.
    pub fn modulus_sq(&self) -> RationalInterval {
        self.re.square().add(&self.im.square())
    }

    pub fn max_width(&self) -> BigRational {
        self.re.width().max(self.im.width())
    }

    /// Box midpoint as floats; display use only.
    pub fn midpoint_f64(&self) -> (f64, f64) {
        (
            self.re.midpoint().to_f64().unwrap_or(f64::NAN),
            self.im.midpoint().to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Enclosures of `x^0, …, x^{k-1}`.
    pub fn powers(&self, k: usize) -> Vec<ComplexBox> {
        let mut out = Vec::with_capacity(k);
        let mut cur = ComplexBox::one();
        for _ in 0..k {
            out.push(cur.clone());
            cur = cur.mul(self);
        }
        out
    }

    /// Enclosure of `Σ coeffs[i] · powers[i]`.
    pub fn combine(powers: &[ComplexBox], coeffs: &[BigInt]) -> ComplexBox {
        powers
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(ComplexBox::zero(), |acc, (p, c)| {
                acc.add(&p.scale(&BigRational::from_integer(c.clone())))
            })
    }
}

/// `z^j + z^{-j}` as a polynomial in `w = z + 1/z` (`T_0 = 2`, `T_1 = w`,
/// `T_{j+1} = w·T_j - T_{j-1}`).
fn power_sum_in_w(j: usize) -> IntPolynomial {
    let w = IntPolynomial::var();
    let mut prev = IntPolynomial::from_i64(&[2]);
    let mut cur = w.clone();
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        let next = &(&w * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The degree-`d` polynomial `W` with `q(z) = z^d · W(z + 1/z)` for a
/// palindromic `q` of degree `2d`.
pub fn w_reduce(q: &IntPolynomial) -> Result<IntPolynomial> {
    let deg = q
        .degree()
        .ok_or_else(|| Error::invalid("w-reduction of the zero polynomial"))?;
    if !q.is_palindromic() {
        return Err(Error::invalid("w-reduction needs a reciprocal polynomial"));
    }
    if deg % 2 == 1 {
        return Err(Error::invalid("w-reduction needs even degree"));
    }
    let d = deg / 2;
    let mut w = IntPolynomial::constant(q.coeff(d));
    for j in 1..=d {
        w = &w + &power_sum_in_w(j).scale(&q.coeff(d + j));
    }
    Ok(w)
}

/// Inverse of [`w_reduce`]: `z^d · W(z + 1/z)` with `d = deg W`.
pub fn w_expand(w: &IntPolynomial) -> IntPolynomial {
    let Some(d) = w.degree() else {
        return IntPolynomial::zero();
    };
    // z^d · (z + 1/z)^k = (z^2 + 1)^k · z^{d-k}
    let z2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    (0..=d).fold(IntPolynomial::zero(), |acc, k| {
        let term = &z2p1.pow(k as u32) * &IntPolynomial::monomial(w.coeff(k), d - k);
        &acc + &term
    })
}

/// One box per conjugate pair of roots on the unit circle, upper half-plane
/// representative: for each root `w*` of `w_reduce(q)` in `(-2, 2)`,
/// `re = w*/2` and `im = +√(1 - re²)`, both of width at most `width`.
pub fn circle_embedding(q: &IntPolynomial, width: &BigRational) -> Result<Vec<ComplexBox>> {
    if !width.is_positive() {
        return Err(Error::invalid("embedding width must be positive"));
    }
    let w = w_reduce(q)?;
    if w.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let two = BigRational::from_integer(2.into());
    let one = BigRational::one();
    let mut w_width = width.clone();
    loop {
        let roots = isolate_real_roots_in(&w, &-two.clone(), &two, &w_width)?;
        let mut boxes = Vec::with_capacity(roots.len());
        let mut ok = true;
        for r in roots {
            let re = r.scale(&(&one / &two));
            let s = RationalInterval::point(one.clone()).sub(&re.square());
            let im = clamp_nonnegative(&s).sqrt(&(width / BigRational::from_integer(4.into())))?;
            if re.width() > *width || im.width() > *width {
                ok = false;
                break;
            }
            boxes.push(ComplexBox { re, im });
        }
        if ok {
            return Ok(boxes);
        }
        w_width /= BigRational::from_integer(4.into());
    }
}

fn clamp_nonnegative(iv: &RationalInterval) -> RationalInterval {
    let lo = iv.lo().clone().max(BigRational::zero());
    let hi = iv.hi().clone().max(lo.clone());
    RationalInterval::new(lo, hi).expect("clamped interval is ordered")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p() -> IntPolynomial {
        IntPolynomial::from_i64(&[1, -1, -1, -1, 1])
    }

    #[test]
    fn w_reduce_examples() {
        assert_eq!(w_reduce(&p()).unwrap(), IntPolynomial::from_i64(&[-3, -1, 1]));
        assert_eq!(
            w_reduce(&IntPolynomial::from_i64(&[1, 0, 0, 0, 1])).unwrap(),
            IntPolynomial::from_i64(&[-2, 0, 1])
        );
        assert_eq!(
            w_reduce(&IntPolynomial::from_i64(&[1, 2, 1])).unwrap(),
            IntPolynomial::from_i64(&[2, 1])
        );
        assert!(w_reduce(&IntPolynomial::from_i64(&[0, 1, 1])).is_err());
        assert!(w_reduce(&IntPolynomial::from_i64(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn w_expand_inverts_reduce_for_p() {
        assert_eq!(w_expand(&w_reduce(&p()).unwrap()), p());
    }

    #[test]
    fn embedding_of_p_has_one_box_near_expected_cosine() {
        let width = rat(1, 1_000_000);
        let boxes = circle_embedding(&p(), &width).unwrap();
        assert_eq!(boxes.len(), 1);
        let b = &boxes[0];
        assert!(b.re.width() <= width && b.im.width() <= width);
        // re = w/2 with w a root of w^2 - w - 3 in (-2, 2): (1 - √13)/4 ≈ -0.651388
        assert!(b.re.inside_open(&rat(-651389, 1000000), &rat(-651387, 1000000)));
        // the quadratic in w evaluated at 2*re changes sign across the box
        let wq = IntPolynomial::from_i64(&[-3, -1, 1]);
        let lo = wq.eval_rational(&(b.re.lo() * rat(2, 1)));
        let hi = wq.eval_rational(&(b.re.hi() * rat(2, 1)));
        assert!(lo.is_positive() && hi.is_negative());
        assert!(b.modulus_sq().contains(&rat(1, 1)));
        assert!(b.im.lo().is_positive());
    }

    #[test]
    fn embedding_of_phi8_has_two_boxes() {
        let boxes = circle_embedding(&IntPolynomial::from_i64(&[1, 0, 0, 0, 1]), &rat(1, 1_000_000)).unwrap();
        assert_eq!(boxes.len(), 2);
        // re ≈ ∓√2/2: re² brackets 1/2
        for b in &boxes {
            assert!(b.re.square().contains(&rat(1, 2)));
        }
        assert!(boxes[0].re.hi().is_negative() && boxes[1].re.lo().is_positive());
    }

    #[test]
    fn embedding_of_gaussian_is_exactly_i() {
        let boxes = circle_embedding(&IntPolynomial::from_i64(&[1, 0, 1]), &rat(1, 1000)).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].re, RationalInterval::point(rat(0, 1)));
        assert!(boxes[0].im.contains(&rat(1, 1)));
    }

    #[test]
    fn box_arithmetic_contains_true_product() {
        let i = ComplexBox::point(rat(0, 1), rat(1, 1));
        let sq = i.mul(&i);
        assert_eq!(sq, ComplexBox::point(rat(-1, 1), rat(0, 1)));
        let pw = i.powers(4);
        assert_eq!(pw[3], ComplexBox::point(rat(0, 1), rat(-1, 1)));
        let c = ComplexBox::combine(&pw, &[BigInt::from(2), BigInt::from(3)]);
        assert_eq!(c, ComplexBox::point(rat(2, 1), rat(3, 1)));
    }
}
