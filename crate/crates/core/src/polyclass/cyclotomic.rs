use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::IntPolynomial;

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// `Φ_n`, built from `z^n - 1 = Π_{d | n} Φ_d`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut table = BTreeMap::new();
    cyclotomic_memo(n, &mut table)
}

fn cyclotomic_memo(n: u64, table: &mut BTreeMap<u64, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = table.get(&n) {
        return p.clone();
    }
    let mut acc = IntPolynomial::monomial(BigInt::one(), n as usize)
        - IntPolynomial::constant(BigInt::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, table);
        let (q, r) = acc
            .div_rem_monic(&phi_d)
            .expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        acc = q;
    }
    table.insert(n, acc.clone());
    acc
}

/// Every `n` with `φ(n) ≤ max_degree`, ascending. Uses `φ(n) ≥ √(n/2)`.
pub fn indices_up_to_degree(max_degree: usize) -> Vec<u64> {
    let k = max_degree as u64;
    let limit = (2 * k * k).max(2);
    (1..=limit).filter(|&n| euler_phi(n) <= k).collect()
}

/// Smallest `n` with `Φ_n | q`, searching every `n` with `φ(n) ≤ deg q`.
pub fn cyclotomic_divisor(q: &IntPolynomial) -> Option<u64> {
    let deg = q.degree()?;
    indices_up_to_degree(deg)
        .into_iter()
        .find(|&n| q.divisible_by_monic(&cyclotomic(n)))
}

/// `Some(n)` when `q` is exactly `Φ_n`.
pub fn cyclotomic_index(q: &IntPolynomial) -> Option<u64> {
    let deg = q.degree()?;
    indices_up_to_degree(deg)
        .into_iter()
        .filter(|&n| euler_phi(n) as usize == deg)
        .find(|&n| &cyclotomic(n) == q)
}

/// Number of circle points `±ζ^j` in `Z[ζ]` for a primitive `m`-th root of
/// unity: `m` when `m` is even (then `-1` is already a power), else `2m`.
pub fn cyclotomic_unit_degree(m: u64) -> u64 {
    assert!(m >= 1, "order must be positive");
    if m.is_multiple_of(2) {
        m
    } else {
        2 * m
    }
}
