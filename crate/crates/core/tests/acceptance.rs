//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use circle_orbit::cli::cmd_scan;
use circle_orbit::exact::{
    descartes_sign_changes, rat, rational_double_root, real_root_count, Endpoint, IntPolynomial,
    RatPolynomial,
};
use circle_orbit::geometry::{degree_of_origin, GroupSpec};
use circle_orbit::polyclass::{
    classify_with_width, cyclotomic, cyclotomic_divisor, cyclotomic_unit_degree, is_irreducible_quartic,
    is_reciprocal, ClassTag,
};
use circle_orbit::quartic_ring::{
    interval_circle_check, orbit, power, CircleEmbedding, IntervalCircleCheck, RingElement, RingModulus,
};
use circle_orbit::rank3::{
    build_case_polynomials, check_square_identity, enumerate_solutions, gram_residual, kappa, rank3_report,
    reciprocal_coefficients, egyptian_parametrize, Configuration, InnerProductTriple, QuadExtScalar,
};
use circle_orbit::Limits;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn p_coeffs() -> [i64; 5] {
    [1, -1, -1, -1, 1]
}

fn p() -> IntPolynomial {
    IntPolynomial::from_i64(&p_coeffs())
}

fn salem() -> Arc<RingModulus> {
    RingModulus::from_i64(&p_coeffs()).unwrap()
}

fn e(v: &str) -> String {
    v.to_string()
}

fn criterion_1() -> Check {
    let q = p();
    let desc = descartes_sign_changes(&q).map_err(|x| x.to_string())?;
    ensure(desc == 2, format!("descartes = {desc}"))?;
    let zero = Endpoint::Finite(rat(0, 1));
    let pos = real_root_count(&q, &zero, &Endpoint::PosInf).map_err(|x| x.to_string())?;
    let neg = real_root_count(&q, &Endpoint::NegInf, &zero).map_err(|x| x.to_string())?;
    ensure(pos == 2, format!("positive roots = {pos}"))?;
    ensure(neg == 0, format!("negative roots = {neg}"))?;
    let at1 = q.eval_rational(&rat(1, 1));
    ensure(at1 == rat(-1, 1), format!("p(1) = {at1}"))?;
    Ok(e("descartes 2, roots (0,inf) 2, (-inf,0) 0, p(1) = -1"))
}

fn criterion_2() -> Check {
    let q = p();
    ensure(is_reciprocal(&q), "not reciprocal")?;
    ensure(is_irreducible_quartic(&q).map_err(|x| x.to_string())?, "not irreducible")?;
    ensure(cyclotomic_divisor(&q).is_none(), "has a cyclotomic divisor")?;
    let width = rat(1, 1_000_000);
    let c = classify_with_width(&q, &width).map_err(|x| x.to_string())?;
    ensure(c.tag == ClassTag::SalemLike, format!("class {}", c.tag))?;
    ensure(c.real_roots.len() == 2, "expected two real roots")?;
    let windows = [(rat(58, 100), rat(581, 1000)), (rat(1722, 1000), rat(17221, 10000))];
    for (iv, (lo, hi)) in c.real_roots.iter().zip(&windows) {
        ensure(iv.width() <= width, format!("width {} too large", iv.width()))?;
        ensure(iv.inside_open(lo, hi), format!("[{}, {}] outside ({lo}, {hi})", iv.lo(), iv.hi()))?;
        let (a, b) = (q.eval_rational(iv.lo()), q.eval_rational(iv.hi()));
        ensure(
            !a.is_zero() && !b.is_zero() && a.signum() != b.signum(),
            format!("no exact sign change on [{}, {}]", iv.lo(), iv.hi()),
        )?;
    }
    Ok(e("reciprocal, irreducible, no cyclotomic factor, SalemLike, roots isolated at 1e-6"))
}

fn criterion_3() -> Check {
    let m = salem();
    let o = orbit(&m, -25, 25).map_err(|x| x.to_string())?;
    ensure(o.elements.len() == 51, "orbit length")?;
    ensure(o.distinct, "orbit has repeated coefficient vectors")?;
    for (i, u) in o.elements.iter().enumerate() {
        ensure(u.on_unit_circle().map_err(|x| x.to_string())?, format!("α^{} off circle", i as i64 - 25))?;
    }
    for w in o.elements.windows(5) {
        let rhs = &(&(&w[3] + &w[2]) + &w[1]) - &w[0];
        ensure(w[4] == rhs, "recurrence fails")?;
    }
    let a5 = power(&m, 5).map_err(|x| x.to_string())?;
    let inv = power(&m, -1).map_err(|x| x.to_string())?;
    ensure(a5 == RingElement::from_i64(&m, &[-1, 0, 2, 2]).unwrap(), format!("α^5 = {a5:?}"))?;
    ensure(inv == RingElement::from_i64(&m, &[1, 1, 1, -1]).unwrap(), format!("α^-1 = {inv:?}"))?;
    Ok(e("51 distinct orbit points on the circle, recurrence holds, spot values match"))
}

fn criterion_4() -> Check {
    let m = salem();
    let emb = CircleEmbedding::new(&m, 0, &rat(1, 1_000_000_000_000)).map_err(|x| x.to_string())?;
    let floor = BigRational::new(1.into(), BigInt::from(10).pow(80));
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut elements: Vec<RingElement> = (0..10_000)
        .map(|_| {
            let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-5..=5)).collect();
            RingElement::from_i64(&m, &c).unwrap()
        })
        .collect();
    // Orbit elements guarantee the positive branch is exercised.
    elements.extend(orbit(&m, -6, 6).map_err(|x| x.to_string())?.elements);
    let one = BigRational::one();
    let (mut on, mut off) = (0usize, 0usize);
    for u in &elements {
        if u.on_unit_circle().map_err(|x| x.to_string())? {
            on += 1;
            ensure(emb.modulus_sq(u).contains(&one), format!("{u:?}: exact yes, interval excludes 1"))?;
        } else {
            off += 1;
            match interval_circle_check(&emb, u, &floor).map_err(|x| x.to_string())? {
                IntervalCircleCheck::ExcludesOne { .. } => {}
                IntervalCircleCheck::ContainsOne { .. } => {
                    return Err(format!("{u:?}: exact no, interval still contains 1"));
                }
            }
        }
    }
    Ok(format!("{} elements agree ({on} on the circle, {off} off)", elements.len()))
}

fn criterion_5() -> Check {
    let limits = Limits::default();
    let mut seen = Vec::new();
    for (mm, expect) in [(3u64, 6usize), (4, 4), (5, 10), (6, 6), (8, 8), (12, 12)] {
        let modulus = RingModulus::new(cyclotomic(mm)).map_err(|x| x.to_string())?;
        let spec = GroupSpec::ring(modulus, 0).map_err(|x| x.to_string())?;
        let degs: Vec<usize> = (1..=3)
            .map(|b| degree_of_origin(&spec, b, &limits))
            .collect::<Result<_, _>>()
            .map_err(|x| x.to_string())?;
        ensure(degs[1] == degs[2], format!("m={mm}: not stable {degs:?}"))?;
        ensure(degs[2] == expect, format!("m={mm}: degree {} != {expect}", degs[2]))?;
        let unit = cyclotomic_unit_degree(mm) as usize;
        ensure(unit == expect, format!("m={mm}: cyclotomic_unit_degree {unit}"))?;
        seen.push(format!("{mm}:{}", degs[2]));
    }
    Ok(format!("stable degrees {}", seen.join(" ")))
}

fn criterion_6() -> Check {
    let spec = GroupSpec::ring(salem(), 0).map_err(|x| x.to_string())?;
    let degs: Vec<usize> = (1..=3)
        .map(|b| degree_of_origin(&spec, b, &Limits::default()))
        .collect::<Result<_, _>>()
        .map_err(|x| x.to_string())?;
    let m = salem();
    let heights: Vec<String> = (-6..=8)
        .map(|k| {
            let u = power(&m, k).unwrap();
            u.coeffs().iter().map(|c| c.abs()).max().unwrap().to_string()
        })
        .collect();
    ensure(
        degs.windows(2).all(|w| w[0] < w[1]),
        format!(
            "not strictly increasing: {degs:?}; heights of α^m for m=-6..8 are [{}]",
            heights.join(", ")
        ),
    )?;
    Ok(format!("degree_of_origin over B=1,2,3: {degs:?}"))
}

type Vec2 = [QuadExtScalar; 2];

fn q(a: BigRational, b: BigRational, d: u64) -> QuadExtScalar {
    QuadExtScalar::new(a, b, d).unwrap()
}

fn dot(u: &Vec2, v: &Vec2) -> QuadExtScalar {
    &(&u[0] * &v[0]) + &(&u[1] * &v[1])
}

fn lin(c1: &QuadExtScalar, v1: &Vec2, c2: &QuadExtScalar, v2: &Vec2) -> Vec2 {
    [&(c1 * &v1[0]) + &(c2 * &v2[0]), &(c1 * &v1[1]) + &(c2 * &v2[1])]
}

/// Rational unit vector from a Pythagorean parametrization.
fn pythagorean(rng: &mut ChaCha8Rng) -> (BigRational, BigRational) {
    loop {
        let (m, k): (i64, i64) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        let den = m * m + k * k;
        if den == 0 {
            continue;
        }
        return (rat(m * m - k * k, den), rat(2 * m * k, den));
    }
}

/// Unit vector of `Q(√D)²`: rational, or a rotation of a fixed irrational unit vector.
fn unit_vector(rng: &mut ChaCha8Rng, d: u64, irrational: bool) -> Vec2 {
    let (c, s) = pythagorean(rng);
    let z = BigRational::zero();
    if !irrational {
        return [q(c, z.clone(), d), q(s, z, d)];
    }
    // (√2/2, √2/2) or (√5/5, 2√5/5)
    let (wx, wy) = if d == 2 { (rat(1, 2), rat(1, 2)) } else { (rat(1, 5), rat(2, 5)) };
    let x = &c * &wx - &s * &wy;
    let y = &s * &wx + &c * &wy;
    [q(z.clone(), x, d), q(z, y, d)]
}

fn check_realization(v: &[Vec2; 3]) -> Result<bool, String> {
    let t = InnerProductTriple::new(dot(&v[1], &v[2]), dot(&v[2], &v[0]), dot(&v[0], &v[1]), 1)
        .map_err(|x| x.to_string())?;
    let g = gram_residual(t.alpha(), t.beta(), t.gamma()).map_err(|x| x.to_string())?;
    ensure(g.is_zero(), format!("gram residual {g} on a planar triple"))?;
    let Ok(c) = reciprocal_coefficients(&t) else {
        return Ok(false);
    };
    let zero = QuadExtScalar::zero();
    let sum = lin(&c[0], &v[0], &c[1], &v[1]);
    let sum = [&sum[0] + &(&c[2] * &v[2][0]), &sum[1] + &(&c[2] * &v[2][1])];
    ensure(sum[0] == zero && sum[1] == zero, "c1 v1 + c2 v2 + c3 v3 != 0")?;
    let (k1, k2) = kappa(&t).map_err(|x| x.to_string())?;
    let v3 = lin(&k1, &v[0], &k2, &v[1]);
    ensure(v3[0] == v[2][0] && v3[1] == v[2][1], "v3 != κ1 v1 + κ2 v2")?;
    Ok(true)
}

fn criterion_7() -> Check {
    let z = BigRational::zero();
    let hand = [
        [q(rat(1, 1), z.clone(), 2), q(z.clone(), z.clone(), 2)],
        [q(rat(3, 5), z.clone(), 2), q(rat(4, 5), z.clone(), 2)],
        [q(z.clone(), rat(1, 2), 2), q(z.clone(), rat(1, 2), 2)],
    ];
    let t = InnerProductTriple::new(dot(&hand[1], &hand[2]), dot(&hand[2], &hand[0]), dot(&hand[0], &hand[1]), 1)
        .map_err(|x| x.to_string())?;
    ensure(t.alpha() == &q(z.clone(), rat(7, 10), 2), "hand α")?;
    ensure(t.beta() == &q(z.clone(), rat(1, 2), 2), "hand β")?;
    ensure(t.gamma() == &q(rat(3, 5), z.clone(), 2), "hand γ")?;
    ensure(check_realization(&hand)?, "hand triple is degenerate")?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut full = 0;
    for i in 0..1000 {
        let d = if i % 2 == 0 { 2 } else { 5 };
        let (i1, i2) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
        let v = [unit_vector(&mut rng, d, i1), unit_vector(&mut rng, d, i2), unit_vector(&mut rng, d, true)];
        if check_realization(&v)? {
            full += 1;
        }
    }
    ensure(full >= 500, format!("only {full} non-degenerate triples"))?;
    Ok(format!("1000 planar triples with zero residual ({full} with reciprocal and κ checks) + hand triple"))
}

fn criterion_8() -> Check {
    let limits = Limits::default();
    let hand = InnerProductTriple::new(
        q(rat(0, 1), rat(7, 10), 2),
        q(rat(0, 1), rat(1, 2), 2),
        QuadExtScalar::rational(rat(3, 5)),
        1,
    )
    .map_err(|x| x.to_string())?;
    let sols = enumerate_solutions(&hand, 50, &limits).map_err(|x| x.to_string())?;
    ensure(sols.all.len() == 6, format!("{} solutions in [-50,50]^3", sols.all.len()))?;
    let r = rank3_report(&hand, &[10, 25, 50], &limits).map_err(|x| x.to_string())?;
    ensure(r.is_stabilized() && r.verdict == "stabilized finite", format!("verdict {}", r.verdict))?;
    let dep = InnerProductTriple::new(
        QuadExtScalar::one(),
        QuadExtScalar::rational(rat(3, 5)),
        QuadExtScalar::rational(rat(3, 5)),
        1,
    )
    .map_err(|x| x.to_string())?;
    let rd = rank3_report(&dep, &[5, 10, 20], &limits).map_err(|x| x.to_string())?;
    ensure(rd.configuration == Configuration::Dependent, "dependent triple not flagged")?;
    let c = rd.counts();
    ensure(c.windows(2).all(|w| w[0] < w[1]), format!("dependent counts not growing: {c:?}"))?;
    Ok(format!("hand triple counts {:?} stabilized; dependent counts {c:?}", r.counts()))
}

fn criterion_9() -> Check {
    let spot = |x, y, z| egyptian_parametrize(x, y, z).map(|p| [p.d, p.r, p.s, p.t]);
    let big = |v: [i64; 4]| v.map(BigInt::from);
    ensure(spot(3, 6, -2).ok() == Some(big([-1, 2, 1, -3])), "(3,6,-2) spot value")?;
    ensure(spot(2, 2, -1).ok() == Some(big([-1, 1, 1, -2])), "(2,2,-1) spot value")?;
    let mut found = 0;
    for x in -30i64..=30 {
        for y in -30i64..=30 {
            for z in -30i64..=30 {
                if x == 0 || y == 0 || z == 0 {
                    continue;
                }
                let sum = rat(1, x) + rat(1, y) + rat(1, z);
                let solves = sum.is_zero();
                ensure(check_square_identity(x, y, z) == solves, format!("square identity at ({x},{y},{z})"))?;
                if solves {
                    found += 1;
                    let p = egyptian_parametrize(x, y, z).map_err(|err| format!("({x},{y},{z}): {err}"))?;
                    ensure((&p.r + &p.s + &p.t).is_zero(), format!("r+s+t != 0 at ({x},{y},{z})"))?;
                    ensure(p.reconstruct() == [x, y, z].map(BigInt::from), format!("({x},{y},{z}) not reproduced"))?;
                }
            }
        }
    }
    ensure(found > 0, "no solutions found")?;
    Ok(format!("{found} solutions in [-30,30]^3 reproduced; square identity agrees on the box"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

fn criterion_10() -> Check {
    let zero3 = [rat(0, 1), rat(0, 1), rat(0, 1)];
    let spot = build_case_polynomials(&[1, 1, 1].map(BigInt::from), &zero3).map_err(|x| x.to_string())?;
    ensure(spot.p1 == RatPolynomial::from_i64(&[1, 0, -3, 2]), format!("spot p1 = {}", spot.p1))?;
    ensure(spot.p2 == RatPolynomial::from_i64(&[0, 3, -3]), format!("spot p2 = {}", spot.p2))?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let abc = loop {
            let v: [i64; 3] = [0; 3].map(|_| rng.gen_range(-6..=6));
            if v.iter().any(|&c| c != 0) {
                break v.map(BigInt::from);
            }
        };
        let offset = [(); 3].map(|_| random_rational(&mut rng));
        let cp = build_case_polynomials(&abc, &offset).map_err(|x| x.to_string())?;
        let two = RatPolynomial::from_i64(&[2]);
        ensure((&(&two * &cp.p2) + &cp.p1.derivative()).is_zero(), "2 p2 + p1' != 0")?;
        for _ in 0..10 {
            let l = random_rational(&mut rng);
            let at = |i: usize| QuadExtScalar::rational(&l * BigRational::from_integer(abc[i].clone()) + &offset[i]);
            let direct = gram_residual(&at(0), &at(1), &at(2)).map_err(|x| x.to_string())?;
            ensure(QuadExtScalar::rational(cp.p1.eval(&l)) == direct, format!("p1({l}) != direct substitution"))?;
        }
    }
    Ok(e("100 tuples: 2 p2 + p1' = 0, p1 matches substitution at 1000 points; spot instance matches"))
}

fn divides_square(p1: &RatPolynomial, rho: &BigRational) -> Result<bool, String> {
    let lin = RatPolynomial::new(vec![-rho.clone(), BigRational::one()]);
    let (_, rem) = p1.div_rem(&(&lin * &lin)).map_err(|x| x.to_string())?;
    Ok(rem.is_zero())
}

/// Integer vector orthogonal to `d` with all entries nonzero.
fn orthogonal_integer(d: &[BigRational; 3], rng: &mut ChaCha8Rng) -> Option<[BigInt; 3]> {
    for _ in 0..50 {
        let w: [BigRational; 3] = [(); 3].map(|_| rat(rng.gen_range(-5..=5), 1));
        let c = [
            &d[1] * &w[2] - &d[2] * &w[1],
            &d[2] * &w[0] - &d[0] * &w[2],
            &d[0] * &w[1] - &d[1] * &w[0],
        ];
        if c.iter().any(Zero::is_zero) {
            continue;
        }
        let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = c.map(|x| (x * BigRational::from_integer(l.clone())).to_integer());
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        return Some(ints.map(|x| x / &g));
    }
    None
}

fn criterion_11() -> Check {
    let example = RatPolynomial::from_i64(&[-20, 64, -57, 9]);
    let r = rational_double_root(&example).map_err(|x| x.to_string())?;
    ensure(r == Some(rat(2, 3)), format!("double root {r:?}"))?;
    ensure(divides_square(&example, &rat(2, 3))?, "(λ-2/3)² does not divide")?;

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // k(λ-ρ)²(λ-σ)
    for _ in 0..50 {
        let (k, rho, sigma) = (rat(rng.gen_range(1..=7), rng.gen_range(1..=5)), random_rational(&mut rng), random_rational(&mut rng));
        let lin = |c: &BigRational| RatPolynomial::new(vec![-c.clone(), BigRational::one()]);
        let cubic = &(&(&lin(&rho) * &lin(&rho)) * &lin(&sigma)) * &RatPolynomial::constant(k);
        let got = rational_double_root(&cubic).map_err(|x| x.to_string())?;
        ensure(got.as_ref() == Some(&rho), format!("expected {rho}, got {got:?}"))?;
        ensure(divides_square(&cubic, &rho)?, "square does not divide")?;
    }
    // p1 from a planar rational triple, with (a,b,c) on the tangent plane:
    // p1(ρ) = 0 and p1'(ρ) = -2 p2(ρ) = 0.
    let mut built = 0;
    for _ in 0..200 {
        let v: Vec<(BigRational, BigRational)> = (0..3).map(|_| pythagorean(&mut rng)).collect();
        let ip = |i: usize, j: usize| &v[i].0 * &v[j].0 + &v[i].1 * &v[j].1;
        let (al, be, ga) = (ip(1, 2), ip(2, 0), ip(0, 1));
        let den = [&al - &be * &ga, &be - &al * &ga, &ga - &al * &be];
        if den.iter().any(Zero::is_zero) {
            continue;
        }
        let Some(abc) = orthogonal_integer(&den, &mut rng) else { continue };
        let rho = random_rational(&mut rng);
        let star = [al, be, ga];
        let offset: [BigRational; 3] =
            [0, 1, 2].map(|i| &star[i] - &rho * BigRational::from_integer(abc[i].clone()));
        let cp = build_case_polynomials(&abc, &offset).map_err(|x| x.to_string())?;
        let got = rational_double_root(&cp.p1).map_err(|x| x.to_string())?;
        let Some(root) = got else {
            return Err(format!("no repeated root for abc {abc:?}, ρ = {rho}"));
        };
        ensure(divides_square(&cp.p1, &root)?, format!("(λ-{root})² does not divide p1"))?;
        ensure(root == rho, format!("repeated root {root}, planted {rho}"))?;
        built += 1;
    }
    ensure(built >= 50, format!("only {built} constructed p1 instances"))?;
    Ok(format!("9λ³-57λ²+64λ-20 -> 2/3; 50 factored cubics and {built} constructed p1 instances"))
}

fn run_scan() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_circle-orbit"))
        .args(["scan", "--bound", "3"])
        .output()
        .map_err(|x| x.to_string())?;
    ensure(out.status.success(), format!("scan exited with {}", out.status))?;
    Ok(out.stdout)
}

fn criterion_12() -> Check {
    let limits = Limits::default();
    let a = cmd_scan(3, &limits).map_err(|x| x.to_string())?;
    let b = cmd_scan(3, &limits).map_err(|x| x.to_string())?;
    ensure(a == b, "cmd_scan output differs between runs")?;
    let (x, y) = (run_scan()?, run_scan()?);
    ensure(x == y, "binary scan output differs between runs")?;
    ensure(x == a.as_bytes(), "binary and library scans differ")?;
    let mut rdr = csv::Reader::from_reader(a.as_bytes());
    let mut classes = std::collections::HashMap::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|x| x.to_string())?;
        classes.insert((rec[0].to_string(), rec[1].to_string()), rec[3].to_string());
    }
    for (ab, expect) in [(("-1", "-1"), "SalemLike"), (("0", "-1"), "Cyclotomic(12)"), (("0", "2"), "Reducible")] {
        let got = classes.get(&(ab.0.to_string(), ab.1.to_string()));
        ensure(got.map(String::as_str) == Some(expect), format!("{ab:?}: {got:?}, want {expect}"))?;
    }
    Ok(format!("{} rows byte-identical across runs; spot classes match", classes.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("sign analysis of p", criterion_1),
        ("structure of p", criterion_2),
        ("circle orbit", criterion_3),
        ("exact circle test vs intervals", criterion_4),
        ("cyclotomic degrees", criterion_5),
        ("unbounded degree witness", criterion_6),
        ("gram identity", criterion_7),
        ("rank-3 finiteness", criterion_8),
        ("egyptian parametrization", criterion_9),
        ("derivative identity", criterion_10),
        ("double-root rationality", criterion_11),
        ("scan determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
