use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::{
    build_case_polynomials, case1_system, case3_offset, enumerate_solutions, gram_residual,
    reciprocal_coefficients, solve_abc, solve_case1, span_classify, CasePolynomials,
    InnerProductTriple, SpanCase,
};
use crate::error::{Error, Result};
use crate::exact::{format_rational, rational_double_root};
use crate::limits::Limits;

/// Which regime of the finiteness argument the triple falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Configuration {
    /// Irrational inner products, all `|·| < 1`, nonzero denominators.
    Independent,
    /// Some `|·| ≥ 1` or a vanishing denominator: two vectors are parallel.
    Dependent,
    /// All inner products rational: the group has rank below three.
    RationalDegenerate,
}

impl Configuration {
    pub fn of(t: &InnerProductTriple) -> Self {
        let bounded = [t.alpha(), t.beta(), t.gamma()].iter().all(|s| s.abs_lt_one());
        if !bounded || reciprocal_coefficients(t).is_err() {
            Configuration::Dependent
        } else if t.is_rational() {
            Configuration::RationalDegenerate
        } else {
            Configuration::Independent
        }
    }

    fn label(self) -> &'static str {
        match self {
            Configuration::Independent => "independent configuration",
            Configuration::Dependent => "dependent configuration",
            Configuration::RationalDegenerate => "rational/degenerate configuration",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    #[serde(rename = "B")]
    pub bound: u64,
    pub count: usize,
    pub nonzero_count: usize,
    pub case: SpanCase,
    pub span_rank: usize,
}

#[derive(Clone, Debug)]
pub struct Rank3Report {
    pub triple: InnerProductTriple,
    pub configuration: Configuration,
    pub steps: Vec<StepReport>,
    pub abc: Option<[BigInt; 3]>,
    pub polynomials: Option<CasePolynomials>,
    pub double_root: Option<BigRational>,
    /// Inner products recovered from three independent rows (span case 1).
    pub case1_solution: Option<[BigRational; 3]>,
    pub notes: Vec<String>,
    pub verdict: String,
}

impl Rank3Report {
    pub fn counts(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.count).collect()
    }

    pub fn is_stabilized(&self) -> bool {
        let c = self.counts();
        c.len() >= 2 && c[c.len() - 1] == c[c.len() - 2]
    }
}

impl Serialize for Rank3Report {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let poly = |f: fn(&CasePolynomials) -> &crate::exact::RatPolynomial| {
            self.polynomials.as_ref().map(|p| serde_json::to_value(f(p)).expect("polynomial json"))
        };
        serde_json::json!({
            "triple": self.triple,
            "n": self.triple.n(),
            "configuration": self.configuration,
            "schedule": self.steps.iter().map(|s| s.bound).collect::<Vec<_>>(),
            "counts": self.counts(),
            "nonzero_counts": self.steps.iter().map(|s| s.nonzero_count).collect::<Vec<_>>(),
            "cases": self.steps.iter().map(|s| s.case).collect::<Vec<_>>(),
            "case": self.steps.last().map(|s| s.case),
            "abc": self.abc.as_ref().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            "offset": self.polynomials.as_ref().map(|p| p.offset.iter().map(format_rational).collect::<Vec<_>>()),
            "p1": poly(|p| &p.p1),
            "p2": poly(|p| &p.p2),
            "double_root": self.double_root.as_ref().map(format_rational),
            "case1_solution": self.case1_solution.as_ref().map(|v| v.iter().map(format_rational).collect::<Vec<_>>()),
            "notes": self.notes,
            "verdict": self.verdict,
        })
        .serialize(s)
    }
}

/// Enumerates solutions over a strictly increasing schedule of bounds and
/// runs the case analysis on the largest box.
///
/// This is an empirical stabilization check: it does not certify that no
/// solutions exist beyond the last bound.
pub fn rank3_report(t: &InnerProductTriple, schedule: &[u64], limits: &Limits) -> Result<Rank3Report> {
    if schedule.is_empty() {
        return Err(Error::invalid("schedule must contain at least one bound"));
    }
    if schedule[0] == 0 || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("schedule must be strictly increasing positive bounds"));
    }
    if !gram_residual(t.alpha(), t.beta(), t.gamma())?.is_zero() {
        return Err(Error::invalid(
            "Gram residual 1 + 2αβγ - α² - β² - γ² is nonzero: the vectors are not coplanar",
        ));
    }
    let configuration = Configuration::of(t);
    let mut steps = Vec::with_capacity(schedule.len());
    let mut last = None;
    for &b in schedule {
        let sols = enumerate_solutions(t, b, limits)?;
        let span = span_classify(&sols.nonzero)?;
        steps.push(StepReport {
            bound: b,
            count: sols.all.len(),
            nonzero_count: sols.nonzero.len(),
            case: span.case,
            span_rank: span.rank,
        });
        last = Some((sols, span));
    }
    let (sols, span) = last.expect("nonempty schedule");

    let mut notes = Vec::new();
    let mut abc = None;
    let mut polynomials = None;
    let mut double_root = None;
    let mut case1_solution = None;
    match span.case {
        SpanCase::Case3 => {
            let v = solve_abc(&sols.nonzero)?;
            match case3_offset(&sols.nonzero, t.n())? {
                Some(offset) => {
                    let cp = build_case_polynomials(&v, &offset)?;
                    if cp.p1.degree() == Some(3) {
                        double_root = rational_double_root(&cp.p1)?;
                    } else {
                        notes.push("p1 has degree below 3 (abc = 0): no double-root analysis".into());
                    }
                    polynomials = Some(cp);
                }
                None => {
                    return Err(Error::Invariant(
                        "the linear system of the nonzero solutions is inconsistent".into(),
                    ))
                }
            }
            abc = Some(v);
        }
        SpanCase::Case1 => {
            let (rows, rhs) = case1_system(&span.basis, t.n())?;
            let sol = solve_case1(&rows, &rhs)?;
            let matches = [t.alpha(), t.beta(), t.gamma()]
                .iter()
                .zip(&sol)
                .all(|(s, r)| s.is_rational() && s.a() == r);
            if !matches {
                return Err(Error::Invariant(
                    "case-1 solve does not reproduce the inner products".into(),
                ));
            }
            case1_solution = Some(sol);
        }
        SpanCase::Case2 | SpanCase::Empty => {}
    }

    let mut report = Rank3Report {
        triple: t.clone(),
        configuration,
        steps,
        abc,
        polynomials,
        double_root,
        case1_solution,
        notes,
        verdict: String::new(),
    };
    report.verdict = if report.is_stabilized() {
        "stabilized finite".to_string()
    } else if report.steps.len() < 2 {
        "not stabilized (single bound)".to_string()
    } else if configuration == Configuration::Independent {
        "not stabilized (extend the schedule)".to_string()
    } else {
        format!("not stabilized ({})", configuration.label())
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::{qe, qr};
    use super::*;

    fn hand() -> InnerProductTriple {
        InnerProductTriple::new(qe((0, 1), (7, 10), 2), qe((0, 1), (1, 2), 2), qr(3, 5), 1).unwrap()
    }

    #[test]
    fn hand_triple_stabilizes() {
        let r = rank3_report(&hand(), &[10, 25, 50], &Limits::default()).unwrap();
        assert_eq!(r.counts(), vec![6, 6, 6]);
        assert_eq!(r.verdict, "stabilized finite");
        assert_eq!(r.configuration, Configuration::Independent);
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["case"], "Empty");
        assert_eq!(j["n"], 1);
    }

    #[test]
    fn dependent_triple_grows() {
        let t = InnerProductTriple::new(qr(1, 1), qr(3, 5), qr(3, 5), 1).unwrap();
        let r = rank3_report(&t, &[5, 10, 20], &Limits::default()).unwrap();
        let c = r.counts();
        assert!(c[0] < c[1] && c[1] < c[2], "{c:?}");
        assert_eq!(r.verdict, "not stabilized (dependent configuration)");
    }

    #[test]
    fn equilateral_is_rational_degenerate() {
        let t = InnerProductTriple::new(qr(-1, 2), qr(-1, 2), qr(-1, 2), 1).unwrap();
        let r = rank3_report(&t, &[4, 8, 16], &Limits::default()).unwrap();
        let c = r.counts();
        assert!(c[0] < c[1] && c[1] < c[2]);
        assert_eq!(r.configuration, Configuration::RationalDegenerate);
        assert!(r.verdict.contains("rational/degenerate"));
        assert!(r.case1_solution.is_some());
    }

    #[test]
    fn bad_inputs() {
        let l = Limits::default();
        assert!(rank3_report(&hand(), &[], &l).is_err());
        assert!(rank3_report(&hand(), &[5, 5], &l).is_err());
        let off = InnerProductTriple::new(qr(0, 1), qr(0, 1), qr(0, 1), 1).unwrap();
        assert!(matches!(rank3_report(&off, &[2], &l), Err(Error::InvalidInput(_))));
    }
}
