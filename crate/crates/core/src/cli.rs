//! The `circle-orbit` command-line tool.
//!
//! Every command writes one deterministic document (JSON, DOT, SVG or CSV)
//! to `--out` or stdout. Settings come from flags, then an optional JSON
//! config file, then `CIRCLE_ORBIT_CAP` for the cap.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{
    descartes_sign_changes, format_rational, parse_bigint, parse_rational, rational_double_root,
    real_root_count, Endpoint, IntPolynomial,
};
use crate::geometry::{self, GroupSpec};
use crate::limits::{cap_from_env, Limits};
use crate::polyclass::{self, cyclotomic_divisor, Irreducibility};
use crate::quartic_ring::{orbit, RingModulus};
use crate::rank3::{self, InnerProductTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Svg,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "circle-orbit", version, about = "Exact unit-circle points of finitely generated plane groups")]
pub struct Cli {
    /// JSON file with default settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Polynomial, lowest degree first: `1,-1,-1,-1,1`, a JSON array, or a file holding one.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Inner-product triple: inline JSON object or a file holding one.
    #[arg(long, global = true)]
    pub triple: Option<String>,
    /// Coefficient box half-width B.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Increasing bounds, comma separated.
    #[arg(long, global = true)]
    pub schedule: Option<String>,
    /// Enclosure width: a rational `1/1000000` or `1e-9`.
    #[arg(long, global = true)]
    pub precision: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest box that may be enumerated.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Which circle root of the modulus places the group in the plane.
    #[arg(long, global = true)]
    pub root: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a polynomial: signs, reciprocity, irreducibility, roots.
    Analyze,
    /// Powers α^m of a root of the modulus and their circle verdicts.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        m_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m_max: Option<i64>,
    },
    /// Unit-distance graph on the coefficient box.
    Graph,
    /// Coefficient vectors in the box lying on the unit circle.
    CirclePoints,
    /// Solution counts and case analysis of an inner-product triple.
    Rank3,
    /// Classify every z⁴+az³+bz²+az+1 with |a|, |b| ≤ bound.
    Scan,
    /// Parametrize a solution of 1/x+1/y+1/z = 0, or all of them in a box.
    Egyptian {
        #[arg(num_args = 0..=3, allow_negative_numbers = true)]
        point: Vec<i64>,
    },
    /// p₁ and p₂ for (α,β,γ) = λ(a,b,c) + (α₀,β₀,γ₀).
    CasePolys {
        /// `a,b,c`
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
        /// `α₀,β₀,γ₀` as rationals; defaults to zero.
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<String>,
    },
}

/// Optional settings file. Same names as the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub poly: Option<serde_json::Value>,
    pub triple: Option<serde_json::Value>,
    pub bound: Option<u64>,
    pub schedule: Option<Vec<u64>>,
    pub precision: Option<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub cap: Option<u128>,
    pub workers: Option<usize>,
    pub root: Option<usize>,
}

/// Settings after merging flags over the config file.
#[derive(Debug)]
pub struct RunConfig {
    pub poly: Option<IntPolynomial>,
    pub triple: Option<InnerProductTriple>,
    pub bound: Option<u64>,
    pub schedule: Option<Vec<u64>>,
    pub precision: Option<BigRational>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub limits: Limits,
    pub root: usize,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn poly_from_json(v: &serde_json::Value) -> Result<IntPolynomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid("polynomial must be a JSON array of coefficients"))?;
    let coeffs = arr
        .iter()
        .map(|c| match c {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::invalid(format!("coefficient {n} is not an integer"))),
            serde_json::Value::String(s) => parse_bigint(s),
            other => Err(Error::invalid(format!("coefficient {other} is not an integer"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    Ok(p)
}

/// `1,-1,-1,-1,1`, `[1,-1,-1,-1,1]`, or a path to a JSON file.
pub fn parse_poly(s: &str) -> Result<IntPolynomial> {
    let t = s.trim();
    if t.starts_with('[') {
        return poly_from_json(&serde_json::from_str(t)?);
    }
    let looks_inline = t.chars().all(|c| c.is_ascii_digit() || " ,+-".contains(c));
    if !looks_inline {
        let text = read_file(Path::new(t))?;
        return poly_from_json(&serde_json::from_str(&text)?);
    }
    let coeffs = t
        .split(',')
        .map(|c| parse_bigint(c.trim()))
        .collect::<Result<Vec<_>>>()?;
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    Ok(p)
}

/// Inline JSON object or a path to one.
pub fn parse_triple(s: &str) -> Result<InnerProductTriple> {
    let t = s.trim();
    let text = if t.starts_with('{') { t.to_string() } else { read_file(Path::new(t))? };
    InnerProductTriple::from_json(&serde_json::from_str(&text)?)
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| Error::invalid(format!("{what}: cannot read {p:?}")))
        })
        .collect()
}

/// `n/d`, an integer, a decimal like `0.001`, or `1e-9`. Must be positive.
pub fn parse_precision(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (
            &t[..i],
            t[i + 1..]
                .parse::<i32>()
                .map_err(|_| Error::invalid(format!("precision {t:?} has a bad exponent")))?,
        ),
        None => (t, 0),
    };
    let base = if let Some((int, frac)) = mantissa.split_once('.') {
        let digits = format!("{int}{frac}");
        let num = parse_bigint(if digits.is_empty() { "0" } else { &digits })?;
        BigRational::new(num, BigInt::from(10).pow(frac.len() as u32))
    } else {
        parse_rational(mantissa)?
    };
    let ten = BigRational::from_integer(10.into());
    let scale = if exp >= 0 {
        num_traits::pow(ten, exp as usize)
    } else {
        BigRational::one() / num_traits::pow(ten, exp.unsigned_abs() as usize)
    };
    let w = base * scale;
    if !w.is_positive() {
        return Err(Error::invalid(format!("precision {t:?} must be positive")));
    }
    Ok(w)
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(p) => serde_json::from_str::<ConfigFile>(&read_file(p)?)?,
            None => ConfigFile::default(),
        };
        let poly = match (&cli.poly, &file.poly) {
            (Some(s), _) => Some(parse_poly(s)?),
            (None, Some(serde_json::Value::String(s))) => Some(parse_poly(s)?),
            (None, Some(v)) => Some(poly_from_json(v)?),
            (None, None) => None,
        };
        let triple = match (&cli.triple, &file.triple) {
            (Some(s), _) => Some(parse_triple(s)?),
            (None, Some(serde_json::Value::String(s))) => Some(parse_triple(s)?),
            (None, Some(v)) => Some(InnerProductTriple::from_json(v)?),
            (None, None) => None,
        };
        let schedule = match &cli.schedule {
            Some(s) => Some(parse_list::<u64>(s, "schedule")?),
            None => file.schedule.clone(),
        };
        let precision = match cli.precision.as_ref().or(file.precision.as_ref()) {
            Some(s) => Some(parse_precision(s)?),
            None => None,
        };
        let cap = match cli.cap.or(file.cap) {
            Some(c) => c,
            None => cap_from_env()?,
        };
        let workers = cli.workers.or(file.workers);
        if workers == Some(0) {
            return Err(Error::invalid("--workers must be positive"));
        }
        Ok(RunConfig {
            poly,
            triple,
            bound: cli.bound.or(file.bound),
            schedule,
            precision,
            format: cli.format.or(file.format),
            out: cli.out.clone().or(file.out),
            limits: Limits { cap, workers },
            root: cli.root.or(file.root).unwrap_or(0),
        })
    }

    fn poly(&self) -> Result<&IntPolynomial> {
        self.poly.as_ref().ok_or_else(|| Error::invalid("this command needs --poly"))
    }

    fn triple(&self) -> Result<&InnerProductTriple> {
        self.triple.as_ref().ok_or_else(|| Error::invalid("this command needs --triple"))
    }

    fn bound(&self) -> Result<u64> {
        self.bound.ok_or_else(|| Error::invalid("this command needs --bound"))
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            return Err(Error::invalid(format!("format {f:?} is not available for this command")));
        }
        Ok(f)
    }

    fn precision_or(&self, default: BigRational) -> BigRational {
        self.precision.clone().unwrap_or(default)
    }

    fn spec(&self) -> Result<GroupSpec> {
        match (&self.poly, &self.triple) {
            (Some(_), Some(_)) => Err(Error::invalid("give either --poly or --triple, not both")),
            (Some(q), None) => GroupSpec::ring(RingModulus::new(q.clone())?, self.root),
            (None, Some(t)) => Ok(GroupSpec::Triple(t.clone())),
            (None, None) => Err(Error::invalid("this command needs --poly or --triple")),
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn svg_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// Classification report for one polynomial.
pub fn cmd_analyze(q: &IntPolynomial, width: &BigRational) -> Result<serde_json::Value> {
    let c = polyclass::classify_with_width(q, width)?;
    let zero = Endpoint::Finite(BigRational::zero());
    let irreducible = match c.irreducibility {
        Irreducibility::Proven => Some(true),
        Irreducibility::Disproven => Some(false),
        Irreducibility::NotDisproven => None,
    };
    Ok(serde_json::json!({
        "polynomial": q,
        "display": q.to_string(),
        "degree": q.degree(),
        "descartes_sign_changes": descartes_sign_changes(q)?,
        "positive_real_roots": real_root_count(q, &zero, &Endpoint::PosInf)?,
        "negative_real_roots": real_root_count(q, &Endpoint::NegInf, &zero)?,
        "p_at_1": q.eval(&BigInt::one()).to_string(),
        "reciprocal": c.reciprocal,
        "irreducible": irreducible,
        "irreducibility": c.irreducibility,
        "cyclotomic": cyclotomic_divisor(q),
        "class": c.tag.to_string(),
        "precision": format_rational(width),
        "real_roots": c.real_roots,
        "circle_roots": c.circle_roots,
    }))
}

/// `α^m` for `m_min ≤ m ≤ m_max` with circle verdicts.
pub fn cmd_orbit(q: &IntPolynomial, m_min: i64, m_max: i64) -> Result<serde_json::Value> {
    let modulus = RingModulus::new(q.clone())?;
    let o = orbit(&modulus, m_min, m_max)?;
    let mut elements = Vec::with_capacity(o.elements.len());
    for (i, e) in o.elements.iter().enumerate() {
        let v = e.circle_test()?;
        elements.push(serde_json::json!({
            "m": m_min + i as i64,
            "coeffs": e.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "on_unit_circle": v.on_circle,
            "exact": v.exact,
        }));
    }
    Ok(serde_json::json!({
        "modulus": q,
        "m_min": m_min,
        "m_max": m_max,
        "distinct": o.distinct,
        "elements": elements,
    }))
}

/// One row per `z⁴ + az³ + bz² + az + 1`, `|a|, |b| ≤ bound`, ascending
/// `(a, b)`.
pub fn cmd_scan(bound: u64, limits: &Limits) -> Result<String> {
    limits.check_box(bound, 2)?;
    let b = i64::try_from(bound).map_err(|_| Error::invalid("bound too large"))?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::invalid(e.to_string());
    w.write_record([
        "a",
        "b",
        "polynomial",
        "class",
        "irreducibility",
        "real_roots",
        "circle_roots",
        "orbit_distinct",
    ])
    .map_err(csv_err)?;
    for a in -b..=b {
        for bb in -b..=b {
            let q = IntPolynomial::from_i64(&[1, a, bb, a, 1]);
            let c = polyclass::classify(&q)?;
            let modulus = RingModulus::new(q.clone())?;
            let distinct = orbit(&modulus, -25, 25)?.distinct;
            let irr = serde_json::to_value(c.irreducibility)?;
            w.write_record([
                a.to_string(),
                bb.to_string(),
                q.to_string(),
                c.tag.to_string(),
                irr.as_str().unwrap_or_default().to_string(),
                c.real_roots.len().to_string(),
                (2 * c.circle_roots.len()).to_string(),
                distinct.to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

/// Canonical parameters of one solution.
pub fn cmd_egyptian_point(x: i64, y: i64, z: i64) -> Result<serde_json::Value> {
    let p = rank3::egyptian_parametrize(x, y, z)?;
    Ok(serde_json::json!({
        "point": [x, y, z],
        "param": p,
        "square_identity": rank3::check_square_identity(x, y, z),
    }))
}

/// Every solution in `[-B, B]³` with its parameters, checked.
pub fn cmd_egyptian_box(bound: u64, limits: &Limits) -> Result<Vec<(i64, i64, i64, rank3::EgyptianParam)>> {
    limits.check_box(bound, 3)?;
    let b = bound as i64;
    let mut out = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            for z in -b..=b {
                if x == 0 || y == 0 || z == 0 {
                    continue;
                }
                if (y * z + x * z + x * y) != 0 {
                    continue;
                }
                let p = rank3::egyptian_parametrize(x, y, z)?;
                if p.reconstruct() != [x, y, z].map(BigInt::from) {
                    return Err(Error::Invariant(format!("({x}, {y}, {z}) not reproduced")));
                }
                out.push((x, y, z, p));
            }
        }
    }
    Ok(out)
}

pub fn cmd_case_polys(abc: &[BigInt; 3], offset: &[BigRational; 3]) -> Result<serde_json::Value> {
    let cp = rank3::build_case_polynomials(abc, offset)?;
    let double_root = if cp.p1.degree() == Some(3) { rational_double_root(&cp.p1)? } else { None };
    let identity = (&(&cp.p2 + &cp.p2) + &cp.p1.derivative()).is_zero();
    Ok(serde_json::json!({
        "abc": abc.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "offset": offset.iter().map(format_rational).collect::<Vec<_>>(),
        "p1": cp.p1,
        "p2": cp.p2,
        "p1_display": cp.p1.to_string(),
        "p2_display": cp.p2.to_string(),
        "derivative_identity": identity,
        "double_root": double_root.as_ref().map(format_rational),
    }))
}

/// Runs one parsed command and returns the document it produces.
pub fn execute(cli: &Cli) -> Result<(String, Option<PathBuf>)> {
    let cfg = RunConfig::from_cli(cli)?;
    let doc = match &cli.command {
        Command::Analyze => {
            cfg.format(Format::Json, &[Format::Json])?;
            let width = cfg.precision_or(polyclass::default_width());
            pretty(&cmd_analyze(cfg.poly()?, &width)?)
        }
        Command::Orbit { m_min, m_max } => {
            cfg.format(Format::Json, &[Format::Json])?;
            pretty(&cmd_orbit(cfg.poly()?, m_min.unwrap_or(-25), m_max.unwrap_or(25))?)
        }
        Command::Graph => {
            let spec = cfg.spec()?;
            let f = cfg.format(Format::Json, &[Format::Json, Format::Dot, Format::Svg])?;
            let g = geometry::build_graph(&spec, cfg.bound()?, &cfg.limits)?;
            match f {
                Format::Json => geometry::graph_json(&g),
                Format::Dot => geometry::graph_dot(&g),
                _ => geometry::graph_svg(&g, &spec, &cfg.precision_or(svg_width()))?,
            }
        }
        Command::CirclePoints => {
            let spec = cfg.spec()?;
            let f = cfg.format(Format::Json, &[Format::Json, Format::Dot, Format::Svg, Format::Csv])?;
            let p = geometry::point_set(&spec, cfg.bound()?, &cfg.limits)?;
            match f {
                Format::Json => geometry::points_json(&p),
                Format::Dot => geometry::points_dot(&p),
                Format::Csv => geometry::points_csv(&p)?,
                Format::Svg => geometry::points_svg(&p, &spec, &cfg.precision_or(svg_width()))?,
            }
        }
        Command::Rank3 => {
            cfg.format(Format::Json, &[Format::Json])?;
            let schedule = cfg.schedule.clone().unwrap_or_else(|| vec![10, 25, 50]);
            let r = rank3::rank3_report(cfg.triple()?, &schedule, &cfg.limits)?;
            pretty(&serde_json::to_value(&r)?)
        }
        Command::Scan => {
            cfg.format(Format::Csv, &[Format::Csv])?;
            cmd_scan(cfg.bound.unwrap_or(3), &cfg.limits)?
        }
        Command::Egyptian { point } => match point.len() {
            3 => {
                cfg.format(Format::Json, &[Format::Json])?;
                pretty(&cmd_egyptian_point(point[0], point[1], point[2])?)
            }
            0 => {
                let f = cfg.format(Format::Json, &[Format::Json, Format::Csv])?;
                let rows = cmd_egyptian_box(cfg.bound()?, &cfg.limits)?;
                egyptian_doc(&rows, f)?
            }
            _ => return Err(Error::invalid("egyptian takes three coordinates or none")),
        },
        Command::CasePolys { abc, offset } => {
            cfg.format(Format::Json, &[Format::Json])?;
            let abc = parse_list::<i64>(abc, "abc")?;
            if abc.len() != 3 {
                return Err(Error::invalid("--abc needs three integers"));
            }
            let offset = match offset {
                Some(s) => s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<Vec<_>>>()?,
                None => vec![BigRational::zero(); 3],
            };
            if offset.len() != 3 {
                return Err(Error::invalid("--offset needs three rationals"));
            }
            let abc = [abc[0], abc[1], abc[2]].map(BigInt::from);
            let offset = [offset[0].clone(), offset[1].clone(), offset[2].clone()];
            pretty(&cmd_case_polys(&abc, &offset)?)
        }
    };
    Ok((doc, cfg.out))
}

fn egyptian_doc(rows: &[(i64, i64, i64, rank3::EgyptianParam)], f: Format) -> Result<String> {
    if f == Format::Json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .map(|(x, y, z, p)| serde_json::json!({"point": [x, y, z], "param": p}))
            .collect();
        return Ok(pretty(&serde_json::json!({"count": rows.len(), "solutions": items})));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let e = |e: csv::Error| Error::invalid(e.to_string());
    w.write_record(["x", "y", "z", "d", "r", "s", "t"]).map_err(e)?;
    for (x, y, z, p) in rows {
        w.write_record([
            x.to_string(),
            y.to_string(),
            z.to_string(),
            p.d.to_string(),
            p.r.to_string(),
            p.s.to_string(),
            p.t.to_string(),
        ])
        .map_err(e)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

/// Parses arguments, runs, writes output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = execute(&cli).and_then(|(doc, out)| geometry::write_output(out.as_deref(), &doc));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
