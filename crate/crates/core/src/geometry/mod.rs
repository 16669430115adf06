//! Finitely generated subgroups of the plane, their points on the unit
//! circle inside coefficient boxes, and the unit-distance graphs they span.

mod export;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::polyclass::{circle_embedding, Irreducibility};
use crate::quartic_ring::{power, CircleEmbedding, RingElement, RingModulus};
use crate::rank3::{self, InnerProductTriple, QuadExtScalar};

pub use export::{
    graph_dot, graph_json, graph_svg, points_csv, points_dot, points_json, points_svg, write_output,
};

/// `Z[α]` with generators `1, α, …, α^{k-1}`, placed in the plane by sending
/// `α` to its `root_index`-th circle root (upper half-plane, ascending real part).
#[derive(Clone, Debug)]
pub struct RingSpec {
    modulus: Arc<RingModulus>,
    root_index: usize,
}

impl RingSpec {
    pub fn new(modulus: Arc<RingModulus>, root_index: usize) -> Result<Self> {
        if !modulus.has_conjugation() {
            return Err(Error::InvalidModulus(format!(
                "{} is not reciprocal: no conjugation α ↦ α⁻¹",
                modulus.q()
            )));
        }
        let roots = circle_embedding(modulus.q(), &BigRational::new(1.into(), 1000.into()))?;
        if roots.is_empty() {
            return Err(Error::InvalidModulus(format!("{} has no root on the unit circle", modulus.q())));
        }
        if root_index >= roots.len() {
            return Err(Error::invalid(format!(
                "circle root {root_index} requested, {} has {}",
                modulus.q(),
                roots.len()
            )));
        }
        Ok(RingSpec { modulus, root_index })
    }

    pub fn modulus(&self) -> &Arc<RingModulus> {
        &self.modulus
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn embedding(&self, width: &BigRational) -> Result<CircleEmbedding> {
        CircleEmbedding::new(&self.modulus, self.root_index, width)
    }

    /// Distinct coefficient vectors may coincide as points when the
    /// modulus is reducible.
    pub fn duplicates_possible(&self) -> bool {
        self.modulus.irreducibility() == Irreducibility::Disproven
    }
}

/// A finitely generated additive subgroup of the plane.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Ring(RingSpec),
    /// `⟨v₁, v₂, v₃⟩` given by inner products; circle of radius `n`.
    Triple(InnerProductTriple),
}

impl GroupSpec {
    pub fn ring(modulus: Arc<RingModulus>, root_index: usize) -> Result<Self> {
        Ok(GroupSpec::Ring(RingSpec::new(modulus, root_index)?))
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        match self {
            GroupSpec::Ring(r) => r.modulus.degree(),
            GroupSpec::Triple(_) => 3,
        }
    }

    pub fn duplicates_possible(&self) -> bool {
        match self {
            GroupSpec::Ring(r) => r.duplicates_possible(),
            GroupSpec::Triple(_) => false,
        }
    }

    /// Exact test: is the group element with these coefficients on the circle?
    pub fn is_circle_point(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim() {
            return Err(Error::invalid(format!("expected {} coefficients, got {}", self.dim(), v.len())));
        }
        match self {
            GroupSpec::Ring(r) => RingElement::from_i64(&r.modulus, v)?.on_unit_circle(),
            GroupSpec::Triple(t) => {
                let target = QuadExtScalar::from_int(t.n() * t.n());
                Ok(rank3::q_eval(t, v[0], v[1], v[2]) == target)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            GroupSpec::Ring(r) => serde_json::json!({
                "kind": "ring",
                "q": r.modulus.q(),
                "root_index": r.root_index,
                "duplicates_possible": r.duplicates_possible(),
            }),
            GroupSpec::Triple(t) => serde_json::json!({
                "kind": "triple",
                "triple": t,
            }),
        }
    }
}

/// `|u|² = 1` tested through `u·σ(u)` with `i128` arithmetic; `None` on
/// overflow.
struct FastNorm {
    k: usize,
    /// `sigma[j]` = coefficients of `α^{-j}`.
    sigma: Vec<Vec<i128>>,
    /// `table[t]` = coefficients of `α^t`, `t < 2k - 1`.
    table: Vec<Vec<i128>>,
}

impl FastNorm {
    fn new(m: &Arc<RingModulus>) -> Result<Option<Self>> {
        let k = m.degree();
        let conv = |e: RingElement| -> Option<Vec<i128>> { e.coeffs().iter().map(|c| c.to_i128()).collect() };
        let mut sigma = Vec::with_capacity(k);
        for j in 0..k {
            match conv(power(m, -(j as i64))?) {
                Some(v) => sigma.push(v),
                None => return Ok(None),
            }
        }
        let mut table = Vec::with_capacity(2 * k - 1);
        for t in 0..(2 * k - 1) {
            match conv(power(m, t as i64)?) {
                Some(v) => table.push(v),
                None => return Ok(None),
            }
        }
        Ok(Some(FastNorm { k, sigma, table }))
    }

    fn norm_is_one(&self, u: &[i64]) -> Option<bool> {
        let k = self.k;
        let mut s = vec![0i128; k];
        for (j, &uj) in u.iter().enumerate() {
            if uj == 0 {
                continue;
            }
            for (i, sj) in self.sigma[j].iter().enumerate() {
                s[i] = s[i].checked_add((uj as i128).checked_mul(*sj)?)?;
            }
        }
        let mut raw = vec![0i128; 2 * k - 1];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, sj) in s.iter().enumerate() {
                raw[i + j] = raw[i + j].checked_add((ui as i128).checked_mul(*sj)?)?;
            }
        }
        let mut out = vec![0i128; k];
        for (t, &rt) in raw.iter().enumerate() {
            if rt == 0 {
                continue;
            }
            for (i, c) in self.table[t].iter().enumerate() {
                out[i] = out[i].checked_add(rt.checked_mul(*c)?)?;
            }
        }
        Some(out[0] == 1 && out[1..].iter().all(|&c| c == 0))
    }
}

/// Box index helpers for `[-B, B]^k` in lexicographic order.
struct BoxShape {
    bound: i64,
    dim: usize,
    side: usize,
}

impl BoxShape {
    fn new(bound: u64, dim: usize) -> Result<Self> {
        let b = i64::try_from(bound).map_err(|_| Error::invalid("bound too large"))?;
        Ok(BoxShape { bound: b, dim, side: (2 * bound + 1) as usize })
    }

    fn len(&self) -> usize {
        self.side.pow(self.dim as u32)
    }

    fn vector(&self, mut idx: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.dim];
        for slot in v.iter_mut().rev() {
            *slot = (idx % self.side) as i64 - self.bound;
            idx /= self.side;
        }
        v
    }

    fn index(&self, v: &[i64]) -> Option<usize> {
        let mut idx = 0usize;
        for &c in v {
            if c < -self.bound || c > self.bound {
                return None;
            }
            idx = idx * self.side + (c + self.bound) as usize;
        }
        Some(idx)
    }
}

/// Every coefficient vector in `[-B, B]^k` whose group element lies on the
/// circle, in lexicographic order. Exact.
pub fn enumerate_circle_points(spec: &GroupSpec, bound: u64, limits: &Limits) -> Result<Vec<Vec<i64>>> {
    limits.check_box(bound, spec.dim())?;
    match spec {
        GroupSpec::Triple(t) => Ok(rank3::enumerate_solutions(t, bound, limits)?
            .all
            .into_iter()
            .map(|v| v.to_vec())
            .collect()),
        GroupSpec::Ring(r) => {
            let shape = BoxShape::new(bound, spec.dim())?;
            let fast = FastNorm::new(&r.modulus)?;
            let per_slab = shape.len() / shape.side;
            let test = |v: &[i64]| -> Result<bool> {
                match fast.as_ref().and_then(|f| f.norm_is_one(v)) {
                    Some(b) => Ok(b),
                    None => spec.is_circle_point(v),
                }
            };
            let slabs: Vec<Result<Vec<Vec<i64>>>> = limits.install(|| {
                (0..shape.side)
                    .into_par_iter()
                    .map(|s| {
                        let mut out = Vec::new();
                        for idx in s * per_slab..(s + 1) * per_slab {
                            let v = shape.vector(idx);
                            if test(&v)? {
                                out.push(v);
                            }
                        }
                        Ok(out)
                    })
                    .collect()
            })?;
            let mut all = Vec::new();
            for s in slabs {
                all.extend(s?);
            }
            Ok(all)
        }
    }
}

/// Number of circle points in the box: the degree of `0` in the graph on
/// `[-B, B]^k` restricted to neighbours inside the box.
pub fn degree_of_origin(spec: &GroupSpec, bound: u64, limits: &Limits) -> Result<usize> {
    Ok(enumerate_circle_points(spec, bound, limits)?.len())
}

/// Unit-distance graph on the coefficient box `[-B, B]^k`.
#[derive(Clone, Debug)]
pub struct UnitDistanceGraph {
    pub spec: serde_json::Value,
    pub bound: u64,
    /// Lexicographic order; the origin is the middle vertex.
    pub vertices: Vec<Vec<i64>>,
    /// `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
    pub duplicates_possible: bool,
}

impl UnitDistanceGraph {
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &d in &self.degrees {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }

    pub fn origin_index(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn origin_degree(&self) -> usize {
        self.degrees[self.origin_index()]
    }

    pub fn vertex_index(&self, v: &[i64]) -> Option<usize> {
        let dim = self.vertices.first().map_or(0, Vec::len);
        BoxShape::new(self.bound, dim).ok()?.index(v)
    }
}

pub fn unit_distance_count(g: &UnitDistanceGraph) -> usize {
    g.edges.len()
}

/// Graph on `[-B, B]^k`; `u ~ v` iff `u - v` is a circle point. The
/// differences range over `[-2B, 2B]^k`, which is what the cap applies to.
pub fn build_graph(spec: &GroupSpec, bound: u64, limits: &Limits) -> Result<UnitDistanceGraph> {
    let dim = spec.dim();
    limits.check_box(bound, dim)?;
    let shape = BoxShape::new(bound, dim)?;
    let diffs = enumerate_circle_points(spec, 2 * bound, limits)?;
    // Keep one of each ±pair: first nonzero coordinate positive, so the
    // neighbour is lexicographically later.
    let forward: Vec<Vec<i64>> = diffs
        .into_iter()
        .filter(|d| d.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect();
    let vertices: Vec<Vec<i64>> = (0..shape.len()).map(|i| shape.vector(i)).collect();
    let per_vertex: Vec<Vec<usize>> = limits.install(|| {
        vertices
            .par_iter()
            .map(|v| {
                let mut js: Vec<usize> = forward
                    .iter()
                    .filter_map(|d| {
                        let w: Vec<i64> = v.iter().zip(d).map(|(a, b)| a + b).collect();
                        shape.index(&w)
                    })
                    .collect();
                js.sort_unstable();
                js
            })
            .collect()
    })?;
    let mut edges = Vec::new();
    let mut degrees = vec![0usize; vertices.len()];
    for (i, js) in per_vertex.into_iter().enumerate() {
        for j in js {
            if j <= i {
                return Err(Error::Invariant(format!("edge ({i}, {j}) is not forward")));
            }
            degrees[i] += 1;
            degrees[j] += 1;
            edges.push((i, j));
        }
    }
    Ok(UnitDistanceGraph {
        spec: spec.to_json(),
        bound,
        vertices,
        edges,
        degrees,
        duplicates_possible: spec.duplicates_possible(),
    })
}

/// Floating planar position of each coefficient vector; display use only.
pub fn place_points(spec: &GroupSpec, vectors: &[Vec<i64>], width: &BigRational) -> Result<Vec<(f64, f64)>> {
    match spec {
        GroupSpec::Ring(r) => {
            let emb = r.embedding(width)?;
            Ok(vectors
                .iter()
                .map(|v| {
                    let c: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                    emb.embed_coeffs(&c).midpoint_f64()
                })
                .collect())
        }
        GroupSpec::Triple(t) => {
            let gens = triple_realization(t);
            let n = t.n() as f64;
            Ok(vectors
                .iter()
                .map(|v| {
                    let x = v.iter().zip(&gens).map(|(&c, g)| c as f64 * g.0).sum::<f64>();
                    let y = v.iter().zip(&gens).map(|(&c, g)| c as f64 * g.1).sum::<f64>();
                    (x / n, y / n)
                })
                .collect())
        }
    }
}

/// `v₁ = (1, 0)`, `v₂ = (γ, √(1-γ²))`, `v₃ = (β, ±√(1-β²))` with the sign
/// that best matches `(v₂, v₃) = α`.
fn triple_realization(t: &InnerProductTriple) -> [(f64, f64); 3] {
    let (a, b, g) = (t.alpha().to_f64(), t.beta().to_f64(), t.gamma().to_f64());
    let v2 = (g, (1.0 - g * g).max(0.0).sqrt());
    let h = (1.0 - b * b).max(0.0).sqrt();
    let up = (b, h);
    let down = (b, -h);
    let dot = |p: (f64, f64), q: (f64, f64)| p.0 * q.0 + p.1 * q.1;
    let v3 = if (dot(v2, up) - a).abs() <= (dot(v2, down) - a).abs() { up } else { down };
    [(1.0, 0.0), v2, v3]
}

/// Description of a point set used by the exports.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub spec: serde_json::Value,
    pub bound: u64,
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

pub fn point_set(spec: &GroupSpec, bound: u64, limits: &Limits) -> Result<PointSet> {
    Ok(PointSet { spec: spec.to_json(), bound, dim: spec.dim(), points: enumerate_circle_points(spec, bound, limits)? })
}
