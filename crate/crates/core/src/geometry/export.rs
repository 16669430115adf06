use std::fmt::Write as _;
use std::path::Path;

use num_rational::BigRational;

use super::{place_points, GroupSpec, PointSet, UnitDistanceGraph};
use crate::error::{Error, Result};

const CANVAS: f64 = 1000.0;
const CENTER: f64 = 500.0;
const RADIUS: f64 = 400.0;
const DOT: f64 = 3.0;

fn label(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn graph_json(g: &UnitDistanceGraph) -> String {
    let hist: serde_json::Map<String, serde_json::Value> = g
        .degree_histogram()
        .into_iter()
        .map(|(d, c)| (d.to_string(), c.into()))
        .collect();
    pretty(&serde_json::json!({
        "spec": g.spec,
        "B": g.bound,
        "vertices": g.vertices,
        "edges": g.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "degree_histogram": hist,
    }))
}

pub fn graph_dot(g: &UnitDistanceGraph) -> String {
    let mut s = String::from("graph G {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"{}\"];", label(v));
    }
    for (i, j) in &g.edges {
        let _ = writeln!(s, "  {i} -- {j};");
    }
    s.push_str("}\n");
    s
}

pub fn points_json(p: &PointSet) -> String {
    pretty(&serde_json::json!({
        "spec": p.spec,
        "B": p.bound,
        "count": p.points.len(),
        "points": p.points,
    }))
}

pub fn points_dot(p: &PointSet) -> String {
    let mut s = String::from("graph G {\n");
    for (i, v) in p.points.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"{}\"];", label(v));
    }
    s.push_str("}\n");
    s
}

pub fn points_csv(p: &PointSet) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record((0..p.dim).map(|i| format!("c{i}")))
        .map_err(|e| Error::invalid(e.to_string()))?;
    for v in &p.points {
        w.write_record(v.iter().map(i64::to_string))
            .map_err(|e| Error::invalid(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of integers is utf-8"))
}

/// Canvas scale: the unit circle has radius 400 unless some point lies
/// farther out, in which case everything shrinks to fit.
fn svg(positions: &[(f64, f64)], edges: &[(usize, usize)]) -> String {
    let reach = positions
        .iter()
        .map(|(x, y)| x.hypot(*y))
        .fold(1.0f64, f64::max);
    let scale = RADIUS / reach;
    let px = |(x, y): (f64, f64)| (CENTER + scale * x, CENTER - scale * y);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    );
    let _ = writeln!(s, "<rect width=\"{CANVAS}\" height=\"{CANVAS}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{scale:.4}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>"
    );
    for &(i, j) in edges {
        let (x1, y1) = px(positions[i]);
        let (x2, y2) = px(positions[j]);
        let _ = writeln!(
            s,
            "<line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" stroke=\"#336699\" stroke-width=\"0.5\"/>"
        );
    }
    for &p in positions {
        let (x, y) = px(p);
        let _ = writeln!(s, "<circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"{DOT}\" fill=\"#cc3333\"/>");
    }
    s.push_str("</svg>\n");
    s
}

pub fn graph_svg(g: &UnitDistanceGraph, spec: &GroupSpec, width: &BigRational) -> Result<String> {
    let pos = place_points(spec, &g.vertices, width)?;
    Ok(svg(&pos, &g.edges))
}

pub fn points_svg(p: &PointSet, spec: &GroupSpec, width: &BigRational) -> Result<String> {
    let pos = place_points(spec, &p.points, width)?;
    Ok(svg(&pos, &[]))
}

/// Writes to `path`, or to stdout when there is none.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|source| Error::Io { path: p.to_path_buf(), source }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
                .map_err(|source| Error::Io { path: "<stdout>".into(), source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_graph, point_set};
    use super::*;
    use crate::limits::Limits;
    use crate::quartic_ring::RingModulus;

    fn spec(q: &[i64]) -> GroupSpec {
        GroupSpec::ring(RingModulus::from_i64(q).unwrap(), 0).unwrap()
    }

    #[test]
    fn gaussian_dot_has_nine_nodes_twelve_edges() {
        let g = build_graph(&spec(&[1, 0, 1]), 1, &Limits::default()).unwrap();
        let dot = graph_dot(&g);
        assert_eq!(dot.matches("[label=").count(), 9);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("4 [label=\"(0, 0)\"];"));
    }

    #[test]
    fn graph_json_schema() {
        let g = build_graph(&spec(&[1, 0, 1]), 1, &Limits::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&graph_json(&g)).unwrap();
        assert_eq!(v["B"], 1);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
        assert_eq!(v["edges"].as_array().unwrap().len(), 12);
        assert_eq!(v["degree_histogram"]["2"], 4);
        assert_eq!(v["degree_histogram"]["3"], 4);
        assert_eq!(v["degree_histogram"]["4"], 1);
        assert_eq!(v["spec"]["kind"], "ring");
    }

    #[test]
    fn empty_exports_are_valid() {
        let s = spec(&[1, -1, -1, -1, 1]);
        let g = build_graph(&s, 0, &Limits::default()).unwrap();
        assert!(graph_dot(&g).starts_with("graph G {"));
        let p = point_set(&s, 0, &Limits::default()).unwrap();
        assert_eq!(points_dot(&p), "graph G {\n}\n");
        let v: serde_json::Value = serde_json::from_str(&points_json(&p)).unwrap();
        assert_eq!(v["count"], 0);
        let w = BigRational::new(1.into(), 1000.into());
        let svg = points_svg(&p, &s, &w).unwrap();
        assert!(svg.ends_with("</svg>\n") && !svg.contains("r=\"3\""));
        assert_eq!(points_csv(&p).unwrap(), "c0,c1,c2,c3\n");
    }

    #[test]
    fn salem_svg_points_sit_on_the_circle_image() {
        let s = spec(&[1, -1, -1, -1, 1]);
        let p = point_set(&s, 1, &Limits::default()).unwrap();
        let w = BigRational::new(1.into(), 1_000_000_000.into());
        let out = points_svg(&p, &s, &w).unwrap();
        let mut n = 0;
        for line in out.lines().filter(|l| l.contains("r=\"3\"")) {
            let num = |key: &str| -> f64 {
                let start = line.find(key).unwrap() + key.len();
                let rest = &line[start..];
                rest[..rest.find('"').unwrap()].parse().unwrap()
            };
            let (x, y) = (num("cx=\"") - 500.0, num("cy=\"") - 500.0);
            assert!(((x * x + y * y).sqrt() - 400.0).abs() < 1e-3);
            n += 1;
        }
        assert_eq!(n, p.points.len());
        assert_eq!(out, points_svg(&p, &s, &w).unwrap());
    }

    #[test]
    fn csv_header_and_rows() {
        let p = point_set(&spec(&[1, 0, 1]), 1, &Limits::default()).unwrap();
        assert_eq!(points_csv(&p).unwrap(), "c0,c1\n-1,0\n0,-1\n0,1\n1,0\n");
    }

    #[test]
    fn io_errors_carry_the_path() {
        let err = write_output(Some(Path::new("/nonexistent-dir/x.json")), "{}").unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.json"));
    }
}
