//! JSON, DOT and CSV output for pairs, mutation quivers and representations.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::engine::{
    Complements, Engine, Enumeration, ExchangeSequence, ExchangeSequenceRecord, MutationQuiver, Pair, SaturationEntry, Summand,
    Verdict,
};
use crate::quiver::IntMatrix;
use crate::linalg::Rational;
use crate::rep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (json, dot, csv)")),
        }
    }
}

/// Integers as JSON numbers, other rationals as `"p/q"` strings.
pub fn rational_json(r: &Rational) -> Value {
    match r.to_i64() {
        Some(v) => json!(v),
        None => json!(r.to_string()),
    }
}

/// Per-vertex dimensions and per-arrow matrices (rows are target basis
/// vectors).
pub fn representation_json(m: &Representation) -> Value {
    let q = m.quiver();
    let maps: Vec<Value> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mat = m.map(k);
            let rows: Vec<Vec<Value>> = (0..mat.rows()).map(|i| (0..mat.cols()).map(|j| rational_json(mat.get(i, j))).collect()).collect();
            json!({ "arrow": a.label, "source": q.vertex_id(a.source), "target": q.vertex_id(a.target), "matrix": rows })
        })
        .collect();
    json!({ "quiver": q.name(), "dims": m.dims(), "maps": maps })
}

fn vertex_ids(e: &Engine, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| e.quiver().vertex_id(v).to_string()).collect()
}

/// Vertices of the quiver outside the support projectives.
fn support(e: &Engine, p: &Pair) -> Vec<String> {
    let vs: Vec<usize> = (0..e.rank()).filter(|v| !p.projectives.contains(v)).collect();
    vertex_ids(e, &vs)
}

pub fn pair_json(e: &Engine, id: usize, p: &Pair) -> Value {
    let dims: Vec<&Vec<usize>> = p.modules.iter().map(|&m| &e.pool().module(m).dims.0).collect();
    let labels: Vec<&str> = p.modules.iter().map(|&m| e.pool().module(m).label.as_str()).collect();
    json!({
        "id": id,
        "label": e.pair_label(p),
        "summand_dims": dims,
        "loewy": labels,
        "support": support(e, p),
        "support_projectives": vertex_ids(e, &p.projectives),
        "is_tilting": e.is_tilting(p),
    })
}

pub fn enumeration_json(e: &Engine, en: &Enumeration) -> Value {
    let n = e.rank();
    let by_size: Vec<Value> = (0..=n).rev().map(|k| json!({ "modules": k, "count": en.count_with_modules(k) })).collect();
    let pairs: Vec<Value> = en.pairs.iter().enumerate().map(|(i, p)| pair_json(e, i, p)).collect();
    json!({
        "algebra": e.quiver().name(),
        "pool": e.pool().kind(),
        "exhaustive": en.exhaustive,
        "count": en.pairs.len(),
        "by_module_count": by_size,
        "pairs": pairs,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn dims_field(e: &Engine, p: &Pair) -> String {
    p.modules.iter().map(|&m| e.pool().module(m).dims.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn enumeration_csv(e: &Engine, en: &Enumeration) -> String {
    let mut s = String::from("id,modules,summand_dims,support_projectives,is_tilting\n");
    for (i, p) in en.pairs.iter().enumerate() {
        let _ = writeln!(
            s,
            "{i},{},{},{},{}",
            p.modules.len(),
            csv_field(&dims_field(e, p)),
            csv_field(&vertex_ids(e, &p.projectives).join(" ")),
            e.is_tilting(p)
        );
    }
    s
}

fn verdicts(mq: &MutationQuiver, sat: &[SaturationEntry]) -> Vec<Option<Verdict>> {
    let mut v = vec![None; mq.len()];
    for r in sat {
        v[r.vertex] = Some(r.verdict);
    }
    v
}

pub fn graph_json(e: &Engine, mq: &MutationQuiver, sat: &[SaturationEntry]) -> Value {
    let verdict = verdicts(mq, sat);
    let vertices: Vec<Value> = mq
        .vertices
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut v = pair_json(e, i, p);
            v["is_tilting"] = json!(mq.is_tilting[i]);
            v["saturated"] = json!(verdict[i] == Some(Verdict::Saturated));
            v["saturation"] = json!(verdict[i]);
            if !mq.exhaustive {
                v["boundary"] = json!(mq.boundary[i]);
                v["distance"] = json!(mq.distance[i]);
            }
            v
        })
        .collect();
    let edges: Vec<Value> = mq
        .edges
        .iter()
        .map(|ed| {
            json!({
                "from": ed.from,
                "to": ed.to,
                "exchanged": { "removed": e.summand_label(ed.removed), "added": e.summand_label(ed.added) },
            })
        })
        .collect();
    json!({
        "algebra": e.quiver().name(),
        "exhaustive": mq.exhaustive,
        "vertices": vertices,
        "edges": edges,
    })
}

fn summand_loewy(e: &Engine, s: Summand) -> String {
    match s {
        Summand::Module(m) => e.pool().module(m).label.clone(),
        Summand::Projective(v) => format!("P{}", e.quiver().vertex_id(v)),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT with dimension vectors and Loewy labels per vertex. Pairs with
/// support projectives are dashed; non-saturated tilting vertices are red.
pub fn graph_dot(e: &Engine, mq: &MutationQuiver, sat: &[SaturationEntry]) -> String {
    let verdict = verdicts(mq, sat);
    let mut s = format!("digraph \"{}\" {{\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n", dot_escape(e.quiver().name()));
    for (i, p) in mq.vertices.iter().enumerate() {
        let loewy: Vec<String> = p.summands().into_iter().map(|x| summand_loewy(e, x)).collect();
        let label = format!("{}\\n{}", dot_escape(&e.pair_label(p)), dot_escape(&loewy.join(" + ")));
        let mut attrs = vec![format!("label=\"{label}\"")];
        if !p.projectives.is_empty() {
            attrs.push("style=dashed".into());
        }
        if mq.is_tilting[i] && verdict[i] == Some(Verdict::NotSaturated) {
            attrs.push("color=red".into());
            attrs.push("penwidth=2".into());
        }
        if !mq.exhaustive && mq.boundary[i] {
            attrs.push("peripheries=2".into());
        }
        let _ = writeln!(s, "  v{i} [{}];", attrs.join(", "));
    }
    for ed in &mq.edges {
        let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", ed.from, ed.to, dot_escape(&e.summand_label(ed.removed)));
    }
    s.push_str("}\n");
    s
}

/// One row per edge.
pub fn graph_csv(e: &Engine, mq: &MutationQuiver) -> String {
    let mut s = String::from("from,to,from_label,to_label,removed,added\n");
    for ed in &mq.edges {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            ed.from,
            ed.to,
            csv_field(&e.pair_label(&mq.vertices[ed.from])),
            csv_field(&e.pair_label(&mq.vertices[ed.to])),
            csv_field(&e.summand_label(ed.removed)),
            csv_field(&e.summand_label(ed.added))
        );
    }
    s
}

fn module_dims(e: &Engine, m: usize) -> &crate::quiver::DimVector {
    &e.pool().module(m).dims
}

fn multiplicities_json(e: &Engine, ms: &[(usize, usize)]) -> Value {
    ms.iter().map(|&(m, k)| json!({ "dims": module_dims(e, m), "multiplicity": k })).collect()
}

pub fn mutation_json(e: &Engine, from: &Pair, rec: &ExchangeSequenceRecord) -> Value {
    json!({
        "from": pair_json(e, 0, from)["label"],
        "removed": e.summand_label(rec.removed),
        "added": e.summand_label(rec.added),
        "direction": rec.direction,
        "approximated": module_dims(e, rec.approximated),
        "middle": multiplicities_json(e, &rec.middle),
        "cokernel": multiplicities_json(e, &rec.cokernel),
        "result": pair_json(e, 0, &rec.result),
    })
}

pub fn complements_json(e: &Engine, c: &Complements, seq: Option<&ExchangeSequence>) -> Value {
    let sequence = seq.map(|s| {
        json!({
            "x": module_dims(e, s.x),
            "y": module_dims(e, s.y),
            "middle": multiplicities_json(e, &s.middle()),
            "left_minimal": s.left_minimal,
            "right_minimal": s.right_minimal,
            "nonsplit": s.nonsplit,
            "middle_disjoint": s.disjoint,
            "valid": s.is_valid(),
        })
    });
    json!({
        "algebra": e.quiver().name(),
        "almost_complete": c.almost.iter().map(|&m| module_dims(e, m)).collect::<Vec<_>>(),
        "faithful": c.faithful,
        "complements": c.complements.iter().map(|&m| module_dims(e, m)).collect::<Vec<_>>(),
        "bongartz_complement": c.bongartz.map(|m| module_dims(e, m)),
        "exchange_sequence": sequence,
    })
}

pub fn int_matrix_csv(m: &IntMatrix) -> String {
    let mut s = String::new();
    for row in &m.rows {
        let _ = writeln!(s, "{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    }
    s
}

/// Writes to a file, or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::presets;

    #[test]
    fn a2_pentagon_outputs() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let mq = e.mutation_quiver().unwrap();
        let sat = e.saturation_report(&mq).unwrap();
        let v = graph_json(&e, &mq, &sat);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);
        let dot = graph_dot(&e, &mq, &sat);
        assert_eq!(dot.matches(" -> ").count(), 5);
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert_eq!(graph_csv(&e, &mq).lines().count(), 6);
    }

    #[test]
    fn rationals_serialize_as_strings() {
        assert_eq!(rational_json(&Rational::new(3, 1)), json!(3));
        assert_eq!(rational_json(&Rational::new(1, 2)), json!("1/2"));
    }
}
