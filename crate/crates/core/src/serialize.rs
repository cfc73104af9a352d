//! JSON and DOT emission, and JSON reading for modules, verdicts and
//! exchange graphs. Object keys come out sorted, so output is deterministic.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{ExtSide, GpCertificate, GpStatus, GpVerdict};
use crate::linalg::Matrix;
use crate::rep::Representation;
use crate::tautilt::{Edge, ExchangeGraph, RigidPair};

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(format!("malformed JSON: {}", msg.into()))
}

fn entry_text<F: Field>(x: &F) -> String {
    let (n, d) = x.to_fraction();
    if d == BigInt::from(1) {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn parse_entry<F: Field>(v: &Value) -> Result<F> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(bad("matrix entry")),
    };
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad(format!("entry {text}")))?;
    let d: BigInt = d.parse().map_err(|_| bad(format!("entry {text}")))?;
    F::from_fraction(&n, &d).ok_or_else(|| bad(format!("entry {text} is not defined in {}", F::field_name())))
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(entry_text(x))).collect()))
            .collect(),
    )
}

fn matrix_from_json<F: Field>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
    let rs = v.as_array().ok_or_else(|| bad("matrix"))?;
    if rs.len() != rows {
        return Err(bad(format!("matrix has {} rows, expected {rows}", rs.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in rs {
        let r = r.as_array().ok_or_else(|| bad("matrix row"))?;
        if r.len() != cols {
            return Err(bad(format!("matrix row has {} entries, expected {cols}", r.len())));
        }
        for x in r {
            data.push(parse_entry(x)?);
        }
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

/// `{"dims": [...], "label": ..., "arrows": {label: matrix}}`.
pub fn rep_to_json<F: Field>(m: &Representation<F>) -> Value {
    let alg = m.algebra();
    let arrows: serde_json::Map<String, Value> = (0..alg.arrow_count())
        .map(|a| (alg.arrow(a).label.clone(), matrix_to_json(m.arrow_map(a))))
        .collect();
    json!({ "dims": m.dims(), "label": m.label(), "arrows": arrows })
}

/// Reads a module written by [`rep_to_json`]; missing arrows are zero.
pub fn rep_from_json<F: Field>(alg: &Arc<Algebra<F>>, v: &Value) -> Result<Representation<F>> {
    let dims: Vec<usize> = v
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("module needs \"dims\""))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| bad("dimension")))
        .collect::<Result<_>>()?;
    if dims.len() != alg.vertex_count() {
        return Err(bad(format!("{} dims for {} vertices", dims.len(), alg.vertex_count())));
    }
    let arrows = v.get("arrows").and_then(Value::as_object);
    if let Some(obj) = arrows {
        if let Some(k) = obj.keys().find(|k| alg.quiver().arrow_index(k).is_none()) {
            return Err(bad(format!("unknown arrow {k}")));
        }
    }
    let mut maps = Vec::with_capacity(alg.arrow_count());
    for a in 0..alg.arrow_count() {
        let arr = alg.arrow(a);
        let (r, c) = (dims[arr.target], dims[arr.source]);
        maps.push(match arrows.and_then(|o| o.get(&arr.label)) {
            Some(m) => matrix_from_json(m, r, c)?,
            None => Matrix::zeros(r, c),
        });
    }
    Representation::new(alg.clone(), dims, maps)
}

fn certificate_to_json(c: &GpCertificate) -> Value {
    match c {
        GpCertificate::Projective => json!({ "kind": "projective" }),
        GpCertificate::GorensteinDimension(d) => json!({ "kind": "gorenstein-dimension", "d": d }),
        GpCertificate::Periodicity { k, j } => json!({ "kind": "periodicity", "k": k, "j": j }),
        GpCertificate::ExtWitness { degree, side } => json!({
            "kind": "ext-witness",
            "degree": degree,
            "side": match side { ExtSide::Module => "module", ExtSide::Dual => "dual" },
        }),
        GpCertificate::NotReflexive => json!({ "kind": "not-reflexive" }),
        GpCertificate::None => json!({ "kind": "none" }),
    }
}

pub fn verdict_to_json(v: &GpVerdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "bound_used": v.bound_used,
        "certificate": certificate_to_json(&v.certificate),
        "failing_summands": v.failing_summands,
    })
}

pub fn verdict_from_json(v: &Value) -> Result<GpVerdict> {
    let status = match v.get("status").and_then(Value::as_str) {
        Some("CertifiedGP") => GpStatus::CertifiedGP,
        Some("CertifiedNotGP") => GpStatus::CertifiedNotGP,
        Some("VanishesUpToBound") => GpStatus::VanishesUpToBound,
        _ => return Err(bad("verdict status")),
    };
    let num = |o: &Value, k: &str| {
        o.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| bad(format!("verdict field {k}")))
    };
    let c = v.get("certificate").ok_or_else(|| bad("certificate"))?;
    let certificate = match c.get("kind").and_then(Value::as_str) {
        Some("projective") => GpCertificate::Projective,
        Some("gorenstein-dimension") => GpCertificate::GorensteinDimension(num(c, "d")?),
        Some("periodicity") => GpCertificate::Periodicity { k: num(c, "k")?, j: num(c, "j")? },
        Some("ext-witness") => GpCertificate::ExtWitness {
            degree: num(c, "degree")?,
            side: match c.get("side").and_then(Value::as_str) {
                Some("module") => ExtSide::Module,
                Some("dual") => ExtSide::Dual,
                _ => return Err(bad("ext side")),
            },
        },
        Some("not-reflexive") => GpCertificate::NotReflexive,
        Some("none") => GpCertificate::None,
        _ => return Err(bad("certificate kind")),
    };
    let failing_summands = v
        .get("failing_summands")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
        .unwrap_or_default();
    Ok(GpVerdict { status, bound_used: num(v, "bound_used")?, certificate, failing_summands })
}

pub fn pair_to_json<F: Field>(pair: &RigidPair<F>) -> Value {
    let alg = pair.algebra();
    let p: Vec<&str> = pair.p().iter().map(|&v| alg.vertex_label(v)).collect();
    let mut out = json!({
        "label": pair.bracket_label(),
        "summands": pair.summands().iter().map(rep_to_json).collect::<Vec<_>>(),
        "p": p,
        "dims": pair.module().dims(),
        "tau_rigid": pair.is_tau_rigid(),
        "pair_condition": pair.pair_condition(),
        "support_tau_tilting": pair.is_support_tau_tilting(),
    });
    if let Some(v) = pair.gp() {
        out["gp"] = verdict_to_json(v);
    }
    out
}

fn edge_to_json(e: &Edge) -> Value {
    json!({ "from": e.from, "to": e.to, "from_position": e.from_position, "to_position": e.to_position })
}

pub fn graph_to_json<F: Field>(g: &ExchangeGraph<F>) -> Value {
    let nodes: Vec<Value> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let mut v = pair_to_json(n);
            v["index"] = json!(i);
            v
        })
        .collect();
    json!({
        "algebra": g.algebra.id(),
        "field": F::field_name(),
        "complete": g.complete,
        "node_count": g.nodes.len(),
        "edge_count": g.edges.len(),
        "nodes": nodes,
        "edges": g.edges.iter().map(edge_to_json).collect::<Vec<_>>(),
    })
}

/// Rebuilds a graph written by [`graph_to_json`]; every node is verified
/// again from its summands.
pub fn graph_from_json<F: Field>(alg: &Arc<Algebra<F>>, v: &Value) -> Result<ExchangeGraph<F>> {
    if v.get("algebra").and_then(Value::as_str) != Some(alg.id()) {
        return Err(bad("graph belongs to a different algebra"));
    }
    let complete = v.get("complete").and_then(Value::as_bool).ok_or_else(|| bad("complete"))?;
    let mut nodes = Vec::new();
    for n in v.get("nodes").and_then(Value::as_array).ok_or_else(|| bad("nodes"))? {
        let summands = n
            .get("summands")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("summands"))?
            .iter()
            .map(|s| rep_from_json(alg, s))
            .collect::<Result<Vec<_>>>()?;
        let p = n
            .get("p")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("p"))?
            .iter()
            .map(|l| {
                l.as_str()
                    .and_then(|l| alg.quiver().vertex_index(l))
                    .ok_or_else(|| bad("vertex in p"))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut pair = RigidPair::from_summands(alg, summands, p)?;
        if let Some(g) = n.get("gp") {
            pair.set_gp(verdict_from_json(g)?);
        }
        nodes.push(pair.into_support_tau_tilting()?);
    }
    let mut edges = Vec::new();
    for e in v.get("edges").and_then(Value::as_array).ok_or_else(|| bad("edges"))? {
        let f = |k: &str| {
            e.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(format!("edge field {k}")))
        };
        let edge = Edge { from: f("from")?, to: f("to")?, from_position: f("from_position")?, to_position: f("to_position")? };
        if edge.from >= nodes.len() || edge.to >= nodes.len() {
            return Err(bad("edge endpoint out of range"));
        }
        edges.push(edge);
    }
    Ok(ExchangeGraph { algebra: alg.clone(), nodes, edges, complete })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT with bracket labels; certified GP nodes are drawn filled, undecided
/// ones dashed.
pub fn graph_to_dot<F: Field>(g: &ExchangeGraph<F>) -> String {
    let mut s = String::from("digraph exchange {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, n) in g.nodes.iter().enumerate() {
        let style = match n.gp().map(|v| v.status) {
            Some(GpStatus::CertifiedGP) => ", style=filled, fillcolor=\"#cfe8cf\"",
            Some(GpStatus::VanishesUpToBound) => ", style=dashed",
            _ => "",
        };
        let _ = writeln!(s, "  n{i} [label=\"{}\"{style}];", dot_escape(&n.bracket_label()));
    }
    for e in &g.edges {
        let _ = writeln!(s, "  n{} -> n{};", e.from, e.to);
    }
    if !g.complete {
        s.push_str("  incomplete [shape=plaintext, label=\"(budget exhausted)\"];\n");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::homology::gp_verdict;
    use crate::rep::tests::{alg, EX_3E};
    use crate::tautilt::enumerate_exchange_graph;

    #[test]
    fn module_round_trip() {
        let a = alg(EX_3E);
        let m = Representation::projective(&a, 0).direct_sum_with(&Representation::simple(&a, 2));
        let v = rep_to_json(&m);
        let back = rep_from_json(&a, &v).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.fingerprint(), m.fingerprint());
        let text = r#"{"dims":[1,1,0],"arrows":{"a1":[["1/2"]]}}"#;
        let m = rep_from_json(&a, &serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(m.label(), "1/2");
        let bad = r#"{"dims":[1,1,0],"arrows":{"zz":[["1"]]}}"#;
        assert!(rep_from_json(&a, &serde_json::from_str(bad).unwrap()).is_err());
    }

    #[test]
    fn fp_entries() {
        let a = crate::algebra::parse_algebra(EX_3E).unwrap().build::<Fp<7>>().unwrap();
        let text = r#"{"dims":[1,1,0],"arrows":{"a1":[["1/2"]]}}"#;
        let m = rep_from_json(&a, &serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(entry_text(&m.arrow_map(0)[(0, 0)]), "4");
    }

    #[test]
    fn verdict_and_graph_round_trip() {
        let a = alg(EX_3E);
        let v = gp_verdict(&Representation::simple(&a, 0), 4);
        assert_eq!(verdict_from_json(&verdict_to_json(&v)).unwrap(), v);
        let mut g = enumerate_exchange_graph(&a, 100).unwrap();
        g.annotate_gp(4);
        let j = graph_to_json(&g);
        let back = graph_from_json(&a, &j).unwrap();
        assert_eq!(graph_to_json(&back), j);
        let dot = graph_to_dot(&g);
        assert_eq!(dot.matches("fillcolor").count(), g.node_count());
        assert_eq!(dot.matches("->").count(), g.edge_count());
    }
}
