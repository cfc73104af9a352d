use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use gptau_core::homology::{
    global_dimension_probe, gorenstein_dimension, gp_verdict, injective_dimension_probe,
    is_self_injective, GpVerdict, Side,
};
use gptau_core::regression::{run_all, RegressionConfig};
use gptau_core::rep::Representation;
use gptau_core::serialize::{graph_to_dot, graph_to_json, pair_to_json, rep_from_json, rep_to_json, verdict_to_json};
use gptau_core::tautilt::{
    bongartz_completion, cm_tau_finiteness, dagger, dagger_with_positions, gp_filter,
    indecomposable_gp_tau_rigid, CmStatus, CmTauVerdict, ExchangeGraph,
};
use gptau_core::torsion::{classify_torsion_pair, dual_side_check, torsion_pair_of};
use gptau_core::{Algebra, Field};
use serde_json::{json, Value};

use crate::cache::GraphCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// an asserted property failed
    Failed,
    /// enumeration ran out of budget or a verdict stayed undecided
    Incomplete,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Incomplete => 2,
        }
    }

    fn worst(self, other: Status) -> Status {
        if self.code() >= other.code() {
            self
        } else {
            other
        }
    }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
    pub status: Status,
}

impl Output {
    fn new(text: String, json: Value, status: Status) -> Self {
        Output { text, json, dot: None, status }
    }
}

pub struct RunConfig {
    pub ext_bound: usize,
    pub length_cap: usize,
    pub budget: usize,
    pub cache: GraphCache,
}

fn side_text(d: Option<usize>, bound: usize) -> String {
    d.map_or(format!("> {bound}"), |d| d.to_string())
}

pub fn check<F: Field>(alg: &Arc<Algebra<F>>, cfg: &RunConfig) -> Result<Output> {
    let b = cfg.ext_bound;
    let right = injective_dimension_probe(alg, Side::Right, b);
    let left = injective_dimension_probe(alg, Side::Left, b);
    let gldim = global_dimension_probe(alg, b);
    let gor = gorenstein_dimension(alg, b);
    let self_inj = is_self_injective(alg);
    let rad2 = alg.is_radical_square_zero();
    let mut by_length = vec![0usize; alg.loewy_length() + 1];
    for p in alg.basis() {
        by_length[p.len()] += 1;
    }
    let n = alg.vertex_count();
    let cartan: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| alg.pair_basis(i, j).len()).collect()).collect();

    let mut summary = vec![format!("dim {}", alg.dim())];
    if rad2 {
        summary.push("rad²=0".into());
    }
    if let Some(d) = gldim {
        summary.push(format!("gldim {d}"));
    }
    match gor {
        Some(d) if !self_inj => summary.push(format!("{d}-Gorenstein (id={d} both sides)")),
        Some(_) => {}
        None => summary.push(format!("not Gorenstein up to {b}")),
    }
    summary.push(if self_inj { "self-injective".into() } else { "not self-injective".into() });

    let mut text = summary.join(", ");
    let _ = writeln!(text);
    let _ = writeln!(text, "field {}, {} vertices, {} arrows, id {}", F::field_name(), n, alg.arrow_count(), alg.id());
    let _ = writeln!(text, "basis by path length: {by_length:?}");
    let _ = writeln!(text, "dim e_i Λ e_j: {cartan:?}");
    let _ = writeln!(text, "injective dimension: right {}, left {}", side_text(right, b), side_text(left, b));
    let _ = writeln!(text, "global dimension: {}", side_text(gldim, b));
    let json = json!({
        "algebra": alg.id(),
        "field": F::field_name(),
        "dim": alg.dim(),
        "vertices": n,
        "arrows": alg.arrow_count(),
        "basis_by_length": by_length,
        "cartan": cartan,
        "radical_square_zero": rad2,
        "self_injective": self_inj,
        "injective_dimension": { "right": right, "left": left },
        "global_dimension": gldim,
        "gorenstein_dimension": gor,
        "ext_bound": b,
        "summary": summary.join(", "),
    });
    Ok(Output::new(text, json, Status::Ok))
}

fn status_word<F: Field>(g: &ExchangeGraph<F>) -> &'static str {
    if g.complete {
        "complete"
    } else {
        "incomplete"
    }
}

fn incomplete<F: Field>(g: &ExchangeGraph<F>, budget: usize) -> Output {
    let text = format!("enumeration exceeded the budget of {budget} nodes ({} found)\n", g.node_count());
    let mut out = Output::new(text, graph_to_json(g), Status::Incomplete);
    out.dot = Some(graph_to_dot(g));
    out
}

pub fn enumerate<F: Field>(alg: &Arc<Algebra<F>>, cfg: &RunConfig) -> Result<Output> {
    let g = cfg.cache.annotated_graph(alg, cfg.budget, cfg.ext_bound)?;
    let mut text = format!("{} nodes, {} edges, {}\n", g.node_count(), g.edge_count(), status_word(&g));
    for (i, n) in g.nodes.iter().enumerate() {
        let gp = n.gp().map_or("-".to_string(), |v| v.status.to_string());
        let _ = writeln!(text, "n{i:<4} {:<40} {gp}", n.bracket_label());
    }
    for e in &g.edges {
        let _ = writeln!(text, "n{} -> n{}", e.from, e.to);
    }
    let status = if g.complete { Status::Ok } else { Status::Incomplete };
    let mut out = Output::new(text, graph_to_json(&g), status);
    out.dot = Some(graph_to_dot(&g));
    Ok(out)
}

fn labels<F: Field>(g: &ExchangeGraph<F>, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| g.nodes[i].bracket_label()).collect()
}

pub fn gp_report<F: Field>(alg: &Arc<Algebra<F>>, cfg: &RunConfig) -> Result<Output> {
    let b = cfg.ext_bound;
    let g = cfg.cache.annotated_graph(alg, cfg.budget, b)?;
    if !g.complete {
        return Ok(incomplete(&g, cfg.budget));
    }
    let filter = gp_filter(&g, b)?;
    let rigid = indecomposable_gp_tau_rigid(&g, b)?;
    let mut status = Status::Ok;
    let mut torsion = Vec::new();
    let mut torsion_text = String::new();
    for (i, node) in g.nodes.iter().enumerate() {
        let d = torsion_pair_of(node)?;
        let cls = classify_torsion_pair(&d, b);
        let dual = dual_side_check(&d, b)?;
        if !(dual.agrees && dual.op_side_agrees) {
            status = Status::Failed;
        }
        let gor = match cls.gorenstein {
            Some(true) => "gorenstein",
            Some(false) => "not gorenstein",
            None => "undecided",
        };
        let _ = writeln!(
            torsion_text,
            "  n{i:<4} {:<40} {gor}{}{}",
            node.bracket_label(),
            if cls.trivial { ", trivial" } else { "" },
            if dual.agrees && dual.op_side_agrees { "" } else { ", DUAL SIDE DISAGREES" }
        );
        torsion.push(json!({
            "node": i,
            "label": node.bracket_label(),
            "gorenstein": cls.gorenstein,
            "trivial": cls.trivial,
            "dual_side_agrees": dual.agrees,
            "op_side_agrees": dual.op_side_agrees,
            "undecided": dual.undecided,
        }));
    }
    if !filter.undecided.is_empty() && status == Status::Ok {
        status = Status::Incomplete;
    }
    let gp_all = filter.all_gp();
    let proj_free: Vec<usize> = filter
        .tau_tilting
        .iter()
        .copied()
        .filter(|&i| g.nodes[i].projective_vertices().iter().all(Option::is_none))
        .collect();
    let rigid_labels: Vec<String> = rigid.iter().map(Representation::label).collect();

    let mut text = format!(
        "{} support τ-tilting pairs, {} GP, {} GP τ-tilting ({} with projective-free M), {} undecided\n",
        g.node_count(),
        gp_all.len(),
        filter.tau_tilting.len(),
        proj_free.len(),
        filter.undecided.len()
    );
    let mut section = |title: &str, items: &[String]| {
        let _ = writeln!(text, "{title}:");
        for x in items {
            let _ = writeln!(text, "  {x}");
        }
    };
    section("GP τ-tilting", &labels(&g, &filter.tau_tilting));
    section("GP support τ-tilting, not τ-tilting", &labels(&g, &filter.proper_support));
    section("GP τ-tilting with projective-free M", &labels(&g, &proj_free));
    section("undecided", &labels(&g, &filter.undecided));
    section("indecomposable GP τ-rigid", &rigid_labels);
    let _ = writeln!(text, "torsion pairs:");
    text.push_str(&torsion_text);

    let json = json!({
        "algebra": alg.id(),
        "field": F::field_name(),
        "ext_bound": b,
        "node_count": g.node_count(),
        "gp_support_tau_tilting": labels(&g, &gp_all),
        "gp_tau_tilting": labels(&g, &filter.tau_tilting),
        "gp_proper_support_tau_tilting": labels(&g, &filter.proper_support),
        "gp_tau_tilting_projective_free": labels(&g, &proj_free),
        "undecided": labels(&g, &filter.undecided),
        "gp_tau_rigid_indecomposables": rigid_labels,
        "torsion": torsion,
    });
    let mut out = Output::new(text, json, status);
    out.dot = Some(graph_to_dot(&g));
    Ok(out)
}

pub fn dagger_report<F: Field>(alg: &Arc<Algebra<F>>, cfg: &RunConfig) -> Result<Output> {
    let b = cfg.ext_bound;
    let g = cfg.cache.annotated_graph(alg, cfg.budget, b)?;
    if !g.complete {
        return Ok(incomplete(&g, cfg.budget));
    }
    let op = alg.opposite();
    let gop = cfg.cache.annotated_graph(&op, cfg.budget, b)?;
    if !gop.complete {
        return Ok(incomplete(&gop, cfg.budget));
    }
    let v = g.gp_verdicts(b);
    let vop = gop.gp_verdicts(b);
    let mut mismatches = Vec::new();
    let mut hit = vec![false; gop.node_count()];
    let mut rows = Vec::new();
    let mut text = String::new();
    for (i, node) in g.nodes.iter().enumerate() {
        let (d, positions) = dagger_with_positions(node)?;
        let Some(j) = gop.find(&d) else {
            mismatches.push(format!("n{i} {}: dagger {} is not a node over the opposite algebra", node.bracket_label(), d.bracket_label()));
            continue;
        };
        if std::mem::replace(&mut hit[j], true) {
            mismatches.push(format!("m{j} is hit twice"));
        }
        if !dagger(&d)?.is_isomorphic(node) {
            mismatches.push(format!("n{i} {}: dagger is not an involution", node.bracket_label()));
        }
        if v[i].status != vop[j].status {
            mismatches.push(format!("n{i} {}: GP status {} but {} over the opposite", node.bracket_label(), v[i].status, vop[j].status));
        }
        let _ = writeln!(text, "n{i:<4} {:<36} <-> m{j:<4} {:<36} {}", node.bracket_label(), gop.nodes[j].bracket_label(), v[i].status);
        rows.push(json!({
            "node": i,
            "label": node.bracket_label(),
            "op_node": j,
            "op_label": gop.nodes[j].bracket_label(),
            "positions": positions,
            "gp": v[i].status.to_string(),
            "op_gp": vop[j].status.to_string(),
        }));
    }
    if g.node_count() != gop.node_count() {
        mismatches.push(format!("{} nodes over Λ, {} over Λ^op", g.node_count(), gop.node_count()));
    }
    let count = |vs: &[GpVerdict]| vs.iter().filter(|x| x.is_gp()).count();
    let (gp, gp_op) = (count(&v), count(&vop));
    if gp != gp_op {
        mismatches.push(format!("{gp} GP pairs over Λ, {gp_op} over Λ^op"));
    }
    let head = format!("{} <-> {} pairs, {gp} <-> {gp_op} GP, {} mismatches\n", g.node_count(), gop.node_count(), mismatches.len());
    let mut full = head;
    full.push_str(&text);
    for m in &mismatches {
        let _ = writeln!(full, "MISMATCH {m}");
    }
    let json = json!({
        "algebra": alg.id(),
        "op_algebra": op.id(),
        "matching": rows,
        "gp_count": gp,
        "op_gp_count": gp_op,
        "mismatches": mismatches,
    });
    let status = if mismatches.is_empty() { Status::Ok } else { Status::Failed };
    Ok(Output::new(full, json, status))
}

/// `S1`, `P2`, `I3` (by vertex label), `Lambda`, sums such as `S1+P2`, or
/// the path of a JSON module.
pub fn parse_module<F: Field>(alg: &Arc<Algebra<F>>, spec: &str) -> Result<Representation<F>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
        return Ok(rep_from_json(alg, &v)?);
    }
    let mut parts = Vec::new();
    for term in spec.split('+').map(str::trim) {
        if term == "Lambda" || term == "Λ" {
            parts.push(Representation::regular(alg));
            continue;
        }
        let mut chars = term.chars();
        let kind = chars.next().ok_or_else(|| anyhow!("empty module term in `{spec}`"))?;
        let label = chars.as_str();
        let v = alg
            .quiver()
            .vertex_index(label)
            .ok_or_else(|| anyhow!("no vertex `{label}` in `{term}`"))?;
        parts.push(match kind {
            'S' => Representation::simple(alg, v),
            'P' => Representation::projective(alg, v),
            'I' => Representation::injective(alg, v),
            _ => bail!("module term `{term}` is not S<v>, P<v>, I<v> or Lambda, and no such file exists"),
        });
    }
    Ok(Representation::direct_sum(alg, &parts))
}

pub fn bongartz<F: Field>(alg: &Arc<Algebra<F>>, module: &str, cfg: &RunConfig) -> Result<Output> {
    let b = cfg.ext_bound;
    let m = parse_module(alg, module)?;
    let g = cfg.cache.annotated_graph(alg, cfg.budget, b)?;
    if !g.complete {
        return Ok(incomplete(&g, cfg.budget));
    }
    let input = gp_verdict(&m, b);
    let bc = bongartz_completion(&m, &g)?;
    let v = gp_verdict(&bc.pair.module(), b);
    let summands: Vec<String> = bc.pair.summands().iter().map(Representation::label).collect();
    let mut text = format!("{} ({}) completes to n{} {}\n", module, m.label(), bc.node, bc.pair.bracket_label());
    let _ = writeln!(text, "input verdict: {}", input.status);
    let _ = writeln!(text, "completion verdict: {} ({:?})", v.status, v.certificate);
    if !v.failing_summands.is_empty() {
        let _ = writeln!(text, "non-GP summands: {}", v.failing_summands.join(", "));
    }
    let json = json!({
        "module": rep_to_json(&m),
        "input_verdict": verdict_to_json(&input),
        "node": bc.node,
        "completion": pair_to_json(&bc.pair),
        "summands": summands,
        "verdict": verdict_to_json(&v),
    });
    Ok(Output::new(text, json, Status::Ok))
}

fn cm_json(v: &CmTauVerdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "route": v.route.map(|r| r.to_string()),
        "witness": v.witness,
    })
}

pub fn cm_finite<F: Field>(alg: &Arc<Algebra<F>>, cfg: &RunConfig) -> Result<Output> {
    let v = cm_tau_finiteness(alg, cfg.budget, cfg.ext_bound);
    let vop = cm_tau_finiteness(&alg.opposite(), cfg.budget, cfg.ext_bound);
    let route = |v: &CmTauVerdict| v.route.map_or("none".to_string(), |r| r.to_string());
    let mut text = format!("{} via {} ({})\n", v.status, route(&v), v.witness);
    let _ = writeln!(text, "opposite: {} via {} ({})", vop.status, route(&vop), vop.witness);
    let status = if v.status != vop.status {
        let _ = writeln!(text, "MISMATCH between Λ and Λ^op");
        Status::Failed
    } else if v.status == CmStatus::Undecided {
        Status::Incomplete
    } else {
        Status::Ok
    };
    let json = json!({ "algebra": alg.id(), "verdict": cm_json(&v), "opposite": cm_json(&vop) });
    Ok(Output::new(text, json, status))
}

pub fn paper_examples<F: Field>(cfg: &RunConfig, fixtures: Option<&PathBuf>, random_cases: usize, seed: u64) -> Result<Output> {
    let mut rc = RegressionConfig { ext_bound: cfg.ext_bound, budget: cfg.budget, random_cases, seed, ..Default::default() };
    if let Some(dir) = fixtures {
        for (name, _) in gptau_core::registry::BUNDLED {
            let p = dir.join(format!("{name}.alg"));
            if p.is_file() {
                rc.overrides.insert(name.to_string(), std::fs::read_to_string(&p)?);
            }
        }
    }
    let reports = run_all::<F>(&rc);
    let mut text = String::new();
    let mut status = Status::Ok;
    let mut rows = Vec::new();
    for r in &reports {
        let _ = writeln!(text, "{r}");
        if !r.passed() {
            status = status.worst(Status::Failed);
        }
        rows.push(json!({
            "criterion": r.number,
            "title": r.title,
            "passed": r.passed(),
            "checks": r.checks,
            "failures": r.failures,
            "notes": r.notes,
        }));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(text, "{passed}/{} criteria passed", reports.len());
    let json = json!({ "field": F::field_name(), "passed": passed, "total": reports.len(), "criteria": rows });
    Ok(Output::new(text, json, status))
}
