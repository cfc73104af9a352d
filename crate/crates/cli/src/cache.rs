//! On-disk cache of exchange graphs, one directory per algebra id. The id
//! hashes the field and the presentation, so a changed algebra gets a fresh
//! directory.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{Context, Result};
use gptau_core::serialize::{graph_from_json, graph_to_json};
use gptau_core::tautilt::{enumerate_exchange_graph, ExchangeGraph};
use gptau_core::{Algebra, Field};
use serde_json::{json, Value};

pub struct GraphCache {
    dir: Option<PathBuf>,
}

impl GraphCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        GraphCache { dir }
    }

    fn path<F: Field>(&self, alg: &Algebra<F>) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(alg.id()).join("graph.json"))
    }

    /// A cached graph is reused when it is complete or was built with the
    /// same budget.
    fn lookup<F: Field>(&self, alg: &Arc<Algebra<F>>, budget: usize) -> Result<Option<ExchangeGraph<F>>> {
        let Some(path) = self.path(alg) else { return Ok(None) };
        let Ok(text) = fs::read_to_string(&path) else { return Ok(None) };
        let v: Value = serde_json::from_str(&text).with_context(|| format!("reading {}", path.display()))?;
        let cached_budget = v.get("budget").and_then(Value::as_u64).unwrap_or(0) as usize;
        let graph = v.get("graph").context("cache entry without a graph")?;
        let complete = graph.get("complete").and_then(Value::as_bool).unwrap_or(false);
        if !complete && cached_budget != budget {
            return Ok(None);
        }
        Ok(Some(graph_from_json(alg, graph).with_context(|| format!("reading {}", path.display()))?))
    }

    pub fn store<F: Field>(&self, g: &ExchangeGraph<F>, budget: usize) -> Result<()> {
        let Some(path) = self.path(&g.algebra) else { return Ok(()) };
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let tmp = path.with_extension("json.tmp");
        let body = json!({ "budget": budget, "graph": graph_to_json(g) });
        fs::write(&tmp, serde_json::to_string(&body)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn graph<F: Field>(&self, alg: &Arc<Algebra<F>>, budget: usize) -> Result<ExchangeGraph<F>> {
        if let Some(g) = self.lookup(alg, budget)? {
            return Ok(g);
        }
        let g = enumerate_exchange_graph(alg, budget)?;
        self.store(&g, budget)?;
        Ok(g)
    }

    /// Graph with GP verdicts stored on every node.
    pub fn annotated_graph<F: Field>(
        &self,
        alg: &Arc<Algebra<F>>,
        budget: usize,
        bound: usize,
    ) -> Result<ExchangeGraph<F>> {
        let mut g = self.graph(alg, budget)?;
        if g.nodes.iter().any(|n| n.gp().is_none_or(|v| v.bound_used != bound)) {
            g.annotate_gp(bound);
            self.store(&g, budget)?;
        }
        Ok(g)
    }
}
