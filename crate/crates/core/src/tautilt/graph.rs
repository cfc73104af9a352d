use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::mutation::left_mutation;
use super::{RigidPair, SupportTauTiltingPair};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{combine_verdicts, indecomposable_gp_verdict, tau, GpStatus, GpVerdict};
use crate::rep::{IsoKey, Representation};

pub const DEFAULT_BUDGET: usize = 10_000;

/// `Fac a ⊇ Fac b`.
pub(crate) fn fac_contains<F: Field>(a: &RigidPair<F>, b: &RigidPair<F>) -> bool {
    let am = a.module();
    b.summands().iter().all(|s| s.in_fac(&am))
}

/// A mutation from the larger torsion class `from` to the smaller `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub from_position: usize,
    pub to_position: usize,
}

#[derive(Clone, Debug)]
pub struct ExchangeGraph<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub nodes: Vec<SupportTauTiltingPair<F>>,
    pub edges: Vec<Edge>,
    pub complete: bool,
}

/// Breadth-first closure under downward mutation from `(Λ, 0)`.
///
/// Every support τ-tilting pair of a τ-tilting finite algebra lies below
/// `(Λ, 0)` along a chain of downward mutations, so the upward half of each
/// edge is found from its other end.
pub fn enumerate_exchange_graph<F: Field>(
    algebra: &Arc<Algebra<F>>,
    max_nodes: usize,
) -> Result<ExchangeGraph<F>> {
    if max_nodes == 0 {
        return Err(Error::Invalid("max_nodes must be positive".into()));
    }
    let top = RigidPair::from_module(&Representation::regular(algebra), &[])?
        .into_support_tau_tilting()?;
    let mut index: HashMap<(Vec<usize>, Vec<IsoKey>), Vec<usize>> = HashMap::new();
    index.entry(top.key()).or_default().push(0);
    let mut nodes = vec![top];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut complete = true;
    'outer: while let Some(u) = queue.pop_front() {
        for pos in 0..nodes[u].summands().len() {
            let Some((child, cpos)) = left_mutation(&nodes[u], pos)? else {
                continue;
            };
            let key = child.key();
            let found = index
                .get(&key)
                .and_then(|bucket| bucket.iter().copied().find(|&k| nodes[k].is_isomorphic(&child)));
            let v = match found {
                Some(v) => {
                    // positions are canonical up to isomorphic reordering
                    let new = child.summands().get(cpos);
                    let cpos = match new {
                        Some(x) => nodes[v].summand_position(x).expect("matched summand"),
                        None => cpos,
                    };
                    edges.push(Edge { from: u, to: v, from_position: pos, to_position: cpos });
                    continue;
                }
                None => nodes.len(),
            };
            if nodes.len() >= max_nodes {
                complete = false;
                break 'outer;
            }
            index.entry(key).or_default().push(v);
            nodes.push(child);
            queue.push_back(v);
            edges.push(Edge { from: u, to: v, from_position: pos, to_position: cpos });
        }
    }
    Ok(ExchangeGraph { algebra: algebra.clone(), nodes, edges, complete })
}

impl<F: Field> ExchangeGraph<F> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::IncompleteGraph)
        }
    }

    /// Every node meets exactly `|Λ|` edges, one per position.
    pub fn degree_check(&self) -> bool {
        let n = self.algebra.vertex_count();
        let mut seen = vec![vec![false; n]; self.nodes.len()];
        for e in &self.edges {
            if seen[e.from][e.from_position] || seen[e.to][e.to_position] {
                return false;
            }
            seen[e.from][e.from_position] = true;
            seen[e.to][e.to_position] = true;
        }
        seen.iter().all(|s| s.iter().all(|&b| b))
    }

    /// Node index of a pair isomorphic to `pair`.
    pub fn find(&self, pair: &RigidPair<F>) -> Option<usize> {
        let key = pair.key();
        self.nodes
            .iter()
            .position(|n| n.key() == key && n.is_isomorphic(pair))
    }

    /// `reach[a][b]`: `b` is reachable from `a` along edges, i.e.
    /// `Fac a ⊇ Fac b`.
    pub fn torsion_order(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut out = vec![Vec::new(); n];
        for e in &self.edges {
            out[e.from].push(e.to);
        }
        (0..n)
            .map(|a| {
                let mut seen = vec![false; n];
                let mut stack = vec![a];
                seen[a] = true;
                while let Some(x) = stack.pop() {
                    for &y in &out[x] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    /// `Fac(node a) ⊇ Fac(node b)`, by direct membership tests.
    pub fn fac_contains(&self, a: usize, b: usize) -> bool {
        fac_contains(&self.nodes[a], &self.nodes[b])
    }

    /// GP verdicts of every node's `M`. Stored verdicts with the same bound
    /// are reused; each indecomposable summand is computed once.
    pub fn gp_verdicts(&self, bound: usize) -> Vec<GpVerdict> {
        let mut cache: Vec<(Representation<F>, GpVerdict)> = Vec::new();
        self.nodes
            .iter()
            .map(|node| {
                if let Some(v) = node.gp().filter(|v| v.bound_used == bound) {
                    return v.clone();
                }
                let mut vs = Vec::new();
                for (s, pv) in node.summands().iter().zip(node.projective_vertices()) {
                    if pv.is_some() {
                        continue;
                    }
                    let hit = cache
                        .iter()
                        .find(|(c, _)| c.dims() == s.dims() && c.indecomposable_iso(s).is_some());
                    let v = match hit {
                        Some((_, v)) => v.clone(),
                        None => {
                            let v = indecomposable_gp_verdict(s, bound);
                            cache.push((s.clone(), v.clone()));
                            v
                        }
                    };
                    vs.push((s.label(), v));
                }
                combine_verdicts(vs, bound)
            })
            .collect()
    }

    /// Stores the GP verdict on every node.
    pub fn annotate_gp(&mut self, bound: usize) {
        let vs = self.gp_verdicts(bound);
        for (node, v) in self.nodes.iter_mut().zip(vs) {
            node.0.set_gp(v);
        }
    }

    /// Indecomposable summands of all nodes, up to isomorphism; these are
    /// all the indecomposable τ-rigid modules when the graph is complete.
    pub fn indecomposable_tau_rigid(&self) -> Vec<Representation<F>> {
        let mut out: Vec<Representation<F>> = Vec::new();
        for node in &self.nodes {
            for s in node.summands() {
                if !out
                    .iter()
                    .any(|o| o.dims() == s.dims() && o.indecomposable_iso(s).is_some())
                {
                    out.push(s.clone());
                }
            }
        }
        out.sort_by_key(|m| (m.label(), m.dims().to_vec()));
        out
    }
}

/// Node indices split by the GP verdict of `M`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GpFilter {
    /// certified GP with `P = 0`
    pub tau_tilting: Vec<usize>,
    /// certified GP with `P ≠ 0`
    pub proper_support: Vec<usize>,
    /// verdict `VanishesUpToBound`
    pub undecided: Vec<usize>,
}

impl GpFilter {
    pub fn all_gp(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.tau_tilting.iter().chain(&self.proper_support).copied().collect();
        v.sort_unstable();
        v
    }
}

pub fn gp_filter<F: Field>(graph: &ExchangeGraph<F>, bound: usize) -> Result<GpFilter> {
    graph.require_complete()?;
    let mut out = GpFilter::default();
    for (i, v) in graph.gp_verdicts(bound).into_iter().enumerate() {
        match v.status {
            GpStatus::CertifiedGP if graph.nodes[i].p().is_empty() => out.tau_tilting.push(i),
            GpStatus::CertifiedGP => out.proper_support.push(i),
            GpStatus::VanishesUpToBound => out.undecided.push(i),
            GpStatus::CertifiedNotGP => {}
        }
    }
    Ok(out)
}

/// Indecomposable GP τ-rigid modules: every τ-rigid module is a summand of
/// its Bongartz completion, so a complete graph sees all of them.
pub fn indecomposable_gp_tau_rigid<F: Field>(
    graph: &ExchangeGraph<F>,
    bound: usize,
) -> Result<Vec<Representation<F>>> {
    graph.require_complete()?;
    Ok(graph
        .indecomposable_tau_rigid()
        .into_iter()
        .filter(|m| m.is_projective() || indecomposable_gp_verdict(m, bound).is_gp())
        .collect())
}

#[derive(Clone, Debug)]
pub struct BongartzCompletion<F: Field> {
    pub node: usize,
    pub pair: SupportTauTiltingPair<F>,
}

/// The node generating `⊥τM`: the largest torsion class `Fac T` with
/// `Hom(T, τM) = 0`.
pub fn bongartz_completion<F: Field>(
    m: &Representation<F>,
    graph: &ExchangeGraph<F>,
) -> Result<BongartzCompletion<F>> {
    graph.require_complete()?;
    let tm = tau(m);
    if m.hom_dim(&tm) != 0 {
        return Err(Error::NotTauRigid);
    }
    let inside: Vec<usize> = (0..graph.nodes.len())
        .filter(|&i| tm.is_zero() || graph.nodes[i].module().hom_dim(&tm) == 0)
        .collect();
    let reach = graph.torsion_order();
    let tops: Vec<usize> = inside
        .iter()
        .copied()
        .filter(|&i| inside.iter().all(|&j| reach[i][j]))
        .collect();
    let [node] = tops[..] else {
        return Err(Error::Verification(format!(
            "{} maximal nodes inside the perpendicular category",
            tops.len()
        )));
    };
    let pair = graph.nodes[node].clone();
    if !pair.p().is_empty() {
        return Err(Error::Verification("Bongartz completion has nonzero P".into()));
    }
    if !m.is_zero() {
        for piece in m.decompose()?.summands {
            if pair.summand_position(&piece.module).is_none() {
                return Err(Error::Verification(format!(
                    "Bongartz completion misses the summand {}",
                    piece.module.label()
                )));
            }
        }
    }
    Ok(BongartzCompletion { node, pair })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{EX_36, EX_61, LOCAL};
    use super::super::{dagger, mutate};
    use super::*;
    use crate::homology::gp_verdict;
    use crate::rep::tests::{alg, EX_3D, EX_3E};

    const SS2: &str = "vertices: 1 2\n";
    const KRONECKER: &str = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n";
    const A2: &str = "vertices: 1 2\narrow a: 1 -> 2\n";

    #[test]
    fn graph_of_36() {
        let a = alg(EX_36);
        let g = enumerate_exchange_graph(&a, DEFAULT_BUDGET).unwrap();
        assert!(g.complete);
        assert_eq!(g.node_count(), 24);
        assert_eq!(g.edge_count(), 36);
        assert!(g.degree_check());
        let f = gp_filter(&g, 4).unwrap();
        let free: Vec<usize> = f
            .tau_tilting
            .iter()
            .copied()
            .filter(|&i| g.nodes[i].projective_vertices().iter().all(Option::is_none))
            .collect();
        assert_eq!(free.len(), 2);
        let reach = g.torsion_order();
        for x in 0..g.node_count() {
            for y in 0..g.node_count() {
                assert_eq!(reach[x][y], g.fac_contains(x, y), "{x} {y}");
            }
        }
    }

    #[test]
    fn semisimple_and_local() {
        let g = enumerate_exchange_graph(&alg(SS2), 100).unwrap();
        assert_eq!((g.node_count(), g.edge_count(), g.complete), (4, 4, true));
        let g = enumerate_exchange_graph(&alg(LOCAL), 100).unwrap();
        assert_eq!(g.node_count(), 2);
    }

    #[test]
    fn kronecker_is_incomplete() {
        let g = enumerate_exchange_graph(&alg(KRONECKER), 50).unwrap();
        assert!(!g.complete);
        assert_eq!(g.node_count(), 50);
        assert!(gp_filter(&g, 4).is_err());
    }

    #[test]
    fn a2_gp_is_projective() {
        let a = alg(A2);
        let g = enumerate_exchange_graph(&a, 100).unwrap();
        assert_eq!(g.node_count(), 5);
        let f = gp_filter(&g, 4).unwrap();
        for i in f.all_gp() {
            assert!(g.nodes[i].projective_vertices().iter().all(Option::is_some));
        }
        let gp = indecomposable_gp_tau_rigid(&g, 4).unwrap();
        assert_eq!(gp.len(), 2);
    }

    #[test]
    fn gp_list_of_3d() {
        let a = alg(EX_3D);
        let g = enumerate_exchange_graph(&a, 1000).unwrap();
        assert!(g.complete && g.degree_check());
        let gp = indecomposable_gp_tau_rigid(&g, 4).unwrap();
        let labels: Vec<String> = gp.iter().map(Representation::label).collect();
        for l in ["2/3", "2/(1 3)", "3", "1/2/3"] {
            assert!(labels.iter().any(|x| x == l), "{l} missing from {labels:?}");
        }
    }

    #[test]
    fn self_injective_every_tau_rigid_is_gp() {
        let a = alg(EX_3E);
        let g = enumerate_exchange_graph(&a, 1000).unwrap();
        let all = g.indecomposable_tau_rigid();
        assert_eq!(indecomposable_gp_tau_rigid(&g, 4).unwrap().len(), all.len());
        for m in &all {
            if m.is_projective() {
                continue;
            }
            let b = bongartz_completion(m, &g).unwrap();
            assert!(gp_verdict(&b.pair.module(), 4).is_gp());
        }
    }

    #[test]
    fn bongartz_of_s1_over_61() {
        let a = alg(EX_61);
        let g = enumerate_exchange_graph(&a, 10_000).unwrap();
        assert!(g.complete);
        let lam = bongartz_completion(&Representation::regular(&a), &g).unwrap();
        assert_eq!(lam.node, 0);
        let s1 = Representation::simple(&a, 0);
        let b = bongartz_completion(&s1, &g).unwrap();
        let labels: Vec<String> = b.pair.summands().iter().map(Representation::label).collect();
        assert_eq!(labels.len(), 4);
        assert!(labels.contains(&"1/3".to_string()) && labels.contains(&"1/2".to_string()));
        assert!(!gp_verdict(&b.pair.module(), 4).is_gp());
    }

    #[test]
    fn dagger_and_mutation_on_every_node() {
        for text in [EX_3E, EX_3D] {
            let a = alg(text);
            let g = enumerate_exchange_graph(&a, 1000).unwrap();
            let gop = enumerate_exchange_graph(&a.opposite(), 1000).unwrap();
            assert_eq!(g.node_count(), gop.node_count());
            for node in &g.nodes {
                let d = dagger(node).unwrap();
                assert!(gop.find(&d).is_some());
                assert!(dagger(&d).unwrap().is_isomorphic(node));
            }
            for e in &g.edges {
                let mu = mutate(&g.nodes[e.to], e.to_position).unwrap();
                assert!(mu.pair.is_isomorphic(&g.nodes[e.from]));
                assert_eq!(mu.position, e.from_position);
            }
        }
    }
}
