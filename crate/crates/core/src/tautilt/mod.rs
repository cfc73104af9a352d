//! τ-rigid and support τ-tilting pairs, the dagger bijection, mutation and
//! exchange graphs.

mod finiteness;
mod graph;
mod mutation;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::algebra::{Algebra, QuotientMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{gp_verdict, tau, transpose, GpVerdict};
use crate::rep::{IsoKey, Representation};

pub use finiteness::{cm_tau_finiteness, CmRoute, CmStatus, CmTauVerdict};
pub use graph::{
    bongartz_completion, enumerate_exchange_graph, gp_filter, indecomposable_gp_tau_rigid,
    BongartzCompletion, Edge, ExchangeGraph, GpFilter, DEFAULT_BUDGET,
};
pub use mutation::{mutate, Direction, Mutation};

/// `Hom(M, τM) = 0`.
pub fn is_tau_rigid<F: Field>(m: &Representation<F>) -> bool {
    m.hom_dim(&tau(m)) == 0
}

/// A pair `(M, P)` with `M` basic, stored as its indecomposable summands in
/// a canonical order, and `P = ⊕ P(v)` stored as sorted vertices.
///
/// Positions index the summands first and then the vertices of `P`.
#[derive(Clone, Debug)]
pub struct RigidPair<F: Field> {
    algebra: Arc<Algebra<F>>,
    summands: Vec<Representation<F>>,
    taus: Vec<Representation<F>>,
    projective_vertex: Vec<Option<usize>>,
    p: Vec<usize>,
    tau_rigid: bool,
    pair_condition: bool,
    gp: Option<GpVerdict>,
}

/// A verified pair with `|M| + |P| = |Λ|`.
#[derive(Clone, Debug)]
pub struct SupportTauTiltingPair<F: Field>(RigidPair<F>);

impl<F: Field> Deref for SupportTauTiltingPair<F> {
    type Target = RigidPair<F>;

    fn deref(&self) -> &RigidPair<F> {
        &self.0
    }
}

impl<F: Field> SupportTauTiltingPair<F> {
    pub fn into_inner(self) -> RigidPair<F> {
        self.0
    }
}

/// Sorts summands by `(label, dims, fingerprint)`; returns the permutation
/// `old index -> new index`.
fn canonical_order<F: Field>(summands: &[Representation<F>]) -> Vec<usize> {
    let keys: Vec<(String, Vec<usize>, String)> = summands
        .iter()
        .map(|s| (s.label(), s.dims().to_vec(), s.fingerprint()))
        .collect();
    let mut order: Vec<usize> = (0..summands.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut perm = vec![0; summands.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

impl<F: Field> RigidPair<F> {
    /// Decomposes `m` and checks basicness; flags are computed, the GP
    /// verdict is not.
    pub fn from_module(m: &Representation<F>, p: &[usize]) -> Result<Self> {
        let d = m.decompose()?;
        if let Some(s) = d.summands.iter().find(|s| s.multiplicity > 1) {
            return Err(Error::NotBasic(format!(
                "summand {} occurs {} times",
                s.module.label(),
                s.multiplicity
            )));
        }
        let summands = d.summands.into_iter().map(|s| s.module).collect();
        Self::from_summands(m.algebra(), summands, p.to_vec())
    }

    /// Builds a pair from indecomposable summands, which must be pairwise
    /// non-isomorphic.
    pub fn from_summands(
        algebra: &Arc<Algebra<F>>,
        summands: Vec<Representation<F>>,
        p: Vec<usize>,
    ) -> Result<Self> {
        Self::assemble(algebra, summands.into_iter().map(|s| (s, None)).collect(), p)
            .map(|(pair, _)| pair)
    }

    /// Core constructor. Summands may come with their `τ` already known.
    /// Returns the pair and the permutation applied to the summands.
    pub(crate) fn assemble(
        algebra: &Arc<Algebra<F>>,
        parts: Vec<(Representation<F>, Option<Representation<F>>)>,
        mut p: Vec<usize>,
    ) -> Result<(Self, Vec<usize>)> {
        let nv = algebra.vertex_count();
        p.sort_unstable();
        if p.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotBasic("a vertex is repeated in P".into()));
        }
        if let Some(v) = p.iter().find(|&&v| v >= nv) {
            return Err(Error::InvalidPair(format!("vertex index {v} out of range")));
        }
        for (s, _) in &parts {
            if !Arc::ptr_eq(s.algebra(), algebra) && s.algebra().id() != algebra.id() {
                return Err(Error::AlgebraMismatch);
            }
            if s.is_zero() {
                return Err(Error::InvalidPair("zero summand".into()));
            }
        }
        let mods: Vec<Representation<F>> = parts.iter().map(|(s, _)| s.clone()).collect();
        let perm = canonical_order(&mods);
        let mut slots: Vec<Option<(Representation<F>, Option<Representation<F>>)>> =
            (0..parts.len()).map(|_| None).collect();
        for (old, part) in parts.into_iter().enumerate() {
            slots[perm[old]] = Some(part);
        }
        let mut summands = Vec::with_capacity(slots.len());
        let mut taus = Vec::with_capacity(slots.len());
        for (s, t) in slots.into_iter().map(Option::unwrap) {
            taus.push(t.unwrap_or_else(|| tau(&s)));
            summands.push(s);
        }
        for i in 0..summands.len() {
            for j in 0..i {
                if summands[i].dims() == summands[j].dims()
                    && summands[i].indecomposable_iso(&summands[j]).is_some()
                {
                    return Err(Error::NotBasic(format!(
                        "summand {} occurs twice",
                        summands[i].label()
                    )));
                }
            }
        }
        let projective_vertex = summands
            .iter()
            .map(Representation::indecomposable_projective_vertex)
            .collect();
        let tau_rigid = summands
            .iter()
            .all(|x| taus.iter().all(|t| t.is_zero() || x.hom_dim(t) == 0));
        let pair_condition = summands
            .iter()
            .all(|x| p.iter().all(|&v| x.dim_at(v) == 0));
        let pair = RigidPair {
            algebra: algebra.clone(),
            summands,
            taus,
            projective_vertex,
            p,
            tau_rigid,
            pair_condition,
            gp: None,
        };
        Ok((pair, perm))
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    /// The indecomposable summands of `M`.
    pub fn summands(&self) -> &[Representation<F>] {
        &self.summands
    }

    /// `τ` of each summand.
    pub fn taus(&self) -> &[Representation<F>] {
        &self.taus
    }

    /// `Some(v)` for a summand isomorphic to `P(v)`.
    pub fn projective_vertices(&self) -> &[Option<usize>] {
        &self.projective_vertex
    }

    /// The vertices `v` with `P(v)` a summand of `P`.
    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn module(&self) -> Representation<F> {
        Representation::direct_sum(&self.algebra, &self.summands)
    }

    pub fn tau_module(&self) -> Representation<F> {
        Representation::direct_sum(&self.algebra, &self.taus)
    }

    pub fn is_tau_rigid(&self) -> bool {
        self.tau_rigid
    }

    pub fn pair_condition(&self) -> bool {
        self.pair_condition
    }

    /// `|M| + |P|`.
    pub fn size(&self) -> usize {
        self.summands.len() + self.p.len()
    }

    pub fn is_support_tau_tilting(&self) -> bool {
        self.tau_rigid && self.pair_condition && self.size() == self.algebra.vertex_count()
    }

    /// τ-tilting: support τ-tilting with `P = 0`.
    pub fn is_tau_tilting(&self) -> bool {
        self.is_support_tau_tilting() && self.p.is_empty()
    }

    pub fn gp(&self) -> Option<&GpVerdict> {
        self.gp.as_ref()
    }

    /// Computes and stores the GP verdict of `M`.
    pub fn compute_gp(&mut self, bound: usize) -> &GpVerdict {
        let v = gp_verdict(&self.module(), bound);
        self.gp.insert(v)
    }

    pub(crate) fn set_gp(&mut self, v: GpVerdict) {
        self.gp = Some(v);
    }

    /// Bracket label `[M1|M2|…]` with an empty slot for each vertex of `P`.
    pub fn bracket_label(&self) -> String {
        let mut slots: Vec<String> = self.summands.iter().map(Representation::label).collect();
        slots.extend(self.p.iter().map(|_| " ".to_string()));
        format!("[{}]", slots.join("|"))
    }

    /// Isomorphism-invariant bucket key.
    pub fn key(&self) -> (Vec<usize>, Vec<IsoKey>) {
        let mut keys: Vec<IsoKey> = self.summands.iter().map(Representation::iso_key).collect();
        keys.sort();
        (self.p.clone(), keys)
    }

    /// Position of a summand isomorphic to `x`.
    pub fn summand_position(&self, x: &Representation<F>) -> Option<usize> {
        self.summands
            .iter()
            .position(|s| s.dims() == x.dims() && s.indecomposable_iso(x).is_some())
    }

    /// Same `P` and isomorphic `M`.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if self.p != other.p || self.summands.len() != other.summands.len() {
            return false;
        }
        let mut used = vec![false; other.summands.len()];
        for s in &self.summands {
            let hit = other.summands.iter().enumerate().find(|(j, o)| {
                !used[*j] && o.dims() == s.dims() && s.indecomposable_iso(o).is_some()
            });
            match hit {
                Some((j, _)) => used[j] = true,
                None => return false,
            }
        }
        true
    }

    pub fn into_support_tau_tilting(self) -> Result<SupportTauTiltingPair<F>> {
        if !self.tau_rigid {
            return Err(Error::NotTauRigid);
        }
        if !self.pair_condition {
            return Err(Error::InvalidPair("Hom(P, M) is nonzero".into()));
        }
        let n = self.algebra.vertex_count();
        if self.size() != n {
            return Err(Error::InvalidPair(format!(
                "|M| + |P| = {} but the algebra has {n} vertices",
                self.size()
            )));
        }
        Ok(SupportTauTiltingPair(self))
    }
}

impl<F: Field> fmt::Display for RigidPair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket_label())
    }
}

/// Computes every flag of `(M, P)` including the GP verdict of `M`.
pub fn check_pair<F: Field>(m: &Representation<F>, p: &[usize], bound: usize) -> Result<RigidPair<F>> {
    let mut pair = RigidPair::from_module(m, p)?;
    pair.compute_gp(bound);
    Ok(pair)
}

pub fn check_support_tau_tilting<F: Field>(
    m: &Representation<F>,
    p: &[usize],
    bound: usize,
) -> Result<SupportTauTiltingPair<F>> {
    check_pair(m, p, bound)?.into_support_tau_tilting()
}

/// `(M, P)† = (Tr M_np ⊕ P*, M_p*)` over the opposite algebra, together
/// with the induced map on positions.
pub fn dagger_with_positions<F: Field>(pair: &RigidPair<F>) -> Result<(RigidPair<F>, Vec<usize>)> {
    if !pair.tau_rigid || !pair.pair_condition {
        return Err(Error::NotTauRigid);
    }
    let op = pair.algebra.opposite();
    let mut parts = Vec::new();
    let mut new_p = Vec::new();
    // for each old position: Ok(index into parts) or Err(vertex of new P)
    let mut origin: Vec<std::result::Result<usize, usize>> = Vec::new();
    for (s, pv) in pair.summands.iter().zip(&pair.projective_vertex) {
        match pv {
            Some(v) => {
                new_p.push(*v);
                origin.push(Err(*v));
            }
            None => {
                origin.push(Ok(parts.len()));
                parts.push((transpose(s), None));
            }
        }
    }
    for &v in &pair.p {
        origin.push(Ok(parts.len()));
        // τ of a projective is zero
        parts.push((Representation::projective(&op, v), Some(Representation::zero(&op))));
    }
    let (out, perm) = RigidPair::assemble(&op, parts, new_p)?;
    if !out.tau_rigid || !out.pair_condition {
        return Err(Error::Verification(format!(
            "dagger of {} is not a τ-rigid pair",
            pair.bracket_label()
        )));
    }
    let m = out.summands.len();
    let positions = origin
        .into_iter()
        .map(|o| match o {
            Ok(k) => perm[k],
            Err(v) => m + out.p.binary_search(&v).expect("vertex recorded in P"),
        })
        .collect();
    Ok((out, positions))
}

pub fn dagger<F: Field>(pair: &RigidPair<F>) -> Result<RigidPair<F>> {
    dagger_with_positions(pair).map(|(p, _)| p)
}

/// `M` as a faithful module over `Λ/ann M`, with the quotient map. Fails
/// when the annihilator is not of a supported ideal shape.
pub fn over_annihilator_quotient<F: Field>(
    m: &Representation<F>,
) -> Result<(QuotientMap<F>, Representation<F>)> {
    let q = m.algebra().quotient_by_span(&m.annihilator())?;
    let r = m.restrict(&q)?;
    Ok((q, r))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::homology::GpStatus;
    use crate::rep::tests::{alg, EX_3D, EX_3E};

    pub(crate) const EX_36: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow b2: 2 -> 1\narrow a2: 2 -> 3\narrow b1: 3 -> 2\nrelation: a1*b2\nrelation: b1*a2\nrelation: b2*a1 - a2*b1\n";
    pub(crate) const EX_61: &str = "vertices: 1 2 3 4\narrow al: 1 -> 2\narrow be: 2 -> 4\narrow ga: 1 -> 3\narrow et: 3 -> 4\narrow pi: 4 -> 1\nrelation: al*be - ga*et\nrelation: be*pi\nrelation: pi*al\nrelation: et*pi\nrelation: pi*ga\n";
    pub(crate) const LOCAL: &str = "vertices: 1\narrow x: 1 -> 1\nrelation: x*x\n";

    /// `T = S(2) ⊕ P(2)` over 3e.
    pub(crate) fn t_3e() -> Representation<crate::Rational> {
        let a = alg(EX_3E);
        Representation::simple(&a, 1).direct_sum_with(&Representation::projective(&a, 1))
    }

    #[test]
    fn tau_rigidity() {
        let a = alg(EX_61);
        assert!(is_tau_rigid(&Representation::regular(&a)));
        assert!(is_tau_rigid(&Representation::simple(&a, 0)));
        let l = alg(LOCAL);
        assert!(!is_tau_rigid(&Representation::simple(&l, 0)));
    }

    #[test]
    fn trivial_pairs() {
        let a = alg(EX_36);
        let top = check_support_tau_tilting(&Representation::regular(&a), &[], 4).unwrap();
        assert!(top.gp().unwrap().is_gp());
        assert_eq!(top.summands().len(), 3);
        let bottom = check_support_tau_tilting(&Representation::zero(&a), &[0, 1, 2], 4).unwrap();
        assert_eq!(bottom.bracket_label(), "[ | | ]");
    }

    #[test]
    fn pair_of_3e() {
        let t = t_3e();
        let pair = check_support_tau_tilting(&t, &[0], 4).unwrap();
        assert_eq!(pair.gp().unwrap().status, GpStatus::CertifiedGP);
        assert_eq!(pair.bracket_label(), "[2|2/3| ]");
        // (T, P(2)) violates the pair condition
        let bad = check_pair(&t, &[1], 4).unwrap();
        assert!(!bad.pair_condition());
    }

    #[test]
    fn t_over_its_annihilator_quotient() {
        let t = t_3e();
        let (q, r) = over_annihilator_quotient(&t).unwrap();
        assert_eq!(q.target.vertex_count(), 2);
        let pair = check_support_tau_tilting(&r, &[], 4).unwrap();
        assert!(pair.is_tau_tilting());
        assert_eq!(pair.gp().unwrap().status, GpStatus::CertifiedNotGP);
        assert!(!r.is_isomorphic(&Representation::regular(&q.target)));
    }

    #[test]
    fn non_basic_rejected() {
        let a = alg(EX_3E);
        let s = Representation::simple(&a, 0);
        let e = RigidPair::from_module(&s.direct_sum_with(&s), &[]).unwrap_err();
        assert!(matches!(e, Error::NotBasic(ref m) if m.contains('1')));
    }

    #[test]
    fn dagger_examples() {
        let a = alg(EX_3D);
        let n = a.vertex_count();
        let top = RigidPair::from_module(&Representation::regular(&a), &[]).unwrap();
        let d = dagger(&top).unwrap();
        assert!(d.summands().is_empty());
        assert_eq!(d.p(), &[0, 1, 2]);
        assert!(Arc::ptr_eq(d.algebra(), &a.opposite()));
        let back = dagger(&d).unwrap();
        assert!(back.is_isomorphic(&top));
        assert!(Arc::ptr_eq(back.algebra(), &a));
        let bottom = RigidPair::from_module(&Representation::zero(&a), &[0, 1, 2]).unwrap();
        let d = dagger(&bottom).unwrap();
        assert_eq!(d.summands().len(), n);
        assert!(d.p().is_empty());

        let pair = RigidPair::from_module(&t_3e(), &[0]).unwrap();
        let (d, pos) = dagger_with_positions(&pair).unwrap();
        assert!(d.is_support_tau_tilting());
        assert!(gp_verdict(&d.module(), 4).is_gp());
        // P(2) becomes the vertex 2 of P†, P(1) becomes a summand
        assert_eq!(pos[1], 2);
        assert_eq!(d.projective_vertices()[pos[2]], Some(0));
        assert!(dagger(&d).unwrap().is_isomorphic(&pair));
    }
}
