use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Algebra, Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// A generator of a two-sided ideal accepted by [`Algebra::quotient_by_ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealGenerator<F> {
    Arrow(usize),
    Element(Relation<F>),
}

/// The surjection `Λ -> Λ/I` on the level of quivers: which vertices and
/// arrows survive and under which new index.
#[derive(Clone, Debug)]
pub struct QuotientMap<F: Field> {
    pub source: Arc<Algebra<F>>,
    pub target: Arc<Algebra<F>>,
    pub vertex_map: Vec<Option<usize>>,
    pub arrow_map: Vec<Option<usize>>,
}

impl<F: Field> QuotientMap<F> {
    fn identity(a: &Arc<Algebra<F>>) -> Self {
        QuotientMap {
            source: a.clone(),
            target: a.clone(),
            vertex_map: (0..a.vertex_count()).map(Some).collect(),
            arrow_map: (0..a.arrow_count()).map(Some).collect(),
        }
    }

    fn then(self, next: QuotientMap<F>) -> Self {
        QuotientMap {
            source: self.source,
            target: next.target,
            vertex_map: self
                .vertex_map
                .iter()
                .map(|v| v.and_then(|v| next.vertex_map[v]))
                .collect(),
            arrow_map: self
                .arrow_map
                .iter()
                .map(|a| a.and_then(|a| next.arrow_map[a]))
                .collect(),
        }
    }
}

/// Rewrites a relation along an arrow map, dropping terms whose paths use a
/// removed arrow (those terms lie in the ideal being factored out).
fn push_relation<F: Field>(r: &Relation<F>, arrow_map: &[Option<usize>]) -> Option<Relation<F>> {
    let terms: Vec<(F, Vec<usize>)> = r
        .terms
        .iter()
        .filter_map(|(c, p)| {
            let np: Option<Vec<usize>> = p.iter().map(|&a| arrow_map[a]).collect();
            np.map(|np| (c.clone(), np))
        })
        .collect();
    let r = Relation { terms }.normalized();
    (!r.terms.is_empty()).then_some(r)
}

impl<F: Field> Algebra<F> {
    /// `Λ/(e)` where `e` is the sum of the idempotents of `kill`.
    pub fn quotient_by_idempotent(self: &Arc<Self>, kill: &[usize]) -> Result<QuotientMap<F>> {
        let kill: BTreeSet<usize> = kill.iter().copied().collect();
        if let Some(&v) = kill.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(Error::Invalid(format!("no vertex with index {v}")));
        }
        if kill.is_empty() {
            return Ok(QuotientMap::identity(self));
        }
        let mut vertex_map = vec![None; self.vertex_count()];
        let mut vertices = Vec::new();
        for v in 0..self.vertex_count() {
            if !kill.contains(&v) {
                vertex_map[v] = Some(vertices.len());
                vertices.push(self.quiver.vertices[v].clone());
            }
        }
        let mut arrow_map = vec![None; self.arrow_count()];
        let mut arrows = Vec::new();
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (vertex_map[a.source], vertex_map[a.target]) {
                arrow_map[i] = Some(arrows.len());
                arrows.push(Arrow {
                    label: a.label.clone(),
                    source: s,
                    target: t,
                });
            }
        }
        let rels = self
            .relations
            .iter()
            .filter_map(|r| push_relation(r, &arrow_map))
            .collect();
        let target = Algebra::with_length_cap(Quiver::new(vertices, arrows)?, rels, self.length_cap)?;
        Ok(QuotientMap {
            source: self.clone(),
            target,
            vertex_map,
            arrow_map,
        })
    }

    /// Quotient by the ideal generated by arrows and homogeneous elements.
    pub fn quotient_by_ideal(
        self: &Arc<Self>,
        generators: &[IdealGenerator<F>],
    ) -> Result<QuotientMap<F>> {
        if generators.is_empty() {
            return Ok(QuotientMap::identity(self));
        }
        let mut deleted = BTreeSet::new();
        let mut extra = Vec::new();
        for g in generators {
            match g {
                IdealGenerator::Arrow(a) => {
                    if *a >= self.arrow_count() {
                        return Err(Error::UnsupportedIdeal(format!("no arrow with index {a}")));
                    }
                    deleted.insert(*a);
                }
                IdealGenerator::Element(r) => {
                    let r = r.normalized();
                    let Some(len) = r.length() else { continue };
                    let ends: BTreeSet<_> = r
                        .terms
                        .iter()
                        .map(|(_, p)| self.quiver.path_endpoints(p))
                        .collect();
                    if len < 2
                        || r.terms.iter().any(|(_, p)| p.len() != len)
                        || ends.len() != 1
                        || ends.contains(&None)
                    {
                        return Err(Error::UnsupportedIdeal(r.describe(&self.quiver)));
                    }
                    extra.push(r);
                }
            }
        }
        let mut arrow_map = vec![None; self.arrow_count()];
        let mut arrows = Vec::new();
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            if !deleted.contains(&i) {
                arrow_map[i] = Some(arrows.len());
                arrows.push(a.clone());
            }
        }
        let rels = self
            .relations
            .iter()
            .chain(extra.iter())
            .filter_map(|r| push_relation(r, &arrow_map))
            .collect();
        let quiver = Quiver::new(self.quiver.vertices.clone(), arrows)?;
        let target = Algebra::with_length_cap(quiver, rels, self.length_cap)?;
        Ok(QuotientMap {
            source: self.clone(),
            target,
            vertex_map: (0..self.vertex_count()).map(Some).collect(),
            arrow_map,
        })
    }

    /// Quotient by the two-sided ideal spanned (as a vector space) by
    /// `elements`. The span must be graded and split along vertex pairs; its
    /// degree 0 part becomes killed vertices, degree 1 part deleted arrows and
    /// higher parts extra relations. Other shapes are rejected.
    pub fn quotient_by_span(self: &Arc<Self>, elements: &[Vec<F>]) -> Result<QuotientMap<F>> {
        let d = self.dim();
        let span = Matrix::from_columns(d, elements);
        let rank = span.rank();
        let n = self.vertex_count();
        let mut components: Vec<((usize, usize, usize), Vec<F>)> = Vec::new();
        for x in elements {
            for s in 0..n {
                for t in 0..n {
                    let mut by_len: std::collections::BTreeMap<usize, Vec<F>> = Default::default();
                    for &k in &self.pair_index[s][t] {
                        if !x[k].is_zero() {
                            by_len
                                .entry(self.basis[k].len())
                                .or_insert_with(|| self.zero_element())[k] = x[k].clone();
                        }
                    }
                    for (l, v) in by_len {
                        components.push(((s, t, l), v));
                    }
                }
            }
        }
        let mut all: Vec<Vec<F>> = elements.to_vec();
        all.extend(components.iter().map(|(_, v)| v.clone()));
        if Matrix::from_columns(d, &all).rank() != rank {
            return Err(Error::UnsupportedIdeal(
                "span is not graded by path length and vertex pair".into(),
            ));
        }
        let mut kill = Vec::new();
        let mut arrows = Vec::new();
        let mut rels = Vec::new();
        let mut keys: Vec<(usize, usize, usize)> = components.iter().map(|(k, _)| *k).collect();
        keys.sort();
        keys.dedup();
        for key in keys {
            let (s, t, l) = key;
            let vecs: Vec<Vec<F>> = components
                .iter()
                .filter(|(k, _)| *k == key)
                .map(|(_, v)| self.pair_coordinates(s, t, v))
                .collect();
            let idx = &self.pair_index[s][t];
            let rows = Matrix::from_rows(&vecs).rref();
            for (r, _) in rows.pivots.iter().enumerate() {
                let row: Vec<(usize, F)> = (0..idx.len())
                    .filter(|&c| !rows.matrix[(r, c)].is_zero())
                    .map(|c| (idx[c], rows.matrix[(r, c)].clone()))
                    .collect();
                match l {
                    0 => kill.push(s),
                    1 if row.len() == 1 => arrows.push(self.basis[row[0].0].arrows[0]),
                    1 => {
                        return Err(Error::UnsupportedIdeal(
                            "degree one part is not spanned by arrows".into(),
                        ))
                    }
                    _ => rels.push(Relation {
                        terms: row
                            .into_iter()
                            .map(|(k, c)| (c, self.basis[k].arrows.clone()))
                            .collect(),
                    }),
                }
            }
        }
        let first = self.quotient_by_idempotent(&kill)?;
        let gens: Vec<IdealGenerator<F>> = arrows
            .iter()
            .filter_map(|&a| first.arrow_map[a].map(IdealGenerator::Arrow))
            .chain(
                rels.iter()
                    .filter_map(|r| push_relation(r, &first.arrow_map))
                    .map(IdealGenerator::Element),
            )
            .collect();
        let second = first.target.quotient_by_ideal(&gens)?;
        let map = first.then(second);
        if map.target.dim() + rank != d {
            return Err(Error::Verification(format!(
                "quotient has dimension {} but expected {}",
                map.target.dim(),
                d - rank
            )));
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::alg;

    #[test]
    fn kill_vertices() {
        let a = alg("vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 1\nrelation: a1*a2\nrelation: a2*a3\nrelation: a3*a1\n");
        let q = a.quotient_by_idempotent(&[0]).unwrap();
        assert_eq!(q.target.dim(), 3);
        assert_eq!(q.target.arrow_count(), 1);
        assert!(q.target.relations().is_empty());
        assert_eq!(a.quotient_by_idempotent(&[0, 1, 2]).unwrap().target.dim(), 0);
        assert_eq!(a.quotient_by_idempotent(&[]).unwrap().target.dim(), 6);
    }

    #[test]
    fn delete_kronecker_arrow() {
        let a = alg("vertices: 1 2\narrow x: 1 -> 2\narrow y: 1 -> 2\n");
        let q = a
            .quotient_by_ideal(&[super::IdealGenerator::Arrow(1)])
            .unwrap();
        assert_eq!(q.target.dim(), 3);
        assert_eq!(q.arrow_map, vec![Some(0), None]);
        assert_eq!(a.quotient_by_ideal(&[]).unwrap().target.dim(), 4);
    }

    #[test]
    fn relation_terms_through_killed_vertices_drop() {
        // commutativity square, kill one corner: the surviving term becomes monomial
        let a = alg("vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\nrelation: a*b - c*d\n");
        assert_eq!(a.dim(), 9);
        let q = a.quotient_by_idempotent(&[2]).unwrap();
        assert_eq!(q.target.dim(), 5);
    }

    #[test]
    fn span_with_mixed_arrows_is_rejected() {
        let a = alg("vertices: 1 2\narrow x: 1 -> 2\narrow y: 1 -> 2\n");
        let mut v = a.zero_element();
        v[a.arrow_basis_index(0)] = crate::field::Rational::from(num_bigint::BigInt::from(1));
        v[a.arrow_basis_index(1)] = crate::field::Rational::from(num_bigint::BigInt::from(-1));
        assert!(a.quotient_by_span(&[v]).is_err());
    }
}
