//! Bound quiver algebras `KQ/I` with length-homogeneous admissible relations.
//!
//! Paths compose left to right: `a*b` walks `a` first, so it needs
//! `target(a) = source(b)`.

mod parse;
mod quotient;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock, RwLock, Weak};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub use parse::{parse_algebra, AlgebraSpec, FieldChoice};
pub use quotient::{IdealGenerator, QuotientMap};

pub const DEFAULT_LENGTH_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate label {v}")));
            }
        }
        for a in &arrows {
            if !seen.insert(a.label.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate label {}", a.label)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has an undeclared endpoint",
                    a.label
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Quiver from `(label, source label, target label)` triples.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| {
            vs.iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {l}")))
        };
        let mut arr = Vec::new();
        for (l, s, t) in arrows {
            arr.push(Arrow {
                label: l.to_string(),
                source: find(s)?,
                target: find(t)?,
            });
        }
        Quiver::new(vs, arr)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    fn path_endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    fn labels(&self, path: &[usize]) -> Vec<&str> {
        path.iter().map(|&a| self.arrows[a].label.as_str()).collect()
    }
}

/// A homogeneous combination of parallel paths, given as arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation<F> {
    pub terms: Vec<(F, Vec<usize>)>,
}

impl<F: Field> Relation<F> {
    pub fn monomial(path: Vec<usize>) -> Self {
        Relation {
            terms: vec![(F::one(), path)],
        }
    }

    /// Merges repeated paths and drops zero coefficients.
    fn normalized(&self) -> Self {
        let mut acc: BTreeMap<Vec<usize>, F> = BTreeMap::new();
        for (c, p) in &self.terms {
            let e = acc.entry(p.clone()).or_insert_with(F::zero);
            *e = e.add_ref(c);
        }
        Relation {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (c, p))
                .collect(),
        }
    }

    fn length(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.len())
    }

    fn reversed(&self) -> Self {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                .collect(),
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}*{}", c, q.labels(p).join("*"));
        }
        s
    }
}

/// A basis element of the algebra: the residue of a path. Length-zero paths
/// are the vertex idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

type Sparse<F> = Vec<(usize, F)>;

pub struct Algebra<F: Field> {
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    length_cap: usize,
    basis: Vec<BasisPath>,
    pair_index: Vec<Vec<Vec<usize>>>,
    /// normal forms of every path with nonzero residue, keyed by arrow sequence
    normal_forms: HashMap<Vec<usize>, Sparse<F>>,
    mult: Vec<Vec<Sparse<F>>>,
    loewy_length: usize,
    id: String,
    opposite: OnceLock<Arc<Algebra<F>>>,
    parent: OnceLock<Weak<Algebra<F>>>,
    /// memoized homological probes, keyed by a short description
    probes: RwLock<HashMap<String, Option<usize>>>,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("id", &self.id)
            .field("vertices", &self.quiver.vertices)
            .field("dim", &self.dim())
            .finish()
    }
}

impl<F: Field> Algebra<F> {
    pub fn new(quiver: Quiver, relations: Vec<Relation<F>>) -> Result<Arc<Self>> {
        Self::with_length_cap(quiver, relations, DEFAULT_LENGTH_CAP)
    }

    pub fn with_length_cap(
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        length_cap: usize,
    ) -> Result<Arc<Self>> {
        let mut rels = Vec::new();
        for r in &relations {
            let r = r.normalized();
            let Some(len) = r.length() else { continue };
            if len < 2 {
                return Err(Error::NonHomogeneous(format!(
                    "{} has a term of length < 2",
                    r.describe(&quiver)
                )));
            }
            let mut ends = None;
            for (_, p) in &r.terms {
                if p.len() != len {
                    return Err(Error::NonHomogeneous(format!(
                        "{} mixes path lengths",
                        r.describe(&quiver)
                    )));
                }
                let e = quiver.path_endpoints(p).ok_or_else(|| {
                    Error::NonHomogeneous(format!("{} contains a non-path", r.describe(&quiver)))
                })?;
                if ends.is_some_and(|x| x != e) {
                    return Err(Error::NonHomogeneous(format!(
                        "{} has non-parallel terms",
                        r.describe(&quiver)
                    )));
                }
                ends = Some(e);
            }
            rels.push(r);
        }
        let (basis, normal_forms, loewy_length) = compute_basis(&quiver, &rels, length_cap)?;
        let n = quiver.vertex_count();
        let mut pair_index = vec![vec![Vec::new(); n]; n];
        for (k, b) in basis.iter().enumerate() {
            pair_index[b.source][b.target].push(k);
        }
        let id = content_id(&quiver, &rels);
        let mut alg = Algebra {
            quiver,
            relations: rels,
            length_cap,
            basis,
            pair_index,
            normal_forms,
            mult: Vec::new(),
            loewy_length,
            id,
            opposite: OnceLock::new(),
            parent: OnceLock::new(),
            probes: RwLock::new(HashMap::new()),
        };
        alg.mult = alg.build_mult_table();
        Ok(Arc::new(alg))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Content hash of quiver, relations and field; stable across runs.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    /// Basis indices of `e_i Λ e_j`, i.e. residues of paths from `i` to `j`.
    pub fn pair_basis(&self, i: usize, j: usize) -> &[usize] {
        &self.pair_index[i][j]
    }

    /// Largest length of a nonzero path residue.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| !self.basis[k].is_empty()).collect()
    }

    pub fn is_radical_square_zero(&self) -> bool {
        self.basis.iter().all(|b| b.len() <= 1)
    }

    pub fn is_semisimple(&self) -> bool {
        self.arrow_count() == 0
    }

    pub fn vertex_basis_index(&self, v: usize) -> usize {
        self.pair_index[v][v][0]
    }

    pub fn arrow_basis_index(&self, a: usize) -> usize {
        let arr = &self.quiver.arrows[a];
        *self.pair_index[arr.source][arr.target]
            .iter()
            .find(|&&k| self.basis[k].arrows == [a])
            .expect("arrows are never killed by admissible relations")
    }

    pub fn zero_element(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_element(&self, k: usize) -> Vec<F> {
        let mut v = self.zero_element();
        v[k] = F::one();
        v
    }

    /// Residue of an arbitrary path (arrow indices). Empty paths are not
    /// accepted here since they do not determine a vertex.
    pub fn path_element(&self, path: &[usize]) -> Vec<F> {
        let mut v = self.zero_element();
        for (k, c) in self.normal_form(path) {
            v[k] = v[k].add_ref(&c);
        }
        v
    }

    fn normal_form(&self, path: &[usize]) -> Sparse<F> {
        if path.is_empty() {
            return Vec::new();
        }
        if self.quiver.path_endpoints(path).is_none() {
            return Vec::new();
        }
        if let Some(nf) = self.normal_forms.get(path) {
            return nf.clone();
        }
        // every surviving path is stored, so a missing one lies in the ideal
        Vec::new()
    }

    fn build_mult_table(&self) -> Vec<Vec<Sparse<F>>> {
        let d = self.dim();
        let mut table = vec![vec![Vec::new(); d]; d];
        for (x, bx) in self.basis.iter().enumerate() {
            for (y, by) in self.basis.iter().enumerate() {
                if bx.target != by.source {
                    continue;
                }
                table[x][y] = if bx.is_empty() {
                    vec![(y, F::one())]
                } else if by.is_empty() {
                    vec![(x, F::one())]
                } else {
                    let mut p = bx.arrows.clone();
                    p.extend_from_slice(&by.arrows);
                    self.normal_form(&p)
                };
            }
        }
        table
    }

    /// Product of two basis elements as a sparse combination.
    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, F)] {
        &self.mult[x][y]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in &self.mult[i][j] {
                    out[*k] = out[*k].add_ref(&ab.mul_ref(c));
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by `x` restricted to `e_i Λ`, mapping the
    /// basis of `e_i Λ e_u` to `e_i Λ e_v`. Used for the arrow action on
    /// projectives.
    pub fn right_mult_block(&self, i: usize, u: usize, v: usize, x: usize) -> Matrix<F> {
        let from = &self.pair_index[i][u];
        let to = &self.pair_index[i][v];
        let mut m: Matrix<F> = Matrix::zeros(to.len(), from.len());
        for (c, &b) in from.iter().enumerate() {
            for (k, coef) in &self.mult[b][x] {
                let r = to.iter().position(|t| t == k).expect("product stays in e_i Λ e_v");
                m[(r, c)] = m[(r, c)].add_ref(coef);
            }
        }
        m
    }

    /// Coordinates of an element of `e_i Λ e_j` in the basis `pair_basis(i, j)`.
    pub fn pair_coordinates(&self, i: usize, j: usize, x: &[F]) -> Vec<F> {
        self.pair_index[i][j].iter().map(|&k| x[k].clone()).collect()
    }

    pub fn from_pair_coordinates(&self, i: usize, j: usize, c: &[F]) -> Vec<F> {
        let mut v = self.zero_element();
        for (&k, x) in self.pair_index[i][j].iter().zip(c) {
            v[k] = x.clone();
        }
        v
    }

    /// The opposite algebra: arrows reversed, labels kept, relation paths
    /// reversed. `a.opposite().opposite()` is `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(p) = self.parent.get().and_then(Weak::upgrade) {
            return p;
        }
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(Relation::reversed).collect();
                let op = Algebra::with_length_cap(self.quiver.reversed(), rels, self.length_cap)
                    .expect("the opposite of an admissible presentation is admissible");
                let _ = op.parent.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// The anti-isomorphism `Λ -> Λ^op` sending a path to its reverse, in
    /// the opposite algebra's basis.
    pub fn to_opposite(self: &Arc<Self>, x: &[F]) -> Vec<F> {
        let op = self.opposite();
        let mut out = op.zero_element();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = &self.basis[k];
            if b.is_empty() {
                let i = op.vertex_basis_index(b.source);
                out[i] = out[i].add_ref(c);
            } else {
                let rev: Vec<usize> = b.arrows.iter().rev().copied().collect();
                for (j, d) in op.normal_form(&rev) {
                    out[j] = out[j].add_ref(&c.mul_ref(&d));
                }
            }
        }
        out
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn path_label(&self, k: usize) -> String {
        let b = &self.basis[k];
        if b.is_empty() {
            format!("e{}", self.quiver.vertices[b.source])
        } else {
            self.quiver.labels(&b.arrows).join("*")
        }
    }

    pub(crate) fn memo(&self, key: &str, compute: impl FnOnce() -> Option<usize>) -> Option<usize> {
        if let Some(v) = self.probes.read().unwrap().get(key) {
            return *v;
        }
        let v = compute();
        self.probes.write().unwrap().insert(key.to_string(), v);
        v
    }

    /// `Σ c_t · path_t` evaluated in the algebra.
    pub fn evaluate(&self, rel: &Relation<F>) -> Vec<F> {
        let mut out = self.zero_element();
        for (c, p) in &rel.terms {
            for (k, d) in self.normal_form(p) {
                out[k] = out[k].add_ref(&c.mul_ref(&d));
            }
        }
        out
    }
}

fn content_id<F: Field>(q: &Quiver, rels: &[Relation<F>]) -> String {
    let mut s = format!("field={};vertices={}", F::field_name(), q.vertices.join(","));
    for a in &q.arrows {
        let _ = write!(s, ";arrow {}:{}->{}", a.label, a.source, a.target);
    }
    for r in rels {
        let _ = write!(s, ";rel {}", r.describe(q));
    }
    let digest = Sha256::digest(s.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

type BasisData<F> = (Vec<BasisPath>, HashMap<Vec<usize>, Sparse<F>>, usize);

/// Degree-by-degree computation of the path basis. At length `l` only paths
/// whose prefix and suffix of length `l - 1` survive can be nonzero; the
/// degree-`l` ideal is spanned by the relations of that length and by the
/// degree-`(l-1)` ideal multiplied by arrows on either side. Columns are
/// ordered lexicographically descending so that pivots, which are rewritten,
/// are the largest paths.
fn compute_basis<F: Field>(
    q: &Quiver,
    rels: &[Relation<F>],
    cap: usize,
) -> Result<BasisData<F>> {
    let mut basis: Vec<BasisPath> = (0..q.vertex_count())
        .map(|v| BasisPath {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut nf: HashMap<Vec<usize>, Sparse<F>> = HashMap::new();
    let mut arrows: Vec<usize> = (0..q.arrows.len()).collect();
    arrows.sort_by(|&a, &b| q.arrows[a].label.cmp(&q.arrows[b].label));
    for &a in &arrows {
        nf.insert(vec![a], vec![(basis.len(), F::one())]);
        basis.push(BasisPath {
            source: q.arrows[a].source,
            target: q.arrows[a].target,
            arrows: vec![a],
        });
    }
    let mut alive: Vec<Vec<usize>> = arrows.iter().map(|&a| vec![a]).collect();
    let mut ideal_prev: Vec<Vec<(Vec<usize>, F)>> = Vec::new();
    let mut loewy = if q.arrows.is_empty() { 0 } else { 1 };
    let mut len = 1;
    while !alive.is_empty() {
        len += 1;
        let alive_set: std::collections::HashSet<&Vec<usize>> = alive.iter().collect();
        let mut cols: Vec<Vec<usize>> = Vec::new();
        for p in &alive {
            let end = q.arrows[*p.last().unwrap()].target;
            for &a in &arrows {
                if q.arrows[a].source != end {
                    continue;
                }
                let mut np = p.clone();
                np.push(a);
                if alive_set.contains(&np[1..].to_vec()) {
                    cols.push(np);
                }
            }
        }
        if cols.is_empty() {
            break;
        }
        if len > cap {
            return Err(Error::LengthCap(cap));
        }
        cols.sort_by(|x, y| q.labels(y).cmp(&q.labels(x)));
        cols.dedup();
        let col_of: HashMap<&Vec<usize>, usize> =
            cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows: Vec<Vec<F>> = Vec::new();
        let push_row = |terms: &mut dyn Iterator<Item = (Vec<usize>, F)>, rows: &mut Vec<Vec<F>>| {
            let mut row = vec![F::zero(); cols.len()];
            let mut any = false;
            for (p, c) in terms {
                if let Some(&i) = col_of.get(&p) {
                    row[i] = row[i].add_ref(&c);
                    any = true;
                }
            }
            if any && row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        };
        for r in rels.iter().filter(|r| r.length() == Some(len)) {
            push_row(&mut r.terms.iter().map(|(c, p)| (p.clone(), c.clone())), &mut rows);
        }
        for g in &ideal_prev {
            for &a in &arrows {
                push_row(
                    &mut g.iter().map(|(p, c)| {
                        let mut np = p.clone();
                        np.push(a);
                        (np, c.clone())
                    }),
                    &mut rows,
                );
                push_row(
                    &mut g.iter().map(|(p, c)| {
                        let mut np = vec![a];
                        np.extend_from_slice(p);
                        (np, c.clone())
                    }),
                    &mut rows,
                );
            }
        }
        let rref = if rows.is_empty() {
            crate::linalg::Rref {
                matrix: Matrix::zeros(0, cols.len()),
                pivots: Vec::new(),
            }
        } else {
            Matrix::from_rows(&rows).rref()
        };
        let mut is_pivot = vec![false; cols.len()];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut free: Vec<usize> = (0..cols.len()).filter(|&c| !is_pivot[c]).collect();
        free.reverse(); // ascending lex order
        let mut index_of_col = HashMap::new();
        for &c in &free {
            let (s, t) = q.path_endpoints(&cols[c]).unwrap();
            index_of_col.insert(c, basis.len());
            basis.push(BasisPath {
                source: s,
                target: t,
                arrows: cols[c].clone(),
            });
            nf.insert(cols[c].clone(), vec![(basis.len() - 1, F::one())]);
        }
        let mut next_alive: Vec<Vec<usize>> = free.iter().map(|&c| cols[c].clone()).collect();
        for (r, &p) in rref.pivots.iter().enumerate() {
            let mut form = Vec::new();
            for &c in &free {
                let x = &rref.matrix[(r, c)];
                if !x.is_zero() {
                    form.push((index_of_col[&c], -x.clone()));
                }
            }
            form.sort_by_key(|(k, _)| *k);
            if !form.is_empty() {
                next_alive.push(cols[p].clone());
                nf.insert(cols[p].clone(), form);
            }
        }
        ideal_prev = (0..rref.pivots.len())
            .map(|r| {
                (0..cols.len())
                    .filter(|&c| !rref.matrix[(r, c)].is_zero())
                    .map(|c| (cols[c].clone(), rref.matrix[(r, c)].clone()))
                    .collect()
            })
            .collect();
        if !free.is_empty() {
            loewy = len;
        }
        alive = next_alive;
    }
    Ok((basis, nf, loewy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num_traits::Zero;

    pub(crate) fn alg(text: &str) -> Arc<Algebra<Rational>> {
        parse_algebra(text).unwrap().build::<Rational>().unwrap()
    }

    const EX_3D: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 1\narrow b2: 2 -> 3\nrelation: a1*a2\nrelation: a2*a1\n";
    const EX_3E: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 1\nrelation: a1*a2\nrelation: a2*a3\nrelation: a3*a1\n";
    const EX_36: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow b2: 2 -> 1\narrow a2: 2 -> 3\narrow b1: 3 -> 2\nrelation: a1*b2\nrelation: b1*a2\nrelation: b2*a1 - a2*b1\n";

    #[test]
    fn one_vertex_algebra() {
        let a = alg("vertices: 1\n");
        assert_eq!(a.dim(), 1);
        assert!(a.is_semisimple());
        assert!(a.radical_basis().is_empty());
        assert_eq!(a.opposite().dim(), 1);
    }

    #[test]
    fn example_3d_basis() {
        let a = alg(EX_3D);
        assert_eq!(a.dim(), 7);
        let sizes: Vec<usize> = (0..3)
            .map(|i| (0..3).map(|j| a.pair_basis(i, j).len()).sum())
            .collect();
        assert_eq!(sizes, vec![3, 3, 1]);
        let rad: Vec<String> = a.radical_basis().iter().map(|&k| a.path_label(k)).collect();
        assert_eq!(rad, vec!["a1", "a2", "b2", "a1*b2"]);
        assert!(!a.is_radical_square_zero());
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn example_3e_basis() {
        let a = alg(EX_3E);
        assert_eq!(a.dim(), 6);
        assert_eq!(a.loewy_length(), 1);
        assert!(a.is_radical_square_zero());
        assert_eq!(a.radical_basis().len(), 3);
        let op = a.opposite();
        assert_eq!(op.dim(), 6);
        assert!(op.is_radical_square_zero());
    }

    #[test]
    fn example_36_commutativity() {
        let a = alg(EX_36);
        assert_eq!(a.dim(), 10);
        assert_eq!(a.opposite().dim(), 10);
        // b2*a1 and a2*b1 are identified, and nonzero
        let b2 = a.quiver().arrow_index("b2").unwrap();
        let a1 = a.quiver().arrow_index("a1").unwrap();
        let a2 = a.quiver().arrow_index("a2").unwrap();
        let b1 = a.quiver().arrow_index("b1").unwrap();
        let x = a.path_element(&[b2, a1]);
        assert!(x.iter().any(|c| !c.is_zero()));
        assert_eq!(x, a.path_element(&[a2, b1]));
    }

    #[test]
    fn kronecker_opposite() {
        let a = alg("vertices: 1 2\narrow x: 1 -> 2\narrow y: 1 -> 2\n");
        assert_eq!(a.dim(), 4);
        let op = a.opposite();
        assert_eq!(op.quiver().arrows()[0].source, 1);
        assert_eq!(op.dim(), 4);
        assert!(Arc::ptr_eq(&op.opposite(), &a));
    }

    #[test]
    fn rejects_inhomogeneous_relations() {
        let err = parse_algebra("vertices: 1\narrow x: 1 -> 1\nrelation: x*x - x*x*x\n")
            .unwrap()
            .build::<Rational>()
            .unwrap_err();
        assert!(matches!(err, Error::NonHomogeneous(_)));
    }

    #[test]
    fn length_cap_detects_infinite_dimension() {
        let err = parse_algebra("vertices: 1\narrow x: 1 -> 1\n")
            .unwrap()
            .build::<Rational>()
            .unwrap_err();
        assert_eq!(err, Error::LengthCap(DEFAULT_LENGTH_CAP));
    }

    #[test]
    fn associativity_and_relation_soundness() {
        for text in [EX_3D, EX_3E, EX_36] {
            let a = alg(text);
            let d = a.dim();
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        let (ex, ey, ez) = (a.basis_element(x), a.basis_element(y), a.basis_element(z));
                        assert_eq!(a.mul(&a.mul(&ex, &ey), &ez), a.mul(&ex, &a.mul(&ey, &ez)));
                    }
                }
            }
            for r in a.relations() {
                assert!(a.evaluate(r).iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn anti_isomorphism_reverses_products() {
        let a = alg(EX_36);
        let d = a.dim();
        let op = a.opposite();
        for x in 0..d {
            for y in 0..d {
                let xy = a.mul(&a.basis_element(x), &a.basis_element(y));
                let lhs = a.to_opposite(&xy);
                let rhs = op.mul(
                    &a.to_opposite(&a.basis_element(y)),
                    &a.to_opposite(&a.basis_element(x)),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
}
