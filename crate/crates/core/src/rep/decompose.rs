//! Krull-Schmidt decomposition and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{column_space, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Extra small-integer combinations of endomorphism or Hom basis elements
/// tried when looking for a splitting or an isomorphism.
pub const DEFAULT_COMBINATION_BUDGET: usize = 64;

/// Cheap isomorphism invariant used to bucket modules before exact tests.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoKey {
    pub dims: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    pub end_dim: usize,
}

/// One indecomposable direct summand together with the split inclusion and
/// projection realizing it inside the decomposed module.
#[derive(Clone, Debug)]
pub struct Piece<F: Field> {
    pub module: Representation<F>,
    pub inclusion: ModuleMap<F>,
    pub projection: ModuleMap<F>,
    /// index into [`Decomposition::summands`]
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Representation<F>,
    pub multiplicity: usize,
    /// `Some(v)` when the summand is isomorphic to `P(v)`.
    pub projective_vertex: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<Summand<F>>,
    pub pieces: Vec<Piece<F>>,
}

impl<F: Field> Decomposition<F> {
    pub fn is_basic(&self) -> bool {
        self.summands.iter().all(|s| s.multiplicity == 1)
    }

    pub fn count(&self) -> usize {
        self.summands.len()
    }

    /// Checks `Σ ι_k π_k = 1` and `π_j ι_k = δ_jk`.
    pub fn verify(&self, m: &Representation<F>) -> bool {
        let mut total = ModuleMap::zero(m.dims(), m.dims());
        for (j, pj) in self.pieces.iter().enumerate() {
            if !pj.inclusion.is_homomorphism(&pj.module, m)
                || !pj.projection.is_homomorphism(m, &pj.module)
            {
                return false;
            }
            total = total.add(&pj.inclusion.compose(&pj.projection));
            for (k, pk) in self.pieces.iter().enumerate() {
                let c = pj.projection.compose(&pk.inclusion);
                let ok = if j == k { c.is_identity() } else { c.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        total.is_identity()
    }

    /// Summands without projective ones, each once.
    pub fn non_projective_summands(&self) -> Vec<Representation<F>> {
        self.summands
            .iter()
            .filter(|s| s.projective_vertex.is_none())
            .map(|s| s.module.clone())
            .collect()
    }
}

fn combination_coeffs(n: usize, budget: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget)
        .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
        .collect()
}

fn int_combination<F: Field>(
    src: &[usize],
    tgt: &[usize],
    basis: &[ModuleMap<F>],
    coeffs: &[i64],
) -> ModuleMap<F> {
    let mut acc = ModuleMap::zero(src, tgt);
    for (c, b) in coeffs.iter().zip(basis) {
        if *c != 0 {
            acc = acc.add(&b.scale(&F::from_i64(*c)));
        }
    }
    acc
}

fn shifted<F: Field>(phi: &ModuleMap<F>, lambda: &F) -> ModuleMap<F> {
    ModuleMap {
        blocks: phi
            .blocks
            .iter()
            .map(|b| b - &Matrix::identity(b.rows()).scale(lambda))
            .collect(),
    }
}

fn power<F: Field>(phi: &ModuleMap<F>, e: u32) -> ModuleMap<F> {
    ModuleMap {
        blocks: phi.blocks.iter().map(|b| b.pow(e)).collect(),
    }
}

/// Eigenvalues in the ground field of an endomorphism, over all vertices.
fn eigenvalues<F: Field>(phi: &ModuleMap<F>) -> (Vec<F>, bool) {
    let mut roots: Vec<F> = Vec::new();
    let mut all_split = true;
    for b in phi.blocks.iter().filter(|b| b.rows() > 0) {
        let p = b.charpoly();
        let r = F::roots(&p);
        // multiplicities are not tracked; a block whose roots cannot account
        // for its degree has an eigenvalue outside the field
        let mut rest = p.clone();
        for x in &r {
            loop {
                let (q, rem) = crate::field::poly::divrem(&rest, &[-x.clone(), F::one()]);
                if rem.is_empty() {
                    rest = q;
                } else {
                    break;
                }
            }
        }
        if crate::field::poly::trim(&rest).len() > 1 {
            all_split = false;
        }
        for x in r {
            if !roots.contains(&x) {
                roots.push(x);
            }
        }
    }
    (roots, all_split)
}

/// Per-vertex bases of the two halves of a splitting.
type Split<F> = (Vec<Matrix<F>>, Vec<Matrix<F>>);

/// Fitting decomposition `ker G^n ⊕ im G^n` for `G = φ - λ`, when proper.
fn fitting_split<F: Field>(m: &Representation<F>, phi: &ModuleMap<F>) -> Option<Split<F>> {
    let n = m.total_dim() as u32;
    let (roots, _) = eigenvalues(phi);
    for lambda in roots {
        let g = power(&shifted(phi, &lambda), n);
        let ker: Vec<Matrix<F>> = g.blocks.iter().map(Matrix::kernel_basis).collect();
        let k: usize = ker.iter().map(Matrix::cols).sum();
        if k > 0 && k < m.total_dim() {
            let img: Vec<Matrix<F>> = g.blocks.iter().map(column_space).collect();
            return Some((ker, img));
        }
    }
    None
}

impl<F: Field> Representation<F> {
    /// Whether `End(M)` is local with residue field the ground field: every
    /// basis element is `λ + nilpotent` and the nilpotent parts generate a
    /// nilpotent algebra. `Ok(false)` for the zero module.
    pub fn is_local(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let end = self.end();
        let n = self.total_dim() as u32;
        let mut nil: Vec<ModuleMap<F>> = Vec::new();
        for b in &end.basis {
            let (roots, split) = eigenvalues(b);
            if roots.len() != 1 || !split {
                return false;
            }
            let g = shifted(b, &roots[0]);
            if !power(&g, n).is_zero() {
                return false;
            }
            if !g.is_zero() {
                nil.push(g);
            }
        }
        // N^k for the subspace N spanned by the nilpotent parts
        let mut cur = nil.clone();
        for _ in 0..=n {
            if cur.is_empty() {
                return true;
            }
            let mut prods = Vec::new();
            for x in &cur {
                for y in &nil {
                    let p = x.compose(y);
                    if !p.is_zero() {
                        prods.push(p);
                    }
                }
            }
            cur = independent_subset(prods);
        }
        false
    }

    fn find_split(&self, budget: usize) -> Option<Split<F>> {
        let end = self.end();
        for b in &end.basis {
            if let Some(s) = fitting_split(self, b) {
                return Some(s);
            }
        }
        for c in combination_coeffs(end.dim(), budget, 0x5eed) {
            let phi = int_combination(self.dims(), self.dims(), &end.basis, &c);
            if let Some(s) = fitting_split(self, &phi) {
                return Some(s);
            }
        }
        None
    }

    fn decompose_pieces(&self, budget: usize) -> Result<Vec<(Representation<F>, ModuleMap<F>, ModuleMap<F>)>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        if self.is_local() {
            let id = ModuleMap::identity(self.dims());
            return Ok(vec![(self.clone(), id.clone(), id)]);
        }
        let Some((k, i)) = self.find_split(budget) else {
            return Err(Error::DecompositionFailed(format!(
                "no idempotent found for module {} with dim End = {}",
                self.label(),
                self.end().dim()
            )));
        };
        let (mk, ik) = self.subrep(&k);
        let (mi, ii) = self.subrep(&i);
        let mut pk = Vec::new();
        let mut pi = Vec::new();
        for v in 0..self.dims().len() {
            let both = Matrix::hstack_rows(self.dim_at(v), &[k[v].clone(), i[v].clone()]);
            let inv = both.inverse().expect("Fitting summands are complementary");
            let kc = k[v].cols();
            pk.push(inv.block(0, kc, 0, self.dim_at(v)));
            pi.push(inv.block(kc, i[v].cols(), 0, self.dim_at(v)));
        }
        let (pk, pi) = (ModuleMap { blocks: pk }, ModuleMap { blocks: pi });
        let mut out = Vec::new();
        for (sub, inc, proj) in [(mk, ik, pk), (mi, ii, pi)] {
            for (piece, a, b) in sub.decompose_pieces(budget)? {
                out.push((piece, inc.compose(&a), b.compose(&proj)));
            }
        }
        Ok(out)
    }

    pub fn decompose(&self) -> Result<Decomposition<F>> {
        self.decompose_with_budget(DEFAULT_COMBINATION_BUDGET)
    }

    pub fn decompose_with_budget(&self, budget: usize) -> Result<Decomposition<F>> {
        let raw = self.decompose_pieces(budget)?;
        let mut reps: Vec<Representation<F>> = Vec::new();
        let mut classes = Vec::with_capacity(raw.len());
        for (m, _, _) in &raw {
            let found = reps
                .iter()
                .position(|r| r.dims() == m.dims() && r.indecomposable_iso(m).is_some());
            classes.push(match found {
                Some(c) => c,
                None => {
                    reps.push(m.clone());
                    reps.len() - 1
                }
            });
        }
        // canonical order of classes
        let mut order: Vec<usize> = (0..reps.len()).collect();
        let keys: Vec<(String, Vec<usize>)> =
            reps.iter().map(|r| (r.label(), r.dims().to_vec())).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut rank = vec![0; reps.len()];
        for (pos, &c) in order.iter().enumerate() {
            rank[c] = pos;
        }
        let summands = order
            .iter()
            .map(|&c| Summand {
                module: reps[c].clone(),
                multiplicity: classes.iter().filter(|&&x| x == c).count(),
                projective_vertex: reps[c].indecomposable_projective_vertex(),
            })
            .collect();
        let mut pieces: Vec<Piece<F>> = raw
            .into_iter()
            .zip(classes)
            .map(|((module, inclusion, projection), c)| Piece {
                module,
                inclusion,
                projection,
                class: rank[c],
            })
            .collect();
        pieces.sort_by_key(|p| p.class);
        Ok(Decomposition { summands, pieces })
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.is_local() {
            return Ok(true);
        }
        Ok(self.decompose()?.pieces.len() == 1)
    }

    /// For an indecomposable module: the vertex `v` with `M ≅ P(v)`.
    pub fn indecomposable_projective_vertex(&self) -> Option<usize> {
        let top = self.top_dims();
        if top.iter().sum::<usize>() != 1 {
            return None;
        }
        let v = top.iter().position(|&t| t == 1)?;
        let alg = self.algebra();
        let pdim: usize = (0..alg.vertex_count()).map(|w| alg.pair_basis(v, w).len()).sum();
        (pdim == self.total_dim()).then_some(v)
    }

    /// `M` is projective iff its projective cover has the same dimension.
    pub fn is_projective(&self) -> bool {
        let alg = self.algebra();
        let cover: usize = self
            .top_dims()
            .iter()
            .enumerate()
            .map(|(v, &t)| t * (0..alg.vertex_count()).map(|w| alg.pair_basis(v, w).len()).sum::<usize>())
            .sum();
        cover == self.total_dim()
    }

    pub fn is_injective(&self) -> bool {
        self.dual().is_projective()
    }

    /// Isomorphism between indecomposables: some Hom basis element is
    /// invertible whenever one exists, since the non-invertible maps form a
    /// subspace.
    pub fn indecomposable_iso(&self, other: &Self) -> Option<ModuleMap<F>> {
        if self.dims() != other.dims() {
            return None;
        }
        self.hom(other).basis.into_iter().find(ModuleMap::is_iso)
    }

    /// An explicit isomorphism `self -> other`, or `None`.
    pub fn isomorphism(&self, other: &Self) -> Option<ModuleMap<F>> {
        if !self.same_algebra(other) || self.dims() != other.dims() {
            return None;
        }
        if self.is_zero() {
            return Some(ModuleMap::identity(self.dims()));
        }
        let h = self.hom(other);
        let e = self.end().dim();
        if h.dim() != e || other.hom_dim(self) != e {
            return None;
        }
        if let Some(f) = h.basis.iter().find(|f| f.is_iso()) {
            return Some(f.clone());
        }
        for c in combination_coeffs(h.dim(), DEFAULT_COMBINATION_BUDGET, 0x150) {
            let f = int_combination(self.dims(), other.dims(), &h.basis, &c);
            if f.is_iso() {
                return Some(f);
            }
        }
        let (da, db) = (self.decompose().ok()?, other.decompose().ok()?);
        let mut used = vec![false; db.pieces.len()];
        let mut total = ModuleMap::zero(self.dims(), other.dims());
        for pa in &da.pieces {
            let (j, phi) = db.pieces.iter().enumerate().find_map(|(j, pb)| {
                if used[j] {
                    return None;
                }
                pa.module.indecomposable_iso(&pb.module).map(|phi| (j, phi))
            })?;
            used[j] = true;
            let pb = &db.pieces[j];
            total = total.add(&pb.inclusion.compose(&phi).compose(&pa.projection));
        }
        (used.iter().all(|&u| u) && total.is_iso()).then_some(total)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn iso_key(&self) -> IsoKey {
        IsoKey {
            dims: self.dims().to_vec(),
            top: self.top_dims(),
            socle: self.socle_dims(),
            end_dim: self.end().dim(),
        }
    }
}

/// Keeps a maximal linearly independent subfamily.
fn independent_subset<F: Field>(maps: Vec<ModuleMap<F>>) -> Vec<ModuleMap<F>> {
    if maps.is_empty() {
        return maps;
    }
    let n = maps[0].flatten().len();
    let cols: Vec<Vec<F>> = maps.iter().map(ModuleMap::flatten).collect();
    let piv = Matrix::from_columns(n, &cols).rref().pivots;
    piv.into_iter().map(|j| maps[j].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{alg, EX_3D, EX_3E};
    use super::*;
    use crate::field::Rational;

    #[test]
    fn regular_module_of_3d() {
        let a = alg(EX_3D);
        let lam = Representation::regular(&a);
        let d = lam.decompose().unwrap();
        assert!(d.verify(&lam));
        assert_eq!(d.count(), 3);
        assert!(d.summands.iter().all(|s| s.multiplicity == 1));
        let mut verts: Vec<_> = d.summands.iter().map(|s| s.projective_vertex.unwrap()).collect();
        verts.sort();
        assert_eq!(verts, vec![0, 1, 2]);
    }

    #[test]
    fn repeated_simple() {
        let a = alg(EX_3D);
        let s = Representation::simple(&a, 0);
        let ss = s.direct_sum_with(&s);
        let d = ss.decompose().unwrap();
        assert!(d.verify(&ss));
        assert_eq!(d.count(), 1);
        assert_eq!(d.summands[0].multiplicity, 2);
        assert!(!d.is_basic());
    }

    #[test]
    fn t_of_3e_has_two_nonprojective_summands() {
        let a = alg(EX_3E);
        let s2 = Representation::simple(&a, 1);
        let p2 = Representation::projective(&a, 1);
        let t = s2.direct_sum_with(&p2);
        let d = t.decompose().unwrap();
        assert!(d.verify(&t));
        let labels: Vec<String> = d.summands.iter().map(|s| s.module.label()).collect();
        assert_eq!(labels, vec!["2", "2/3"]);
        // 2/3 is P(2) here, so only S(2) is non-projective
        assert_eq!(d.summands[0].projective_vertex, None);
        assert_eq!(d.summands[1].projective_vertex, Some(1));
    }

    #[test]
    fn iso_certificates() {
        let a = alg(EX_3D);
        let p1 = Representation::projective(&a, 0);
        let s1 = Representation::simple(&a, 0);
        let f = p1.isomorphism(&p1).unwrap();
        assert!(f.is_iso() && f.is_homomorphism(&p1, &p1));
        assert!(p1.isomorphism(&s1).is_none());
        let g: Vec<Matrix<Rational>> = p1
            .dims()
            .iter()
            .map(|&d| {
                let mut m = Matrix::identity(d);
                for i in 0..d {
                    m[(i, i)] = Rational::from_i64(3);
                }
                m
            })
            .collect();
        let (q, _) = p1.base_change(&g).unwrap();
        let iso = p1.isomorphism(&q).unwrap();
        assert!(iso.is_homomorphism(&p1, &q) && iso.is_iso());
    }

    #[test]
    fn kronecker_regular_decomposes() {
        let a = alg("vertices: 1 2\narrow x: 1 -> 2\narrow y: 1 -> 2\n");
        let m = Representation::regular(&a);
        let m2 = m.direct_sum_with(&m);
        let d = m2.decompose().unwrap();
        assert!(d.verify(&m2));
        assert_eq!(d.count(), 2);
        assert!(d.summands.iter().all(|s| s.multiplicity == 2));
    }
}
