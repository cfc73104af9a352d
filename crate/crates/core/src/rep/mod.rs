//! Right modules as representations of the bound quiver.

mod decompose;
mod hom;

use std::sync::Arc;

use crate::algebra::{Algebra, QuotientMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub use decompose::{Decomposition, IsoKey, Piece, Summand, DEFAULT_COMBINATION_BUDGET};
pub use hom::HomSpace;

/// A representation: a vector space per vertex and a matrix per arrow, of
/// shape `dims[target] x dims[source]`.
#[derive(Clone)]
pub struct Representation<F: Field> {
    algebra: Arc<Algebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Representation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.id() == other.algebra.id() && self.dims == other.dims && self.maps == other.maps
    }
}

impl<F: Field> Eq for Representation<F> {}

impl<F: Field> std::fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep[{} dims {:?}]", self.label(), self.dims)
    }
}

/// Per-vertex linear maps between two representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, dims, maps);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<Algebra<F>>,
        dims: Vec<usize>,
        maps: Vec<Matrix<F>>,
    ) -> Self {
        Representation { algebra, dims, maps }
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        if self.dims.len() != alg.vertex_count() || self.maps.len() != alg.arrow_count() {
            return Err(Error::Invalid("representation shape does not match quiver".into()));
        }
        for (a, m) in self.maps.iter().enumerate() {
            let arr = alg.arrow(a);
            if m.rows() != self.dims[arr.target] || m.cols() != self.dims[arr.source] {
                return Err(Error::Invalid(format!(
                    "matrix of arrow {} has shape {}x{}",
                    arr.label,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for r in alg.relations() {
            let (_, p0) = &r.terms[0];
            let s = alg.arrow(p0[0]).source;
            let t = alg.arrow(*p0.last().unwrap()).target;
            let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc = &acc + &self.path_matrix(p).scale(c);
            }
            if !acc.is_zero() {
                return Err(Error::Invalid("relation does not vanish on representation".into()));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.id() == other.algebra.id()
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Self::new_unchecked(algebra.clone(), vec![0; algebra.vertex_count()], maps)
    }

    pub fn simple(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Self::new_unchecked(algebra.clone(), dims, maps)
    }

    /// `P(i) = e_i Λ`, with basis the path residues starting at `i` and
    /// arrows acting by right multiplication.
    pub fn projective(algebra: &Arc<Algebra<F>>, i: usize) -> Self {
        let dims: Vec<usize> = (0..algebra.vertex_count())
            .map(|w| algebra.pair_basis(i, w).len())
            .collect();
        let maps = (0..algebra.arrow_count())
            .map(|a| {
                let arr = algebra.arrow(a);
                algebra.right_mult_block(i, arr.source, arr.target, algebra.arrow_basis_index(a))
            })
            .collect();
        Self::new_unchecked(algebra.clone(), dims, maps)
    }

    /// `I(i) = D(Λ^op-projective at i)`.
    pub fn injective(algebra: &Arc<Algebra<F>>, i: usize) -> Self {
        Representation::projective(&algebra.opposite(), i).dual()
    }

    /// `Λ_Λ = ⊕ P(i)`.
    pub fn regular(algebra: &Arc<Algebra<F>>) -> Self {
        let ps: Vec<_> = (0..algebra.vertex_count())
            .map(|i| Self::projective(algebra, i))
            .collect();
        Self::direct_sum(algebra, &ps)
    }

    /// `D Λ = ⊕ I(i)`.
    pub fn dual_regular(algebra: &Arc<Algebra<F>>) -> Self {
        Representation::regular(&algebra.opposite()).dual()
    }

    /// Vector space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        Self::new_unchecked(
            self.algebra.opposite(),
            self.dims.clone(),
            self.maps.iter().map(Matrix::transpose).collect(),
        )
    }

    pub fn direct_sum(algebra: &Arc<Algebra<F>>, parts: &[Self]) -> Self {
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..algebra.arrow_count())
            .map(|a| {
                let blocks: Vec<Matrix<F>> = parts.iter().map(|p| p.maps[a].clone()).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Self::new_unchecked(algebra.clone(), dims, maps)
    }

    pub fn direct_sum_with(&self, other: &Self) -> Self {
        Self::direct_sum(&self.algebra, &[self.clone(), other.clone()])
    }

    /// `X_{a1...ak} = X_{ak} ... X_{a1}`.
    pub fn path_matrix(&self, path: &[usize]) -> Matrix<F> {
        let s = self.algebra.arrow(path[0]).source;
        let mut m = Matrix::identity(self.dims[s]);
        for &a in path {
            m = &self.maps[a] * &m;
        }
        m
    }

    /// Action of a basis element of the algebra: a map `M_s -> M_t`.
    pub fn basis_action(&self, k: usize) -> Matrix<F> {
        let b = &self.algebra.basis()[k];
        if b.is_empty() {
            Matrix::identity(self.dims[b.source])
        } else {
            self.path_matrix(&b.arrows)
        }
    }

    /// Inclusion of the indecomposable projective `P(v)` sending `e_v` to
    /// `m ∈ M_v`.
    pub fn map_from_projective(&self, v: usize, m: &[F]) -> ModuleMap<F> {
        let alg = &self.algebra;
        let blocks = (0..alg.vertex_count())
            .map(|w| {
                let cols: Vec<Vec<F>> = alg
                    .pair_basis(v, w)
                    .iter()
                    .map(|&b| self.basis_action(b).mul_vec(m))
                    .collect();
                Matrix::from_columns(self.dims[w], &cols)
            })
            .collect();
        ModuleMap { blocks }
    }

    /// Per-vertex radical `Σ_{a: u -> v} im X_a`, as a column basis.
    pub fn radical_basis(&self) -> Vec<Matrix<F>> {
        let alg = &self.algebra;
        (0..alg.vertex_count())
            .map(|v| {
                let imgs: Vec<Matrix<F>> = (0..alg.arrow_count())
                    .filter(|&a| alg.arrow(a).target == v)
                    .map(|a| self.maps[a].clone())
                    .collect();
                column_space(&Matrix::hstack_rows(self.dims[v], &imgs))
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_basis()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.cols())
            .collect()
    }

    /// Per-vertex socle: common kernel of all outgoing arrows.
    pub fn socle_basis(&self) -> Vec<Matrix<F>> {
        let alg = &self.algebra;
        (0..alg.vertex_count())
            .map(|v| {
                let outs: Vec<Matrix<F>> = (0..alg.arrow_count())
                    .filter(|&a| alg.arrow(a).source == v)
                    .map(|a| self.maps[a].clone())
                    .collect();
                Matrix::vstack_cols(self.dims[v], &outs).kernel_basis()
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_basis().iter().map(|b| b.cols()).collect()
    }

    pub fn radical(&self) -> (Self, ModuleMap<F>) {
        self.subrep(&self.radical_basis())
    }

    /// Dimension vectors of the radical layers `rad^k M / rad^{k+1} M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let top = cur.top_dims();
            layers.push(top);
            cur = cur.radical().0;
        }
        layers
    }

    /// Loewy-layer label in the style `2/(1 3)`.
    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let layers: Vec<String> = self
            .radical_layers()
            .iter()
            .map(|layer| {
                let mut parts = Vec::new();
                for (v, &k) in layer.iter().enumerate() {
                    for _ in 0..k {
                        parts.push(self.algebra.vertex_label(v).to_string());
                    }
                }
                if parts.len() == 1 {
                    parts.pop().unwrap()
                } else {
                    format!("({})", parts.join(" "))
                }
            })
            .collect();
        layers.join("/")
    }

    /// The subrepresentation spanned at each vertex by the columns of
    /// `bases`, which must be independent and closed under the arrows.
    pub fn subrep(&self, bases: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let alg = &self.algebra;
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = (0..alg.arrow_count())
            .map(|a| {
                let arr = alg.arrow(a);
                let img = &self.maps[a] * &bases[arr.source];
                bases[arr.target]
                    .solve(&img)
                    .expect("subspace is not closed under the arrow action")
            })
            .collect();
        (
            Self::new_unchecked(alg.clone(), dims, maps),
            ModuleMap {
                blocks: bases.to_vec(),
            },
        )
    }

    /// Quotient by the submodule spanned by `bases`, with the projection.
    pub fn quotient(&self, bases: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        let alg = &self.algebra;
        let projs: Vec<Matrix<F>> = bases.iter().map(Matrix::cokernel_projection).collect();
        let sections: Vec<Matrix<F>> = projs
            .iter()
            .map(|q| {
                q.solve(&Matrix::identity(q.rows()))
                    .expect("cokernel projection is surjective")
            })
            .collect();
        let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
        let maps = (0..alg.arrow_count())
            .map(|a| {
                let arr = alg.arrow(a);
                &(&projs[arr.target] * &self.maps[a]) * &sections[arr.source]
            })
            .collect();
        (
            Self::new_unchecked(alg.clone(), dims, maps),
            ModuleMap { blocks: projs },
        )
    }

    /// Changes basis at each vertex by `g_v`: the new arrow maps are
    /// `g_t X_a g_s^{-1}`. Returns the new module and the iso `self -> new`.
    pub fn base_change(&self, g: &[Matrix<F>]) -> Option<(Self, ModuleMap<F>)> {
        let inv: Option<Vec<Matrix<F>>> = g.iter().map(Matrix::inverse).collect();
        let inv = inv?;
        let alg = &self.algebra;
        let maps = (0..alg.arrow_count())
            .map(|a| {
                let arr = alg.arrow(a);
                &(&g[arr.target] * &self.maps[a]) * &inv[arr.source]
            })
            .collect();
        Some((
            Self::new_unchecked(alg.clone(), self.dims.clone(), maps),
            ModuleMap { blocks: g.to_vec() },
        ))
    }

    /// Basis of `{λ ∈ Λ : M λ = 0}` as dense algebra elements.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        let alg = &self.algebra;
        let n = alg.vertex_count();
        let mut out = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let idx = alg.pair_basis(s, t);
                if idx.is_empty() {
                    continue;
                }
                let cols: Vec<Vec<F>> = idx
                    .iter()
                    .map(|&k| self.basis_action(k).entries().to_vec())
                    .collect();
                let sys = Matrix::from_columns(self.dims[t] * self.dims[s], &cols);
                let ker = sys.kernel_basis();
                for j in 0..ker.cols() {
                    out.push(alg.from_pair_coordinates(s, t, &ker.column(j)));
                }
            }
        }
        out
    }

    /// Views a module annihilated by the kernel of `q` as a module over the
    /// quotient algebra.
    pub fn restrict(&self, q: &QuotientMap<F>) -> Result<Self> {
        if self.algebra.id() != q.source.id() {
            return Err(Error::AlgebraMismatch);
        }
        let mut dims = vec![0; q.target.vertex_count()];
        for (v, img) in q.vertex_map.iter().enumerate() {
            match img {
                Some(w) => dims[*w] = self.dims[v],
                None if self.dims[v] != 0 => {
                    return Err(Error::Invalid("module is supported at a killed vertex".into()))
                }
                None => {}
            }
        }
        let mut maps = vec![Matrix::zeros(0, 0); q.target.arrow_count()];
        for (a, img) in q.arrow_map.iter().enumerate() {
            match img {
                Some(b) => maps[*b] = self.maps[a].clone(),
                None if !self.maps[a].is_zero() => {
                    return Err(Error::Invalid("a deleted arrow acts nontrivially".into()))
                }
                None => {}
            }
        }
        Representation::new(q.target.clone(), dims, maps)
    }

    /// Exact textual fingerprint of the stored matrices (not an iso
    /// invariant), used as a memo key.
    pub fn fingerprint(&self) -> String {
        let mut s = format!("{}|{:?}", self.algebra.id(), self.dims);
        for m in &self.maps {
            s.push('|');
            for x in m.entries() {
                s.push_str(&x.to_string());
                s.push(',');
            }
        }
        s
    }

    /// The support, as sorted vertex indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }
}

/// Basis of the column space: the nonzero rows of the reduced transpose.
pub fn column_space<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let r = m.transpose().rref();
    let rows: Vec<usize> = (0..r.pivots.len()).collect();
    r.matrix.select_rows(&rows).transpose()
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(source_dims: &[usize], target_dims: &[usize]) -> Self {
        ModuleMap {
            blocks: source_dims
                .iter()
                .zip(target_dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(dims: &[usize]) -> Self {
        ModuleMap {
            blocks: dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_square() && *b == Matrix::identity(b.rows()))
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Self> {
        let blocks: Option<Vec<Matrix<F>>> = self.blocks.iter().map(Matrix::inverse).collect();
        blocks.map(|blocks| ModuleMap { blocks })
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_homomorphism(&self, source: &Representation<F>, target: &Representation<F>) -> bool {
        let alg = source.algebra();
        (0..alg.arrow_count()).all(|a| {
            let arr = alg.arrow(a);
            &target.maps[a] * &self.blocks[arr.source] == &self.blocks[arr.target] * &source.maps[a]
        })
    }

    /// Entries of all blocks concatenated, row-major per block.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    pub fn from_flat(source_dims: &[usize], target_dims: &[usize], v: &[F]) -> Self {
        let mut blocks = Vec::with_capacity(source_dims.len());
        let mut off = 0;
        for (&s, &t) in source_dims.iter().zip(target_dims) {
            blocks.push(Matrix::from_vec(t, s, v[off..off + s * t].to_vec()));
            off += s * t;
        }
        ModuleMap { blocks }
    }

    /// Kernel of the map as a subrepresentation of `source`.
    pub fn kernel(&self, source: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(Matrix::kernel_basis).collect();
        source.subrep(&bases)
    }

    pub fn image(&self, target: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(column_space).collect();
        target.subrep(&bases)
    }

    pub fn cokernel(&self, target: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
        let bases: Vec<Matrix<F>> = self.blocks.iter().map(column_space).collect();
        target.quotient(&bases)
    }

    /// Block-diagonal sum `f ⊕ g`.
    pub fn direct_sum(parts: &[Self]) -> Self {
        let n = parts.first().map_or(0, |p| p.blocks.len());
        ModuleMap {
            blocks: (0..n)
                .map(|v| {
                    let bs: Vec<Matrix<F>> = parts.iter().map(|p| p.blocks[v].clone()).collect();
                    Matrix::block_diag(&bs)
                })
                .collect(),
        }
    }

    /// `[f_1 f_2 ...] : ⊕ X_i -> Y`.
    pub fn hstack(target_dims: &[usize], parts: &[Self]) -> Self {
        ModuleMap {
            blocks: (0..target_dims.len())
                .map(|v| {
                    let bs: Vec<Matrix<F>> = parts.iter().map(|p| p.blocks[v].clone()).collect();
                    Matrix::hstack_rows(target_dims[v], &bs)
                })
                .collect(),
        }
    }

    /// `[f_1; f_2; ...] : X -> ⊕ Y_i`.
    pub fn vstack(source_dims: &[usize], parts: &[Self]) -> Self {
        ModuleMap {
            blocks: (0..source_dims.len())
                .map(|v| {
                    let bs: Vec<Matrix<F>> = parts.iter().map(|p| p.blocks[v].clone()).collect();
                    Matrix::vstack_cols(source_dims[v], &bs)
                })
                .collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::field::Rational;

    pub(crate) fn alg(text: &str) -> Arc<Algebra<Rational>> {
        parse_algebra(text).unwrap().build::<Rational>().unwrap()
    }

    pub(crate) const EX_3D: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 1\narrow b2: 2 -> 3\nrelation: a1*a2\nrelation: a2*a1\n";
    pub(crate) const EX_3E: &str = "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 1\nrelation: a1*a2\nrelation: a2*a3\nrelation: a3*a1\n";

    #[test]
    fn projectives_of_3d() {
        let a = alg(EX_3D);
        let p: Vec<_> = (0..3).map(|i| Representation::projective(&a, i)).collect();
        assert_eq!(p[0].dims(), &[1, 1, 1]);
        assert_eq!(p[1].dims(), &[1, 1, 1]);
        assert_eq!(p[2].dims(), &[0, 0, 1]);
        assert_eq!(p[0].label(), "1/2/3");
        assert_eq!(p[1].label(), "2/(1 3)");
        assert_eq!(p[2].label(), "3");
        for m in &p {
            m.validate().unwrap();
        }
    }

    #[test]
    fn one_vertex_simple_projective_injective() {
        let a = alg("vertices: 1\n");
        let s = Representation::simple(&a, 0);
        assert_eq!(s, Representation::projective(&a, 0));
        assert_eq!(s, Representation::injective(&a, 0));
    }

    #[test]
    fn injectives_validate() {
        let a = alg(EX_3D);
        for i in 0..3 {
            let inj = Representation::injective(&a, i);
            inj.validate().unwrap();
            assert!(Arc::ptr_eq(inj.algebra(), &a));
        }
        // I(3) = 3 over (1/2/3 top) ... socle is S(3)
        assert_eq!(Representation::injective(&a, 2).socle_dims(), vec![0, 0, 1]);
    }

    #[test]
    fn annihilators() {
        let a = alg(EX_3E);
        assert!(Representation::regular(&a).annihilator().is_empty());
        assert_eq!(Representation::zero(&a).annihilator().len(), a.dim());
    }

    #[test]
    fn dual_is_involutive() {
        let a = alg(EX_3D);
        let p = Representation::projective(&a, 1);
        assert_eq!(p.dual().dual(), p);
    }
}
