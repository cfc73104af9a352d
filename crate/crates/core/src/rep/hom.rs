use super::{column_space, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseEchelon, SparseRow};

/// A basis of `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub basis: Vec<ModuleMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[F]) -> ModuleMap<F> {
        let mut acc = ModuleMap::zero(&self.source_dims, &self.target_dims);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Coordinates of `f` in this basis, if `f` lies in the span.
    pub fn coordinates(&self, f: &ModuleMap<F>) -> Option<Vec<F>> {
        let n = f.flatten().len();
        let cols: Vec<Vec<F>> = self.basis.iter().map(ModuleMap::flatten).collect();
        let a = Matrix::from_columns(n, &cols);
        let b = Matrix::from_columns(n, &[f.flatten()]);
        a.solve(&b).map(|x| x.column(0))
    }
}

/// Sparse linear system whose kernel is `Hom(M, N)`: unknowns are the
/// entries of the blocks `f_v`, constraints `Y_a f_s - f_t X_a = 0`.
fn intertwining_system<F: Field>(m: &Representation<F>, n: &Representation<F>) -> SparseEchelon<F> {
    let alg = m.algebra();
    let mut offsets = Vec::with_capacity(m.dims().len());
    let mut total = 0;
    for v in 0..m.dims().len() {
        offsets.push(total);
        total += n.dim_at(v) * m.dim_at(v);
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim_at(v) + c;
    let mut sys = SparseEchelon::new(total);
    for a in 0..alg.arrow_count() {
        let arr = alg.arrow(a);
        let (s, t) = (arr.source, arr.target);
        let x = m.arrow_map(a);
        let y = n.arrow_map(a);
        for r in 0..n.dim_at(t) {
            for c in 0..m.dim_at(s) {
                let mut row: SparseRow<F> = Vec::new();
                for k in 0..n.dim_at(s) {
                    let coef = &y[(r, k)];
                    if !coef.is_zero() {
                        row.push((var(s, k, c), coef.clone()));
                    }
                }
                for k in 0..m.dim_at(t) {
                    let coef = &x[(k, c)];
                    if !coef.is_zero() {
                        row.push((var(t, r, k), -coef.clone()));
                    }
                }
                row.sort_by_key(|e| e.0);
                // a loop puts both terms on the same unknowns
                let mut merged: SparseRow<F> = Vec::with_capacity(row.len());
                for (i, v) in row {
                    match merged.last_mut() {
                        Some((j, w)) if *j == i => *w = w.add_ref(&v),
                        _ => merged.push((i, v)),
                    }
                }
                sys.insert(merged);
            }
        }
    }
    sys
}

fn check_same<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<()> {
    if m.same_algebra(n) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

impl<F: Field> Representation<F> {
    pub fn try_hom(&self, other: &Self) -> Result<HomSpace<F>> {
        check_same(self, other)?;
        let sys = intertwining_system(self, other);
        let ker = sys.kernel_basis();
        let basis = (0..ker.cols())
            .map(|j| ModuleMap::from_flat(self.dims(), other.dims(), &ker.column(j)))
            .collect();
        Ok(HomSpace {
            source_dims: self.dims().to_vec(),
            target_dims: other.dims().to_vec(),
            basis,
        })
    }

    /// Basis of `Hom(self, other)`. Panics on an algebra mismatch; use
    /// [`Representation::try_hom`] to get an error instead.
    pub fn hom(&self, other: &Self) -> HomSpace<F> {
        self.try_hom(other).expect("hom between modules over different algebras")
    }

    pub fn hom_dim(&self, other: &Self) -> usize {
        assert!(self.same_algebra(other), "hom between modules over different algebras");
        let sys = intertwining_system(self, other);
        let total: usize = (0..self.dims().len()).map(|v| self.dim_at(v) * other.dim_at(v)).sum();
        total - sys.rank()
    }

    pub fn end(&self) -> HomSpace<F> {
        self.hom(self)
    }

    /// Whether `self ∈ Fac t`: the trace of `t` in `self` is everything.
    pub fn in_fac(&self, t: &Self) -> bool {
        let h = t.hom(self);
        (0..self.dims().len()).all(|v| {
            let imgs: Vec<Matrix<F>> = h.basis.iter().map(|f| f.blocks[v].clone()).collect();
            Matrix::hstack_rows(self.dim_at(v), &imgs).rank() == self.dim_at(v)
        })
    }

    /// Whether `self ∈ Sub n`: the maps to `n` jointly separate points.
    pub fn in_sub(&self, n: &Self) -> bool {
        let h = self.hom(n);
        (0..self.dims().len()).all(|v| {
            let ks: Vec<Matrix<F>> = h.basis.iter().map(|f| f.blocks[v].clone()).collect();
            Matrix::vstack_cols(self.dim_at(v), &ks).rank() == self.dim_at(v)
        })
    }

    /// The trace of `t` in `self`, per vertex column bases.
    pub fn trace_of(&self, t: &Self) -> Vec<Matrix<F>> {
        let h = t.hom(self);
        (0..self.dims().len())
            .map(|v| {
                let imgs: Vec<Matrix<F>> = h.basis.iter().map(|f| f.blocks[v].clone()).collect();
                column_space(&Matrix::hstack_rows(self.dim_at(v), &imgs))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{alg, EX_3D, EX_3E};
    use super::*;

    #[test]
    fn yoneda_on_projectives() {
        let a = alg(EX_3D);
        let mods: Vec<_> = (0..3)
            .flat_map(|i| {
                [
                    Representation::projective(&a, i),
                    Representation::injective(&a, i),
                    Representation::simple(&a, i),
                ]
            })
            .collect();
        for i in 0..3 {
            let p = Representation::projective(&a, i);
            for m in &mods {
                assert_eq!(p.hom_dim(m), m.dim_at(i));
                let h = p.hom(m);
                for f in &h.basis {
                    assert!(f.is_homomorphism(&p, m));
                }
            }
        }
    }

    #[test]
    fn hom_into_zero_is_empty() {
        let a = alg(EX_3D);
        let p = Representation::projective(&a, 0);
        assert_eq!(p.hom(&Representation::zero(&a)).dim(), 0);
    }

    #[test]
    fn hom_simple_into_t_over_3e() {
        let a = alg(EX_3E);
        // [2/3] is P(2); T = S(2) ⊕ P(2)
        let s2 = Representation::simple(&a, 1);
        let t = s2.direct_sum_with(&Representation::projective(&a, 1));
        // oracle: S(2) -> S(2) is 1-dim, S(2) -> 2/3 has image in soc = S(3): 0
        assert_eq!(s2.hom_dim(&s2), 1);
        assert_eq!(s2.hom_dim(&Representation::projective(&a, 1)), 0);
        assert_eq!(s2.hom_dim(&t), 1);
    }

    #[test]
    fn fac_and_sub_examples() {
        let a = alg(EX_3D);
        let p1 = Representation::projective(&a, 0);
        let s1 = Representation::simple(&a, 0);
        assert!(p1.in_fac(&p1));
        assert!(p1.in_sub(&p1));
        assert!(s1.in_fac(&p1));
        assert!(!p1.in_sub(&s1));
        // T = [2/3] ⊕ [2/(1 3)] ⊕ [3] over 3d
        let s3 = Representation::simple(&a, 2);
        let p2 = Representation::projective(&a, 1);
        let s2 = Representation::simple(&a, 1);
        let two_three = {
            let top = p2.radical_basis();
            // 2/3 = P(2) / S(1): kill the 1 at vertex 1
            let _ = top;
            let bases = vec![
                crate::linalg::Matrix::identity(1),
                crate::linalg::Matrix::zeros(1, 0),
                crate::linalg::Matrix::zeros(1, 0),
            ];
            p2.quotient(&bases).0
        };
        assert_eq!(two_three.label(), "2/3");
        let t = Representation::direct_sum(&a, &[two_three, p2.clone(), s3.clone()]);
        assert!(!p1.in_fac(&t));
        assert!(s2.in_fac(&t));
        assert!(s3.in_sub(&t));
    }
}
