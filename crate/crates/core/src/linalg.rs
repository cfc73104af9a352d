//! Dense exact matrices. Matrices act on column vectors, so `g ∘ f` is `G * F`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{poly, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Contiguous block `[r0, r0+nr) x [c0, c0+nc)`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Self {
        let mut m = Self::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn hstack(parts: &[Self]) -> Self {
        let rows = parts.first().map_or(0, |p| p.rows);
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut c = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            m.set_block(0, c, p);
            c += p.cols;
        }
        m
    }

    /// Horizontal stack that needs the row count when `parts` may be empty.
    pub fn hstack_rows(rows: usize, parts: &[Self]) -> Self {
        if parts.is_empty() {
            Self::zeros(rows, 0)
        } else {
            Self::hstack(parts)
        }
    }

    pub fn vstack(parts: &[Self]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn vstack_cols(cols: usize, parts: &[Self]) -> Self {
        if parts.is_empty() {
            Self::zeros(0, cols)
        } else {
            Self::vstack(parts)
        }
    }

    pub fn block_diag(parts: &[Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            m.set_block(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        m
    }

    /// Gauss-Jordan elimination; the pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let v = m[(r, j)].mul_ref(&inv);
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let (pivot_row, target) = m.two_rows(r, i);
                    target[j].sub_mul_assign(&f, &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rref().pivots.len()
        } else {
            self.rref().pivots.len()
        }
    }

    /// Columns form a basis of `{x : A x = 0}`, one per free column of the
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Self {
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (t, &f) in free.iter().enumerate() {
            k[(f, t)] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                k[(p, t)] = -r[(row, f)].clone();
            }
        }
        k
    }

    /// A surjection `Q` with `Q A = 0` onto `rows(A) - rank(A)` dimensions.
    pub fn cokernel_projection(&self) -> Self {
        self.transpose().kernel_basis().transpose()
    }

    /// Some `X` with `A X = B`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = Self::hstack(&[self.clone(), b.clone()]);
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = Self::hstack(&[self.clone(), Self::identity(n)]);
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det.mul_ref(&pivot);
            let inv = pivot.inv();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul_ref(&inv);
                for j in c..n {
                    let (pivot_row, target) = m.two_rows(c, i);
                    target[j].sub_mul_assign(&f, &pivot_row[j]);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low to high.
    /// Uses reduction to Hessenberg form, which needs no division by
    /// integers and therefore works in every characteristic.
    pub fn charpoly(&self) -> Vec<F> {
        assert!(self.is_square(), "charpoly of a non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t = h[(m, m - 1)].inv();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = h[(i, m - 1)].mul_ref(&t);
                for j in 0..n {
                    let v = h[(m, j)].clone();
                    h[(i, j)].sub_mul_assign(&u, &v);
                }
                for r in 0..n {
                    let v = h[(r, i)].mul_ref(&u);
                    h[(r, m)] = h[(r, m)].add_ref(&v);
                }
            }
        }
        // p_k is the charpoly of the leading k x k block
        let mut ps: Vec<Vec<F>> = vec![vec![F::one()]];
        for m in 1..=n {
            let mut next = poly::mul(&ps[m - 1], &[-h[(m - 1, m - 1)].clone(), F::one()]);
            let mut t = F::one();
            for i in (1..m).rev() {
                t = t.mul_ref(&h[(i, i - 1)]);
                let c = h[(i - 1, m - 1)].mul_ref(&t);
                if c.is_zero() {
                    continue;
                }
                let term: Vec<F> = ps[i - 1].iter().map(|x| x.mul_ref(&c)).collect();
                next = poly::sub(&next, &term);
            }
            let mut full = next;
            full.resize(m + 1, F::zero());
            ps.push(full);
        }
        let mut p = ps.pop().unwrap();
        p.resize(n + 1, F::zero());
        p
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Disjoint borrows of row `a` (shared) and row `b` (mutable).
    fn two_rows(&mut self, a: usize, b: usize) -> (&[F], &mut [F]) {
        assert_ne!(a, b);
        let c = self.cols;
        if a < b {
            let (lo, hi) = self.data.split_at_mut(b * c);
            (&lo[a * c..(a + 1) * c], &mut hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(a * c);
            (&hi[..c], &mut lo[b * c..(b + 1) * c])
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a.mul_ref(b);
                        out[(i, j)] = out[(i, j)].add_ref(&p);
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> Mul for Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: Matrix<F>) -> Matrix<F> {
        &self * &rhs
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// A sparse row: `(column, nonzero entry)` sorted by column.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Incremental row echelon form of a sparse system, for systems too large
/// to hold densely. Each stored pivot row has leading entry 1.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    cols: usize,
    pivots: Vec<Option<SparseRow<F>>>,
    rank: usize,
}

/// `r - k p`, merging sorted rows.
fn sparse_axpy<F: Field>(r: &[(usize, F)], k: &F, p: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j == p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i == r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push(r[i].clone());
            i += 1;
        } else if take_p {
            out.push((p[j].0, -k.mul_ref(&p[j].1)));
            j += 1;
        } else {
            let v = r[i].1.sub_ref(&k.mul_ref(&p[j].1));
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, pivots: vec![None; cols], rank: 0 }
    }

    /// Reduces `row` and keeps it when independent; returns whether it was.
    pub fn insert(&mut self, mut row: SparseRow<F>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        while let Some((c, lead)) = row.first().cloned() {
            match &self.pivots[c] {
                Some(p) => row = sparse_axpy(&row, &lead, p),
                None => {
                    let inv = lead.inv();
                    for (_, v) in row.iter_mut() {
                        *v = v.mul_ref(&inv);
                    }
                    self.pivots[c] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The same basis as [`Matrix::kernel_basis`] of the dense system.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let free: Vec<usize> = (0..self.cols).filter(|&j| self.pivots[j].is_none()).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        let mut x = vec![F::zero(); self.cols];
        for (t, &f) in free.iter().enumerate() {
            x.iter_mut().for_each(|v| *v = F::zero());
            x[f] = F::one();
            for c in (0..f).rev() {
                if let Some(p) = &self.pivots[c] {
                    let mut acc = F::zero();
                    for (j, v) in &p[1..] {
                        if !x[*j].is_zero() {
                            acc = acc.sub_ref(&v.mul_ref(&x[*j]));
                        }
                    }
                    x[c] = acc;
                }
            }
            for (i, v) in x.iter().enumerate() {
                if !v.is_zero() {
                    k[(i, t)] = v.clone();
                }
            }
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational, Zero};
    use proptest::prelude::*;

    type Q = Rational;
    type M = Matrix<Q>;

    #[test]
    fn rank_examples() {
        assert_eq!(M::zeros(0, 0).rank(), 0);
        assert_eq!(M::identity(2).rank(), 2);
        assert_eq!(M::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(M::identity(3).kernel_basis().cols(), 0);
        assert_eq!(M::zeros(2, 3).kernel_basis().cols(), 3);
        let k = M::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k[(0, 0)], -k[(1, 0)].clone());
        assert!(!k.is_zero());
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(M::identity(2).cokernel_projection().rows(), 0);
        let q = M::zeros(3, 1).cokernel_projection();
        assert_eq!((q.rows(), q.cols()), (3, 3));
        assert!(q.is_invertible());
        let a = M::from_i64(&[&[1], &[0]]);
        let q = a.cokernel_projection();
        assert_eq!((q.rows(), q.cols(), q.rank()), (1, 2, 1));
        assert!((&q * &a).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = M::from_i64(&[&[3, 1], &[4, 1]]);
        assert_eq!(M::identity(2).solve(&b), Some(b));
        let a = M::from_i64(&[&[1, 1]]);
        let x = a.solve(&M::from_i64(&[&[3]])).unwrap();
        assert_eq!(&x[(0, 0)] + &x[(1, 0)], Q::from_i64(3));
        assert!(M::zeros(2, 2).solve(&M::from_i64(&[&[1], &[0]])).is_none());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = M::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), Q::from_i64(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, M::identity(2));
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    /// det(cI - A) evaluated directly, used as an oracle for `charpoly`.
    fn charpoly_at(a: &M, c: i64) -> Q {
        let n = a.rows();
        let shifted = &M::identity(n).scale(&Q::from_i64(c)) - a;
        shifted.determinant()
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // companion matrix of x^3 - 2x^2 + 5x - 7
        let a = M::from_i64(&[&[0, 0, 7], &[1, 0, -5], &[0, 1, 2]]);
        let p = a.charpoly();
        let expected: Vec<Q> = [-7, 5, -2, 1].iter().map(|&x| Q::from_i64(x)).collect();
        assert_eq!(p, expected);
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = M> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                M::from_vec(r, c, v.into_iter().map(Q::from_i64).collect())
            })
        })
    }

    fn small_square(max: usize) -> impl Strategy<Value = M> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                M::from_vec(n, n, v.into_iter().map(Q::from_i64).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn sparse_kernel_matches_dense(a in small_matrix(8)) {
            let mut e = SparseEchelon::new(a.cols());
            for i in 0..a.rows() {
                let row = a.row(i).iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect();
                e.insert(row);
            }
            prop_assert_eq!(e.rank(), a.rank());
            prop_assert_eq!(e.kernel_basis(), a.kernel_basis());
        }

        #[test]
        fn rank_nullity(a in small_matrix(8)) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn cokernel_identities(a in small_matrix(8)) {
            let q = a.cokernel_projection();
            prop_assert!((&q * &a).is_zero());
            prop_assert_eq!(q.rank(), a.rows() - a.rank());
            prop_assert_eq!(q.rows(), a.rows() - a.rank());
        }

        #[test]
        fn solve_round_trip(a in small_matrix(6), x in proptest::collection::vec(-3i64..=3, 6)) {
            let xs: Vec<Q> = x.into_iter().take(a.cols()).map(Q::from_i64).collect();
            let xs = if xs.len() < a.cols() {
                let mut v = xs; v.resize(a.cols(), Q::from_i64(0)); v
            } else { xs };
            let b = M::from_columns(a.rows(), &[a.mul_vec(&xs)]);
            let sol = a.solve(&b).expect("consistent system");
            prop_assert_eq!(&a * &sol, b);
        }

        #[test]
        fn charpoly_matches_determinant(a in small_square(5)) {
            let p = a.charpoly();
            for c in -2..=2 {
                prop_assert_eq!(poly::eval(&p, &Q::from_i64(c)), charpoly_at(&a, c));
            }
        }

        #[test]
        fn charpoly_mod_p(v in proptest::collection::vec(0u64..7, 16)) {
            type F = Fp<7>;
            let a = Matrix::<F>::from_vec(4, 4, v.into_iter().map(|x| F::new(x as i64)).collect());
            let p = a.charpoly();
            for c in 0..7 {
                let shifted = &Matrix::<F>::identity(4).scale(&F::new(c)) - &a;
                prop_assert_eq!(poly::eval(&p, &F::new(c)), shifted.determinant());
            }
        }
    }
}
