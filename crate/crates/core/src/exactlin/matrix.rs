use super::{Rational, Scalar};
use num_traits::{One, Zero};
use std::fmt;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    zero: T,
    data: Vec<T>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, PartialEq)]
pub struct RrefResult<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros_like(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_of();
        Matrix { rows, cols, data: vec![zero.clone(); rows * cols], zero }
    }

    pub fn identity_like(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros_like(n, n, proto);
        let one = proto.one_of();
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows_like(rows: Vec<Vec<T>>, cols: usize, proto: &T) -> Self {
        let mut m = Self::zeros_like(rows.len(), cols, proto);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, x) in row.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols_like(cols: &[Vec<T>], nrows: usize, proto: &T) -> Self {
        let mut m = Self::zeros_like(nrows, cols.len(), proto);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged matrix");
            for (i, x) in col.iter().enumerate() {
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn zero_elem(&self) -> &T {
        &self.zero
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.vanishes())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        *x == self.zero.one_of()
                    } else {
                        x.vanishes()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros_like(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros_like(self.rows, rhs.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.vanishes() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.vanishes() {
                        continue;
                    }
                    let cur = &out[(i, j)];
                    let next = cur.plus(&a.times(b));
                    out[(i, j)] = next;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, zero: self.zero.clone(), data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, zero: self.zero.clone(), data }
    }

    pub fn scale(&self, c: &T) -> Self {
        let data = self.data.iter().map(|a| a.times(c)).collect();
        Matrix { rows: self.rows, cols: self.cols, zero: self.zero.clone(), data }
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.vanishes() && !x.vanishes() {
                        acc = acc.plus(&a.times(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity_like(self.rows, &self.zero);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(self.zero.clone(), |acc, i| acc.plus(&self[(i, i)]))
    }

    /// Exact reduced row-echelon form.
    pub fn rref(&self) -> RrefResult<T> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].vanishes()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                let x = a[(r, j)].times(&inv);
                a[(r, j)] = x;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].vanishes() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let x = a[(i, j)].minus(&f.times(&a[(r, j)]));
                    a[(i, j)] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        RrefResult { reduced: a, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let RrefResult { reduced, pivots, .. } = self.rref();
        let one = self.zero.one_of();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero.clone(); self.cols];
                v[f] = one.clone();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = reduced[(row, f)].negated();
                }
                v
            })
            .collect()
    }

    /// Solves `self * X = rhs` for a full-column-rank `self`.
    /// Returns `None` when some column of `rhs` is not in the column space.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let mut aug = Self::zeros_like(self.rows, n + rhs.cols, &self.zero);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                aug[(i, n + j)] = rhs[(i, j)].clone();
            }
        }
        let RrefResult { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= n) || pivots.len() < n {
            return None;
        }
        let mut x = Self::zeros_like(n, rhs.cols, &self.zero);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(pc, j)] = reduced[(row, n + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        self.solve(&Self::identity_like(self.rows, &self.zero))
    }

    pub fn map<U: Scalar>(&self, proto: &U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            zero: proto.zero_of(),
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Matrix<Rational> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::zeros_like(rows, cols, &Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::zero())
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_like(rows, cols, &Rational::zero())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat(x)).collect())
                .collect(),
        )
    }

    pub fn from_cols(cols: &[Vec<Rational>], nrows: usize) -> Self {
        Self::from_cols_like(cols, nrows, &Rational::zero())
    }

    /// Entries as machine integers, if every entry is integral and fits.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let x = &self[(i, j)];
                        if x.is_integer() {
                            x.to_integer().to_i64()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_one(&self, i: usize, j: usize) -> bool {
        self[(i, j)].is_one()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

/// A subspace of `T^dim` held as an echelon basis, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Subspace<T> {
    dim: usize,
    proto: T,
    /// Rows of a reduced echelon basis and their pivot columns.
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    pub fn zero(dim: usize, proto: &T) -> Self {
        Subspace { dim, proto: proto.zero_of(), basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(dim: usize, proto: &T, vectors: &[Vec<T>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(dim, proto);
        }
        let m = Matrix::from_rows_like(vectors.to_vec(), dim, proto);
        let RrefResult { reduced, pivots, rank } = m.rref();
        let basis = (0..rank).map(|i| reduced.row(i)).collect();
        Subspace { dim, proto: proto.zero_of(), basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Residual of `v` after eliminating the basis pivots; zero iff `v` lies in the span.
    fn residual(&self, v: &[T]) -> Vec<T> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].vanishes() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.vanishes() {
                    *x = x.minus(&f.times(b));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.residual(v).iter().all(|x| x.vanishes())
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Orthogonal complement with respect to the bilinear form with Gram matrix `gram`.
    pub fn orthogonal_complement(&self, gram: &Matrix<T>) -> Subspace<T> {
        if self.basis.is_empty() {
            let id = Matrix::identity_like(self.dim, &self.proto);
            let rows: Vec<Vec<T>> = (0..self.dim).map(|i| id.row(i)).collect();
            return Subspace::spanned_by(self.dim, &self.proto, &rows);
        }
        let b = Matrix::from_rows_like(self.basis.clone(), self.dim, &self.proto);
        let constraints = b.mul(gram);
        Subspace::spanned_by(self.dim, &self.proto, &constraints.kernel())
    }

    pub fn intersect(&self, other: &Subspace<T>) -> Subspace<T> {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::zero(self.dim, &self.proto);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0.
        let mut cols: Vec<Vec<T>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(Scalar::negated).collect()));
        let m = Matrix::from_cols_like(&cols, self.dim, &self.proto);
        let k = self.basis.len();
        let vecs: Vec<Vec<T>> = m
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![self.proto.zero_of(); self.dim];
                for (c, u) in coeffs[..k].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(u) {
                        *x = x.plus(&c.times(y));
                    }
                }
                v
            })
            .collect();
        Subspace::spanned_by(self.dim, &self.proto, &vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, rat, QMatrix};

    #[test]
    fn rref_identity_and_zero() {
        let id = QMatrix::identity(3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = QMatrix::zero(2, 2);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.reduced, QMatrix::from_int_rows(&[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(m.kernel(), vec![vec![rat(-2), rat(1)]]);
    }

    #[test]
    fn inverse_and_solve() {
        let m = QMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = QMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
        let half = QMatrix::from_rows(vec![vec![frac(1, 2)]]);
        assert_eq!(half.inverse().unwrap()[(0, 0)], rat(2));
    }

    #[test]
    fn subspace_membership_and_complement() {
        let z = rat(0);
        let s = Subspace::spanned_by(3, &z, &[vec![rat(1), rat(1), rat(0)]]);
        assert!(s.contains(&[rat(3), rat(3), rat(0)]));
        assert!(!s.contains(&[rat(1), rat(0), rat(0)]));
        let perp = s.orthogonal_complement(&QMatrix::identity(3));
        assert_eq!(perp.dim(), 2);
        assert!(perp.contains(&[rat(1), rat(-1), rat(0)]));
        assert!(perp.contains(&[rat(0), rat(0), rat(1)]));
        let t = Subspace::spanned_by(3, &z, &[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        assert_eq!(perp.intersect(&t).dim(), 1);
    }
}
