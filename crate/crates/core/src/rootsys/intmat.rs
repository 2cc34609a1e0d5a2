use crate::exactlin::{rat, QMatrix};

/// Small square integer matrix, used for Weyl group and diagram actions on the
/// root lattice.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "IntMat must be square");
            data.extend_from_slice(r);
        }
        IntMat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        IntMat { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let n = self.n;
        let mut t = IntMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j];
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat::identity(self.n)
    }

    pub fn to_q(&self) -> QMatrix {
        let rows: Vec<Vec<i64>> = (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect();
        QMatrix::from_int_rows(&rows)
    }

    /// Converts an integral rational matrix; `None` if any entry is fractional.
    pub fn from_q(m: &QMatrix) -> Option<IntMat> {
        if !m.is_square() {
            return None;
        }
        m.to_int_rows().map(|rows| IntMat::from_rows(&rows))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }
}

pub(crate) fn q_vec(v: &[i64]) -> Vec<crate::exactlin::Rational> {
    v.iter().map(|&x| rat(x)).collect()
}
