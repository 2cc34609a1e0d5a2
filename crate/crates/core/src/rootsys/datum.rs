use super::cartan::{gram_matrix, CartanLabel, Series};
use super::intmat::IntMat;
use crate::error::Result;
use crate::exactlin::{rat, QMatrix, Rational};
use num_traits::Zero;
use std::collections::HashMap;

/// An irreducible root system in the adjoint realization: roots are integer
/// vectors in the simple-root basis, coroots integer vectors in the
/// fundamental-coweight basis.
#[derive(Clone, Debug)]
pub struct RootDatum {
    series: Series,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    simple_refl: Vec<IntMat>,
    simple_perm: Vec<Vec<usize>>,
}

impl RootDatum {
    pub fn build(series: Series, rank: usize) -> Result<RootDatum> {
        let gram = gram_matrix(series, rank)?;
        let n = rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        // Close the simple roots under the simple reflections.
        let mut all: Vec<Vec<i64>> = (0..n).map(|j| unit(n, j)).collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut k = 0;
        while k < all.len() {
            let b = all[k].clone();
            for i in 0..n {
                let c: i64 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
                if c == 0 {
                    continue;
                }
                let mut r = b.clone();
                r[i] -= c;
                if seen.insert(r.clone()) {
                    all.push(r);
                }
            }
            k += 1;
        }
        let mut pos: Vec<Vec<i64>> = all.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let dot = |x: &[i64], y: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += x[i] * gram[i][j] * y[j];
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(|r| dot(r, r)).collect();
        let coroots = roots
            .iter()
            .zip(&norms)
            .map(|(r, &nr)| (0..n).map(|j| 2 * dot(&unit(n, j), r) / nr).collect())
            .collect();

        let simple_refl: Vec<IntMat> = (0..n)
            .map(|i| {
                let mut m = IntMat::identity(n);
                for j in 0..n {
                    m.set(i, j, m.get(i, j) - cartan[i][j]);
                }
                m
            })
            .collect();

        let mut datum = RootDatum {
            series,
            rank,
            gram,
            cartan,
            roots,
            coroots,
            norms,
            index,
            npos,
            simple_refl,
            simple_perm: Vec::new(),
        };
        datum.simple_perm = (0..n)
            .map(|i| {
                (0..datum.roots.len())
                    .map(|r| datum.index_of(&datum.simple_refl[i].apply(&datum.roots[r])).expect("W permutes roots"))
                    .collect()
            })
            .collect();
        Ok(datum)
    }

    pub fn from_label(label: &CartanLabel) -> Result<RootDatum> {
        Self::build(label.series, label.rank)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> CartanLabel {
        CartanLabel::new(self.series, self.rank)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_q(&self) -> QMatrix {
        QMatrix::from_int_rows(&self.gram)
    }

    /// `cartan[i][j] = ⟨α_j, α̌_i⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    /// Coroot of root `i` in the fundamental-coweight basis.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Index of the simple root `α_j`.
    pub fn simple(&self, j: usize) -> usize {
        self.index[&unit(self.rank, j)]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.roots[self.npos - 1]
    }

    pub fn highest_root_index(&self) -> usize {
        self.npos - 1
    }

    pub fn simple_reflection(&self, i: usize) -> &IntMat {
        &self.simple_refl[i]
    }

    /// Image of each root under `s_i`.
    pub fn simple_root_perm(&self, i: usize) -> &[usize] {
        &self.simple_perm[i]
    }

    pub fn form_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let n = self.rank;
        let mut s = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.gram[i][j] != 0 && !y[j].is_zero() {
                    s += &x[i] * rat(self.gram[i][j]) * &y[j];
                }
            }
        }
        s
    }

    /// `(x | α_r)` for a rational vector and a root index.
    pub fn form_with_root(&self, x: &[Rational], r: usize) -> Rational {
        let n = self.rank;
        let root = &self.roots[r];
        let mut s = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let gi: i64 = (0..n).map(|j| self.gram[i][j] * root[j]).sum();
            if gi != 0 {
                s += &x[i] * rat(gi);
            }
        }
        s
    }

    /// `s_α(x) = x − ⟨x, α̌⟩α` on a rational vector.
    pub fn reflect(&self, x: &[Rational], r: usize) -> Vec<Rational> {
        let c = self.form_with_root(x, r) * rat(2) / rat(self.norms[r]);
        if c.is_zero() {
            return x.to_vec();
        }
        x.iter().zip(&self.roots[r]).map(|(xi, &ai)| xi - &c * rat(ai)).collect()
    }

    /// `s_α(β)` as a root index.
    pub fn reflect_root(&self, beta: usize, r: usize) -> usize {
        let c = 2 * self.form_int(&self.roots[beta], &self.roots[r]) / self.norms[r];
        let v: Vec<i64> = self.roots[beta].iter().zip(&self.roots[r]).map(|(b, a)| b - c * a).collect();
        self.index[&v]
    }

    /// Vector `λ` with `(λ | α_j) = c_j` for each simple root.
    pub fn vector_with_pairings(&self, c: &[Rational]) -> Vec<Rational> {
        let g = self.gram_q();
        let rhs = QMatrix::from_cols(&[c.to_vec()], self.rank);
        g.solve(&rhs).expect("form is nondegenerate").col(0)
    }

    /// Root indices of `Φ⁺`.
    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        0..self.npos
    }
}

pub(crate) fn unit(n: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}
