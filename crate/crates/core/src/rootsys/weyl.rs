use super::datum::RootDatum;
use super::intmat::IntMat;
use crate::error::{Error, Result};
use crate::exactlin::{rat, QMatrix, Rational};
use num_traits::Signed;

/// An element of the Weyl group: a reduced word, its matrix on the root
/// lattice and the permutation it induces on the roots.
///
/// The word `[a, b, c]` denotes `s_a s_b s_c`, so `s_c` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    mat: IntMat,
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(d: &RootDatum) -> Self {
        WeylElement { word: vec![], mat: IntMat::identity(d.rank()), perm: (0..d.num_roots()).collect() }
    }

    pub fn simple(d: &RootDatum, i: usize) -> Self {
        WeylElement { word: vec![i], mat: d.simple_reflection(i).clone(), perm: d.simple_root_perm(i).to_vec() }
    }

    pub fn from_word(d: &RootDatum, word: &[usize]) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&i| i >= d.rank()) {
            return Err(Error::invalid(format!("simple reflection index {bad} out of range")));
        }
        let mut perm: Vec<usize> = (0..d.num_roots()).collect();
        for &i in word.iter().rev() {
            let s = d.simple_root_perm(i);
            perm = perm.iter().map(|&r| s[r]).collect();
        }
        Ok(Self::from_perm(d, perm))
    }

    /// Recovers a reduced word from a root permutation by descent.
    fn from_perm(d: &RootDatum, perm: Vec<usize>) -> Self {
        let mut g = perm.clone();
        let mut letters = Vec::new();
        'outer: loop {
            for i in 0..d.rank() {
                if !d.is_positive(g[d.simple(i)]) {
                    let s = d.simple_root_perm(i);
                    g = s.iter().map(|&r| g[r]).collect();
                    letters.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        let mat = letters
            .iter()
            .fold(IntMat::identity(d.rank()), |m, &i| m.mul(d.simple_reflection(i)));
        WeylElement { word: letters, mat, perm }
    }

    /// The Weyl element with the given matrix, or an error if there is none.
    pub fn from_matrix(d: &RootDatum, mat: &IntMat) -> Result<Self> {
        let not_in_w = || Error::invalid("matrix is not an element of the Weyl group");
        if mat.dim() != d.rank() {
            return Err(not_in_w());
        }
        let perm: Option<Vec<usize>> = d.roots().iter().map(|r| d.index_of(&mat.apply(r))).collect();
        let w = Self::from_perm(d, perm.ok_or_else(not_in_w)?);
        if &w.mat != mat {
            return Err(not_in_w());
        }
        Ok(w)
    }

    pub fn from_q_matrix(d: &RootDatum, mat: &QMatrix) -> Result<Self> {
        let m = IntMat::from_q(mat).ok_or_else(|| Error::invalid("matrix is not integral"))?;
        Self::from_matrix(d, &m)
    }

    /// The reflection `s_α` for any root index `r`.
    pub fn reflection(d: &RootDatum, r: usize) -> Self {
        let n = d.rank();
        let (a, c) = (d.root(r), d.coroot(r));
        let mut m = IntMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, m.get(i, j) - a[i] * c[j]);
            }
        }
        Self::from_matrix(d, &m).expect("reflections lie in W")
    }

    /// `self ∘ other`.
    pub fn compose(&self, d: &RootDatum, other: &WeylElement) -> WeylElement {
        let perm = other.perm.iter().map(|&r| self.perm[r]).collect();
        Self::from_perm(d, perm)
    }

    pub fn inverse(&self, d: &RootDatum) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (r, &img) in self.perm.iter().enumerate() {
            perm[img] = r;
        }
        Self::from_perm(d, perm)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn int_matrix(&self) -> &IntMat {
        &self.mat
    }

    pub fn matrix(&self) -> QMatrix {
        self.mat.to_q()
    }

    pub fn root_perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply_root(&self, r: usize) -> usize {
        self.perm[r]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        apply_int_mat(&self.mat, v)
    }
}

pub(crate) fn apply_int_mat(m: &IntMat, v: &[Rational]) -> Vec<Rational> {
    let n = m.dim();
    (0..n)
        .map(|i| (0..n).filter(|&j| m.get(i, j) != 0).map(|j| rat(m.get(i, j)) * &v[j]).sum())
        .collect()
}

/// Longest element of the parabolic subgroup `W_I`, by greedy ascent.
pub fn longest_element(d: &RootDatum, subset: &[usize]) -> WeylElement {
    let mut perm: Vec<usize> = (0..d.num_roots()).collect();
    'outer: loop {
        for &i in subset {
            if d.is_positive(perm[d.simple(i)]) {
                let s = d.simple_root_perm(i);
                perm = s.iter().map(|&r| perm[r]).collect();
                continue 'outer;
            }
        }
        break;
    }
    WeylElement::from_perm(d, perm)
}

/// Moves `v` into the dominant chamber of the simple reflections in `allowed`.
/// Returns `(μ, x)` with `x·v = μ`.
pub fn dominant_walk(d: &RootDatum, v: &[Rational], allowed: &[usize]) -> (Vec<Rational>, WeylElement) {
    let mut mu = v.to_vec();
    let mut letters = Vec::new();
    'outer: loop {
        for &i in allowed {
            let r = d.simple(i);
            if d.form_with_root(&mu, r).is_negative() {
                mu = d.reflect(&mu, r);
                letters.push(i);
                continue 'outer;
            }
        }
        break;
    }
    letters.reverse();
    let x = WeylElement::from_word(d, &letters).expect("letters are simple indices");
    (mu, x)
}

/// An automorphism `wφ` of the root lattice, with `φ` a diagram automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedElement {
    weyl: WeylElement,
    diagram_perm: Vec<usize>,
    mat: IntMat,
    perm: Vec<usize>,
    order: usize,
}

/// Matrix of the diagram automorphism `α_i ↦ α_{π(i)}`.
pub fn diagram_matrix(pi: &[usize]) -> IntMat {
    let n = pi.len();
    let mut m = IntMat::from_rows(&vec![vec![0; n]; n]);
    for (i, &j) in pi.iter().enumerate() {
        m.set(j, i, 1);
    }
    m
}

impl TwistedElement {
    pub fn new(d: &RootDatum, weyl: WeylElement, diagram_perm: Vec<usize>) -> Result<Self> {
        let n = d.rank();
        let mut sorted = diagram_perm.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::invalid("diagram permutation is not a permutation of the simple roots"));
        }
        let g = d.gram();
        if (0..n).any(|i| (0..n).any(|j| g[diagram_perm[i]][diagram_perm[j]] != g[i][j])) {
            return Err(Error::invalid("permutation is not a diagram automorphism"));
        }
        let phi = diagram_matrix(&diagram_perm);
        let mat = weyl.mat.mul(&phi);
        let perm: Vec<usize> = d
            .roots()
            .iter()
            .map(|r| d.index_of(&mat.apply(r)).expect("wφ permutes roots"))
            .collect();
        let mut order = 1;
        let mut acc = mat.clone();
        while !acc.is_identity() {
            acc = acc.mul(&mat);
            order += 1;
        }
        Ok(TwistedElement { weyl, diagram_perm, mat, perm, order })
    }

    pub fn identity(d: &RootDatum) -> Self {
        Self::from_weyl(d, WeylElement::identity(d))
    }

    pub fn from_weyl(d: &RootDatum, w: WeylElement) -> Self {
        Self::new(d, w, (0..d.rank()).collect()).expect("identity diagram permutation")
    }

    pub fn diagram(d: &RootDatum, pi: Vec<usize>) -> Result<Self> {
        Self::new(d, WeylElement::identity(d), pi)
    }

    pub fn weyl(&self) -> &WeylElement {
        &self.weyl
    }

    pub fn diagram_perm(&self) -> &[usize] {
        &self.diagram_perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn int_matrix(&self) -> &IntMat {
        &self.mat
    }

    pub fn matrix(&self) -> QMatrix {
        self.mat.to_q()
    }

    pub fn root_perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply_root(&self, r: usize) -> usize {
        self.perm[r]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        apply_int_mat(&self.mat, v)
    }

    /// `ι_φ(x) = φxφ⁻¹` for a Weyl element `x`.
    pub fn conjugate_by_diagram(&self, d: &RootDatum, x: &WeylElement) -> WeylElement {
        let word: Vec<usize> = x.word.iter().map(|&i| self.diagram_perm[i]).collect();
        WeylElement::from_word(d, &word).expect("diagram image of a word")
    }

    /// `self ∘ other`.
    pub fn compose(&self, d: &RootDatum, other: &TwistedElement) -> TwistedElement {
        let w = self.weyl.compose(d, &self.conjugate_by_diagram(d, &other.weyl));
        let pi = (0..d.rank()).map(|i| self.diagram_perm[other.diagram_perm[i]]).collect();
        TwistedElement::new(d, w, pi).expect("product of automorphisms")
    }

    /// `x ∘ self` for a Weyl element `x`.
    pub fn left_mul(&self, d: &RootDatum, x: &WeylElement) -> TwistedElement {
        TwistedElement::new(d, x.compose(d, &self.weyl), self.diagram_perm.clone()).expect("same diagram part")
    }

    pub fn pow(&self, d: &RootDatum, k: usize) -> TwistedElement {
        (0..k).fold(TwistedElement::identity(d), |acc, _| acc.compose(d, self))
    }

    pub fn inverse(&self, d: &RootDatum) -> TwistedElement {
        self.pow(d, self.order - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    #[test]
    fn longest_element_a2() {
        let d = RootDatum::build(Series::A, 2).unwrap();
        assert!(longest_element(&d, &[]).is_identity());
        let w0 = longest_element(&d, &[0, 1]);
        assert_eq!(w0.length(), 3);
        for r in d.positive_roots() {
            assert!(!d.is_positive(w0.apply_root(r)));
        }
        let a1 = RootDatum::build(Series::A, 1).unwrap();
        assert_eq!(longest_element(&a1, &[0]).matrix(), QMatrix::from_int_rows(&[vec![-1]]));
    }

    #[test]
    fn reflections_are_involutions() {
        let d = RootDatum::build(Series::B, 3).unwrap();
        for r in 0..d.num_roots() {
            let s = WeylElement::reflection(&d, r);
            assert!(s.compose(&d, &s).is_identity());
            assert_eq!(s.apply_root(r), d.neg(r));
        }
    }

    #[test]
    fn word_matrix_consistency() {
        let d = RootDatum::build(Series::E, 6).unwrap();
        let w = WeylElement::from_word(&d, &[0, 2, 3, 1, 4, 3, 5, 0]).unwrap();
        let m = w.word().iter().fold(IntMat::identity(6), |m, &i| m.mul(d.simple_reflection(i)));
        assert_eq!(&m, w.int_matrix());
        assert!(w.inverse(&d).compose(&d, &w).is_identity());
    }

    #[test]
    fn non_weyl_matrix_rejected() {
        let d = RootDatum::build(Series::A, 2).unwrap();
        let swap = diagram_matrix(&[1, 0]);
        assert!(WeylElement::from_matrix(&d, &swap).is_err());
    }

    #[test]
    fn twisted_order() {
        let d = RootDatum::build(Series::D, 4).unwrap();
        let t = TwistedElement::diagram(&d, vec![2, 1, 3, 0]).unwrap();
        assert_eq!(t.order(), 3);
        assert!(t.pow(&d, 3).int_matrix().is_identity());
    }
}
