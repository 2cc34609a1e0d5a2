use super::datum::RootDatum;
use super::intmat::q_vec;
use crate::error::{Error, Result};
use crate::exactlin::{Rational, Subspace};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// A symmetric closed subset Σ of Φ, with its positive part, simple system
/// and decomposition into irreducible components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsystemHandle {
    roots: Vec<usize>,
    positive: Vec<usize>,
    simple: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl SubsystemHandle {
    pub fn new(d: &RootDatum, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = roots.into_iter().collect();
        if set.iter().any(|&r| r >= d.num_roots()) {
            return Err(Error::invalid("root index out of range"));
        }
        if set.iter().any(|&r| !set.contains(&d.neg(r))) {
            return Err(Error::invalid("subset is not symmetric"));
        }
        if !is_closed(d, &set) {
            return Err(Error::invalid("subset is not closed"));
        }
        Ok(Self::from_set_unchecked(d, set))
    }

    fn from_set_unchecked(d: &RootDatum, set: BTreeSet<usize>) -> Self {
        let roots: Vec<usize> = set.iter().copied().collect();
        let positive: Vec<usize> = roots.iter().copied().filter(|&r| d.is_positive(r)).collect();
        let pos_set: BTreeSet<usize> = positive.iter().copied().collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&r| {
                !positive.iter().any(|&a| {
                    let diff: Vec<i64> = d.root(r).iter().zip(d.root(a)).map(|(x, y)| x - y).collect();
                    d.index_of(&diff).is_some_and(|b| pos_set.contains(&b))
                })
            })
            .collect();

        // Connected components of the simple system under non-orthogonality.
        let mut comp_of = vec![usize::MAX; simple.len()];
        let mut simple_comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..simple.len() {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let c = simple_comps.len();
            let mut stack = vec![start];
            comp_of[start] = c;
            let mut members = vec![];
            while let Some(a) = stack.pop() {
                members.push(simple[a]);
                for b in 0..simple.len() {
                    if comp_of[b] == usize::MAX && d.form_int(d.root(simple[a]), d.root(simple[b])) != 0 {
                        comp_of[b] = c;
                        stack.push(b);
                    }
                }
            }
            members.sort_unstable();
            simple_comps.push(members);
        }
        let components = simple_comps
            .iter()
            .map(|cs| {
                roots
                    .iter()
                    .copied()
                    .filter(|&r| cs.iter().any(|&s| d.form_int(d.root(r), d.root(s)) != 0))
                    .collect()
            })
            .collect();
        SubsystemHandle { roots, positive, simple, components }
    }

    pub fn empty() -> Self {
        SubsystemHandle { roots: vec![], positive: vec![], simple: vec![], components: vec![] }
    }

    pub fn full(d: &RootDatum) -> Self {
        Self::from_set_unchecked(d, (0..d.num_roots()).collect())
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn positive(&self) -> &[usize] {
        &self.positive
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    /// Root sets of the irreducible components.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Simple roots of each component, in the order of [`Self::components`].
    pub fn component_simple(&self) -> Vec<Vec<usize>> {
        self.components
            .iter()
            .map(|c| self.simple.iter().copied().filter(|s| c.contains(s)).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn as_set(&self) -> BTreeSet<usize> {
        self.roots.iter().copied().collect()
    }

    pub fn span(&self, d: &RootDatum) -> Subspace<Rational> {
        span_of(d, &self.roots)
    }
}

pub fn span_of(d: &RootDatum, roots: &[usize]) -> Subspace<Rational> {
    let vecs: Vec<Vec<Rational>> = roots.iter().map(|&r| q_vec(d.root(r))).collect();
    Subspace::spanned_by(d.rank(), &Rational::zero(), &vecs)
}

pub fn is_closed(d: &RootDatum, set: &BTreeSet<usize>) -> bool {
    set.iter().all(|&a| {
        set.iter().all(|&b| {
            let s: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
            d.index_of(&s).is_none_or(|c| set.contains(&c))
        })
    })
}

/// Smallest closed subset containing `s`.
pub fn closure(d: &RootDatum, s: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = s.iter().copied().collect();
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                let v: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
                if let Some(c) = d.index_of(&v) {
                    if !set.contains(&c) {
                        added.push(c);
                    }
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

/// `Φ ∩ span(S)`, the smallest Levi subsystem containing `S`.
pub fn levi_closure(d: &RootDatum, s: &[usize]) -> SubsystemHandle {
    let span = span_of(d, s);
    let set = (0..d.num_roots()).filter(|&r| span.contains(&q_vec(d.root(r)))).collect();
    SubsystemHandle::from_set_unchecked(d, set)
}

/// `Ψ_λ = {α : (α | λ) ≥ 0}`.
pub fn parabolic_from_vector(d: &RootDatum, lambda: &[Rational]) -> BTreeSet<usize> {
    (0..d.num_roots()).filter(|&r| !d.form_with_root(lambda, r).is_negative()).collect()
}

/// `Φ^λ = {α : (α | λ) = 0}` as a subsystem.
pub fn centralizer_of_vector(d: &RootDatum, lambda: &[Rational]) -> SubsystemHandle {
    let set = (0..d.num_roots()).filter(|&r| d.form_with_root(lambda, r).is_zero()).collect();
    SubsystemHandle::from_set_unchecked(d, set)
}

/// Roots in the span of the given simple roots, as a subsystem.
pub fn standard_levi(d: &RootDatum, subset: &[usize]) -> SubsystemHandle {
    let simple: Vec<usize> = subset.iter().map(|&i| d.simple(i)).collect();
    levi_closure(d, &simple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::rootsys::Series;

    #[test]
    fn closure_examples() {
        let d = RootDatum::build(Series::A, 2).unwrap();
        let c = closure(&d, &[0, 1]);
        let vecs: Vec<&[i64]> = c.iter().map(|&r| d.root(r)).collect();
        assert_eq!(vecs.len(), 3);
        assert!(vecs.contains(&&[1i64, 1][..]));
        assert!(closure(&d, &[]).is_empty());
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(closure(&d, &all).len(), 6);
    }

    #[test]
    fn levi_closure_examples() {
        let d = RootDatum::build(Series::A, 2).unwrap();
        let top = d.index_of(&[1, 1]).unwrap();
        let l = levi_closure(&d, &[top]);
        assert_eq!(l.roots(), &[top, d.neg(top)]);
        assert_eq!(levi_closure(&d, &[0, 1]).len(), 6);
        assert!(levi_closure(&d, &[]).is_empty());
    }

    #[test]
    fn parabolic_examples() {
        let d = RootDatum::build(Series::A, 2).unwrap();
        assert_eq!(parabolic_from_vector(&d, &[rat(0), rat(0)]).len(), 6);
        let rho = d.vector_with_pairings(&[rat(1), rat(1)]);
        let p: Vec<usize> = parabolic_from_vector(&d, &rho).into_iter().collect();
        assert_eq!(p, vec![0, 1, 2]);
        let w1 = d.vector_with_pairings(&[rat(1), rat(0)]);
        let p = parabolic_from_vector(&d, &w1);
        assert_eq!(p.len(), 4);
        assert!(p.contains(&d.neg(d.simple(1))));
    }

    #[test]
    fn handle_decomposition() {
        let d = RootDatum::build(Series::B, 3).unwrap();
        let h = SubsystemHandle::full(&d);
        assert_eq!(h.simple(), &[0, 1, 2]);
        assert_eq!(h.components().len(), 1);
        let two = standard_levi(&d, &[0, 2]);
        assert_eq!(two.components().len(), 2);
        assert!(SubsystemHandle::new(&d, [0]).is_err());
    }
}
