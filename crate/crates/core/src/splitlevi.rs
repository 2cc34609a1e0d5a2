//! Smallest split Levi covers, d-split covers and standardization of
//! split Levi pairs.

use crate::error::{Error, Result};
use crate::exactlin::{
    eigen_projector, fixed_projector, rat, CycMatrix, Cyclotomic, QMatrix, Rational, Scalar, Subspace,
};
use crate::rootsys::{
    dominant_walk, levi_closure, RootDatum, SubsystemHandle, TwistedElement, WeylElement,
};
use num_traits::Zero;
use std::collections::{BTreeSet, VecDeque};

fn root_q(d: &RootDatum, r: usize) -> Vec<Rational> {
    d.root(r).iter().map(|&x| rat(x)).collect()
}

fn full_handle(d: &RootDatum) -> SubsystemHandle {
    SubsystemHandle::full(d)
}

fn handle_from_indices(d: &RootDatum, set: BTreeSet<usize>) -> Result<SubsystemHandle> {
    SubsystemHandle::new(d, set).map_err(|e| Error::Internal(format!("cover is not a subsystem: {e}")))
}

/// Smallest `⟨t⟩`-split Levi subsystem containing `sigma`.
pub fn split_levi_cover(d: &RootDatum, sigma: &[usize], t: &TwistedElement) -> Result<SubsystemHandle> {
    let theta = fixed_projector(&t.matrix(), t.order())?;
    let images: Vec<Vec<Rational>> = sigma.iter().map(|&r| theta.apply(&root_q(d, r))).collect();
    let target = Subspace::spanned_by(d.rank(), &Rational::zero(), &images);
    let set = (0..d.num_roots())
        .filter(|&r| target.contains(&theta.apply(&root_q(d, r))))
        .collect();
    handle_from_indices(d, set)
}

/// Whether `h` equals its own split Levi cover.
pub fn is_split_levi(d: &RootDatum, h: &SubsystemHandle, t: &TwistedElement) -> Result<bool> {
    Ok(split_levi_cover(d, h.roots(), t)?.roots() == h.roots())
}

/// Cover with respect to the `ζ`-eigenspace of `g = w·φ`, `ζ = ζ_n^k`.
fn eigen_cover(d: &RootDatum, sigma: &[usize], g: &TwistedElement, k: usize) -> Result<SubsystemHandle> {
    let theta: CycMatrix = eigen_projector(&g.matrix(), g.order(), k as i64)?;
    let zero = theta.zero_elem().clone();
    let embed = |r: usize| -> Vec<Cyclotomic> { d.root(r).iter().map(|&x| zero.from_rational(&rat(x))).collect() };
    let images: Vec<Vec<Cyclotomic>> = sigma.iter().map(|&r| theta.apply(&embed(r))).collect();
    let target = Subspace::spanned_by(d.rank(), &zero, &images);
    let set = (0..d.num_roots())
        .filter(|&r| target.contains(&theta.apply(&embed(r))))
        .collect();
    handle_from_indices(d, set)
}

/// Smallest `(φ, d)`-split Levi subsystem containing `sigma`, using the
/// primitive root `ζ_d = ζ_n^{n/d}`.
pub fn d_split_cover(
    d: &RootDatum,
    sigma: &[usize],
    phi: &TwistedElement,
    w: &WeylElement,
    dd: usize,
) -> Result<SubsystemHandle> {
    d_split_cover_at(d, sigma, phi, w, dd, 1)
}

/// As [`d_split_cover`] with `ζ = ζ_d^k` for `k` coprime to `d`.
pub fn d_split_cover_at(
    d: &RootDatum,
    sigma: &[usize],
    phi: &TwistedElement,
    w: &WeylElement,
    dd: usize,
    k: usize,
) -> Result<SubsystemHandle> {
    if dd == 0 {
        return Err(Error::invalid("d must be positive"));
    }
    if num_integer::gcd(k, dd) != 1 {
        return Err(Error::invalid(format!("exponent {k} is not coprime to {dd}")));
    }
    let g = phi.left_mul(d, w);
    let n = g.order();
    if !n.is_multiple_of(dd) {
        // The eigenspace is zero, so every root projects into θ(span Σ) = 0.
        return Ok(full_handle(d));
    }
    eigen_cover(d, sigma, &g, (n / dd) * k)
}

/// All split Levi subsystems for `t` (or `(t, d)`-split ones), generated by
/// closing the cover operation over one-root extensions.
pub fn enumerate_split_levis(d: &RootDatum, t: &TwistedElement, dd: Option<usize>) -> Result<Vec<SubsystemHandle>> {
    if d.rank() > 6 {
        return Err(Error::Unsupported(format!("enumeration is limited to rank 6, got rank {}", d.rank())));
    }
    let id = WeylElement::identity(d);
    let cover = |s: &[usize]| match dd {
        None => split_levi_cover(d, s, t),
        Some(k) => d_split_cover(d, s, t, &id, k),
    };
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let push = |h: SubsystemHandle, found: &mut BTreeSet<Vec<usize>>, queue: &mut VecDeque<SubsystemHandle>| {
        if found.insert(h.roots().to_vec()) {
            queue.push_back(h);
        }
    };
    push(cover(&[])?, &mut found, &mut queue);
    for r in 0..d.num_roots() {
        push(cover(&[r])?, &mut found, &mut queue);
    }
    while let Some(h) = queue.pop_front() {
        for r in 0..d.num_roots() {
            if h.contains(r) {
                continue;
            }
            let mut s = h.roots().to_vec();
            s.push(r);
            push(cover(&s)?, &mut found, &mut queue);
        }
    }
    found
        .into_iter()
        .map(|roots| SubsystemHandle::new(d, roots))
        .collect()
}

/// Result of moving a split Levi pair to a standard one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// Simple-root indices `I` with `xΣ = Φ_I`.
    pub subset: Vec<usize>,
    /// `z = x·w·ι_φ(x)⁻¹ ∈ W_I`.
    pub z: WeylElement,
    /// The conjugating element.
    pub x: WeylElement,
}

/// Basis of `V^t`.
fn fixed_space(d: &RootDatum, t: &TwistedElement) -> Subspace<Rational> {
    let m = t.matrix().sub(&QMatrix::identity(d.rank()));
    Subspace::spanned_by(d.rank(), &Rational::zero(), &m.kernel())
}

/// Conjugates the `t`-split Levi pair `(Σ, w)`, where `t = wφ`, to a
/// standard pair `(Φ_I, z)`.
pub fn conjugate_to_standard(d: &RootDatum, sigma: &SubsystemHandle, t: &TwistedElement) -> Result<StandardForm> {
    let gram = d.gram_q();
    let e = sigma.span(d).orthogonal_complement(&gram).intersect(&fixed_space(d, t));
    let orth_all = |r: usize, basis: &[Vec<Rational>]| basis.iter().all(|b| d.form_with_root(b, r).is_zero());
    let basis = e.basis().to_vec();
    let annihilated: Vec<usize> = (0..d.num_roots()).filter(|&r| orth_all(r, &basis)).collect();
    if annihilated != sigma.roots() {
        return Err(Error::invalid("subsystem is not a split Levi subsystem for this twisted element"));
    }

    let mut m = rat(1);
    let lambda = loop {
        let mut lambda = vec![Rational::zero(); d.rank()];
        let mut c = rat(1);
        for b in &basis {
            for (l, x) in lambda.iter_mut().zip(b) {
                *l += &c * x;
            }
            c *= &m;
        }
        if (0..d.num_roots()).all(|r| sigma.contains(r) || !d.form_with_root(&lambda, r).is_zero()) {
            break lambda;
        }
        m *= rat(2);
    };

    let all: Vec<usize> = (0..d.rank()).collect();
    let (mu, x) = dominant_walk(d, &lambda, &all);
    let subset: Vec<usize> = all
        .iter()
        .copied()
        .filter(|&i| d.form_with_root(&mu, d.simple(i)).is_zero())
        .collect();
    let xinv_twisted = t.conjugate_by_diagram(d, &x.inverse(d));
    let z = x.compose(d, &t.weyl().compose(d, &xinv_twisted));
    if z.word().iter().any(|i| !subset.contains(i)) {
        return Err(Error::Internal("standardized twist leaves the parabolic subgroup".into()));
    }
    Ok(StandardForm { subset, z, x })
}

/// `x·Σ` as a sorted root index list.
pub fn translate(x: &WeylElement, roots: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = roots.iter().map(|&r| x.apply_root(r)).collect();
    v.sort_unstable();
    v
}

/// `Φ ∩ span(S)` for use when the twist is trivial.
pub fn untwisted_cover(d: &RootDatum, sigma: &[usize]) -> SubsystemHandle {
    levi_closure(d, sigma)
}
