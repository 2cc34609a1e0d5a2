//! Semisimple parameters of adjoint groups: coweight representatives,
//! centralizer root systems, isolated classes, Frobenius action and
//! twisted coset representatives.

use crate::error::{Error, Result};
use crate::exactlin::{rat, QMatrix, Rational};
use crate::rootsys::{
    longest_element, IntMat, RootDatum, Series, SubsystemHandle, TwistedElement, WeylElement,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A semisimple element given by a rational coweight vector modulo the
/// coweight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemisimpleParam {
    v: Vec<Rational>,
    excluded_primes: BTreeSet<u64>,
}

fn frac_part(x: &Rational) -> Rational {
    x - x.floor()
}

impl SemisimpleParam {
    pub fn new(v: Vec<Rational>, excluded_primes: BTreeSet<u64>) -> Result<Self> {
        for x in &v {
            for &p in &excluded_primes {
                if (x.denom() % BigInt::from(p)).is_zero() {
                    return Err(Error::invalid(format!("denominator of {x} is divisible by the characteristic {p}")));
                }
            }
        }
        Ok(SemisimpleParam { v: v.iter().map(frac_part).collect(), excluded_primes })
    }

    pub fn identity(rank: usize) -> Self {
        SemisimpleParam { v: vec![Rational::zero(); rank], excluded_primes: BTreeSet::new() }
    }

    /// Coordinates in the fundamental-coweight basis, reduced into `[0, 1)`.
    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn excluded_primes(&self) -> &BTreeSet<u64> {
        &self.excluded_primes
    }

    /// Smallest `N ≥ 1` with `N·v` integral.
    pub fn order(&self) -> u64 {
        self.v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
            .to_u64()
            .expect("order fits in u64")
    }

    pub fn is_identity(&self) -> bool {
        self.v.iter().all(Zero::is_zero)
    }

    /// Equality modulo the coweight lattice.
    pub fn equiv(&self, other: &SemisimpleParam) -> bool {
        self.v == other.v
    }

    fn with_v(&self, v: Vec<Rational>) -> Self {
        SemisimpleParam { v: v.iter().map(frac_part).collect(), excluded_primes: self.excluded_primes.clone() }
    }

    /// `⟨α, v⟩` for a root vector `α`.
    pub fn pairing(&self, alpha: &[i64]) -> Rational {
        alpha.iter().zip(&self.v).filter(|(a, _)| **a != 0).map(|(&a, x)| rat(a) * x).sum()
    }
}

impl fmt::Display for SemisimpleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.v.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Action of `w` on coweights: `(w·v)_i = ⟨w⁻¹α_i, v⟩`.
pub fn act_on_coweight(d: &RootDatum, w: &WeylElement, v: &[Rational]) -> Vec<Rational> {
    let m = w.inverse(d).int_matrix().transpose();
    crate::rootsys::IntMat::to_q(&m).apply(v)
}

/// Contragredient of the diagram automorphism on coweights:
/// `(φ̌v)_{π(i)} = v_i`.
pub fn diagram_on_coweight(pi: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (i, &j) in pi.iter().enumerate() {
        out[j] = v[i].clone();
    }
    out
}

/// `Φ(s) = {α : ⟨α, v⟩ ∈ ℤ}`.
pub fn centralizer_roots(d: &RootDatum, s: &SemisimpleParam) -> SubsystemHandle {
    let set: Vec<usize> = (0..d.num_roots()).filter(|&r| s.pairing(d.root(r)).is_integer()).collect();
    SubsystemHandle::new(d, set).expect("centralizer of a semisimple element is a closed subsystem")
}

/// Node of the extended Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    /// `−α₀`.
    Lowest,
    /// Simple root `α_j`, 0-based.
    Simple(usize),
}

impl Node {
    /// 1-based label, with `0` for `−α₀`.
    pub fn label(self) -> usize {
        match self {
            Node::Lowest => 0,
            Node::Simple(j) => j + 1,
        }
    }

    pub fn from_label(d: &RootDatum, k: usize) -> Result<Node> {
        match k {
            0 => Ok(Node::Lowest),
            k if k <= d.rank() => Ok(Node::Simple(k - 1)),
            _ => Err(Error::invalid(format!("node {k} out of range 0..={}", d.rank()))),
        }
    }

    pub fn root_index(self, d: &RootDatum) -> usize {
        match self {
            Node::Lowest => d.neg(d.highest_root_index()),
            Node::Simple(j) => d.simple(j),
        }
    }

    /// `n_α`, with `n_{−α₀} = 1`.
    pub fn coefficient(self, d: &RootDatum) -> i64 {
        match self {
            Node::Lowest => 1,
            Node::Simple(j) => d.highest_root()[j],
        }
    }

    pub fn all(d: &RootDatum) -> Vec<Node> {
        std::iter::once(Node::Lowest).chain((0..d.rank()).map(Node::Simple)).collect()
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Lowest => f.write_str("-a0"),
            Node::Simple(j) => write!(f, "a{}", j + 1),
        }
    }
}

/// Characteristic of the underlying field, as far as isolated classes care.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characteristic {
    /// No restriction.
    Generic,
    /// Some odd prime, not further specified.
    Odd,
    Prime(u64),
}

impl Characteristic {
    pub fn allows(self, n: i64) -> bool {
        match self {
            Characteristic::Generic | Characteristic::Odd => true,
            Characteristic::Prime(p) => n.gcd(&(p as i64)) == 1,
        }
    }

    pub fn excluded_primes(self) -> BTreeSet<u64> {
        match self {
            Characteristic::Prime(p) => [p].into_iter().collect(),
            _ => BTreeSet::new(),
        }
    }
}

impl std::str::FromStr for Characteristic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" | "0" => Ok(Characteristic::Generic),
            "odd" => Ok(Characteristic::Odd),
            _ => {
                let p: u64 = s.parse().map_err(|_| Error::invalid(format!("bad characteristic {s:?}")))?;
                if p < 2 || (2..p).take_while(|k| k * k <= p).any(|k| p.is_multiple_of(k)) {
                    return Err(Error::invalid(format!("characteristic {p} is not prime")));
                }
                Ok(Characteristic::Prime(p))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRep {
    pub node: Node,
    pub coefficient: i64,
    pub param: SemisimpleParam,
    /// Root indices of `Δ̃ ∖ {α}`.
    pub centralizer_simples: Vec<usize>,
}

impl IsolatedRep {
    pub fn centralizer(&self, d: &RootDatum) -> SubsystemHandle {
        centralizer_roots(d, &self.param)
    }
}

/// `h_α = ϖ̌_α / n_α` for a node of the extended diagram.
pub fn node_param(d: &RootDatum, node: Node, excluded: BTreeSet<u64>) -> Result<SemisimpleParam> {
    let mut v = vec![Rational::zero(); d.rank()];
    if let Node::Simple(j) = node {
        v[j] = Rational::new(BigInt::one(), BigInt::from(node.coefficient(d)));
    }
    SemisimpleParam::new(v, excluded)
}

pub fn isolated_rep(d: &RootDatum, node: Node, p: Characteristic) -> Result<IsolatedRep> {
    let n = node.coefficient(d);
    if !p.allows(n) {
        return Err(Error::invalid(format!("node {node} has coefficient {n}, not allowed in this characteristic")));
    }
    let param = node_param(d, node, p.excluded_primes())?;
    let centralizer_simples = Node::all(d)
        .into_iter()
        .filter(|&m| m != node)
        .map(|m| m.root_index(d))
        .collect();
    Ok(IsolatedRep { node, coefficient: n, param, centralizer_simples })
}

/// One representative per node of `Δ̃_{p'}`.
pub fn isolated_reps(d: &RootDatum, p: Characteristic) -> Vec<IsolatedRep> {
    Node::all(d)
        .into_iter()
        .filter(|n| p.allows(n.coefficient(d)))
        .map(|n| isolated_rep(d, n, p).expect("allowed node"))
        .collect()
}

fn vertex(d: &RootDatum, node: Node) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d.rank()];
    if let Node::Simple(j) = node {
        v[j] = Rational::new(BigInt::one(), BigInt::from(node.coefficient(d)));
    }
    v
}

/// Orbits of the extended-diagram nodes under the fundamental group, which
/// acts on the fundamental alcove through `x ↦ ϖ̌_j + w_0^{Δ∖{j}} w_0 · x`
/// for each minuscule node `j`.
pub fn node_orbits(d: &RootDatum) -> Vec<Vec<Node>> {
    let nodes = Node::all(d);
    let verts: Vec<Vec<Rational>> = nodes.iter().map(|&n| vertex(d, n)).collect();
    let all: Vec<usize> = (0..d.rank()).collect();
    let w0 = longest_element(d, &all);
    let maps: Vec<Vec<usize>> = (0..d.rank())
        .filter(|&j| d.highest_root()[j] == 1)
        .map(|j| {
            let rest: Vec<usize> = all.iter().copied().filter(|&i| i != j).collect();
            let u = longest_element(d, &rest).compose(d, &w0);
            verts
                .iter()
                .map(|x| {
                    let mut y = act_on_coweight(d, &u, x);
                    y[j] += rat(1);
                    verts.iter().position(|z| *z == y).expect("fundamental group permutes alcove vertices")
                })
                .collect()
        })
        .collect();
    let mut seen = vec![false; nodes.len()];
    let mut orbits = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < orbit.len() {
            for m in &maps {
                let img = m[orbit[k]];
                if !seen[img] {
                    seen[img] = true;
                    orbit.push(img);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|i| nodes[i]).collect());
    }
    orbits
}

/// Isolated classes up to conjugacy: one representative per fundamental-group
/// orbit of allowed nodes, preferring `−α₀` and then the smallest index.
/// With a diagram twist, orbits not stable under it are dropped.
pub fn isolated_classes(d: &RootDatum, p: Characteristic, diagram: Option<&[usize]>) -> Vec<IsolatedRep> {
    node_orbits(d)
        .into_iter()
        .filter(|orbit| p.allows(orbit[0].coefficient(d)))
        .filter(|orbit| {
            diagram.is_none_or(|pi| {
                let img = match orbit[0] {
                    Node::Lowest => Node::Lowest,
                    Node::Simple(j) => Node::Simple(pi[j]),
                };
                orbit.contains(&img)
            })
        })
        .map(|orbit| isolated_rep(d, orbit[0], p).expect("allowed node"))
        .collect()
}

/// Congruence class of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QClass {
    /// `q ≡ r (mod m)`.
    Congruence { residue: u64, modulus: u64 },
    /// `q ≡ −1` modulo the order of every element considered.
    MinusOne,
    /// `q ≡ 1` modulo the order of every element considered.
    One,
}

impl QClass {
    /// `q mod n`.
    pub fn residue_mod(self, n: u64) -> Result<u64> {
        let r = match self {
            QClass::One => 1 % n,
            QClass::MinusOne => n - 1 % n,
            QClass::Congruence { residue, modulus } => {
                if modulus % n != 0 {
                    return Err(Error::invalid(format!(
                        "q is only known modulo {modulus}, but the element has order {n}"
                    )));
                }
                residue % n
            }
        };
        if n > 1 && r.gcd(&n) != 1 {
            return Err(Error::invalid(format!("q ≡ {r} (mod {n}) is not a unit")));
        }
        Ok(r % n.max(1))
    }
}

impl std::str::FromStr for QClass {
    type Err = Error;
    /// Parses `r:m`, `-1` or `1`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-1" => Ok(QClass::MinusOne),
            "1" => Ok(QClass::One),
            _ => {
                let bad = || Error::invalid(format!("bad q class {s:?}; expected r:m"));
                let (r, m) = s.split_once(':').ok_or_else(bad)?;
                let m: u64 = m.trim().parse().map_err(|_| bad())?;
                let r: i64 = r.trim().parse().map_err(|_| bad())?;
                if m == 0 {
                    return Err(bad());
                }
                Ok(QClass::Congruence { residue: r.rem_euclid(m as i64) as u64, modulus: m })
            }
        }
    }
}

/// Parameter of `F(s)` where `F = q·φ̌`.
pub fn frobenius_act(s: &SemisimpleParam, diagram: &[usize], q: QClass) -> Result<SemisimpleParam> {
    let n = s.order();
    let r = q.residue_mod(n)?;
    let v = diagram_on_coweight(diagram, s.v());
    Ok(s.with_v(v.iter().map(|x| x * rat(r as i64)).collect()))
}

/// `w·s` as a parameter.
pub fn weyl_act(d: &RootDatum, w: &WeylElement, s: &SemisimpleParam) -> SemisimpleParam {
    s.with_v(act_on_coweight(d, w, s.v()))
}

/// A class `s` with a twisting element `w` such that `^wF(s) = s` and
/// `wφ` permutes `Δ(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClassRep {
    pub param: SemisimpleParam,
    pub w: WeylElement,
    pub twisted: TwistedElement,
    /// Root indices of `Δ(s)`, permuted by `twisted`.
    pub delta: Vec<usize>,
}

impl TwistedClassRep {
    pub fn verify(&self, d: &RootDatum, q: QClass) -> Result<()> {
        let delta: BTreeSet<usize> = self.delta.iter().copied().collect();
        let img: BTreeSet<usize> = self.delta.iter().map(|&r| self.twisted.apply_root(r)).collect();
        if img != delta {
            return Err(Error::Internal("twisted element does not permute Δ(s)".into()));
        }
        let fs = frobenius_act(&self.param, self.twisted.diagram_perm(), q)?;
        if !weyl_act(d, &self.w, &fs).equiv(&self.param) {
            return Err(Error::Internal("coset representative does not fix s".into()));
        }
        Ok(())
    }
}

/// Simple system `Δ(s)` ordered as given; the element `c ∈ W(s)` returned
/// brings `g·Δ(s)` back to `Δ(s)`.
fn align_to_simple_system(d: &RootDatum, delta: &[usize], g: &TwistedElement) -> WeylElement {
    let k = delta.len();
    let gram = QMatrix::from_rows(
        delta
            .iter()
            .map(|&a| delta.iter().map(|&b| rat(d.form_int(d.root(a), d.root(b)))).collect())
            .collect(),
    );
    let ones = QMatrix::from_cols(&[vec![Rational::one(); k]], k);
    let coeffs = gram.solve(&ones).expect("Δ(s) is linearly independent").col(0);
    let mut lambda = vec![Rational::zero(); d.rank()];
    for (c, &a) in coeffs.iter().zip(delta) {
        for (l, &x) in lambda.iter_mut().zip(d.root(a)) {
            *l += c * rat(x);
        }
    }
    let mut mu = g.apply(&lambda);
    let mut c = WeylElement::identity(d);
    'outer: loop {
        for &b in delta {
            if d.form_with_root(&mu, b).is_negative() {
                mu = d.reflect(&mu, b);
                c = WeylElement::reflection(d, b).compose(d, &c);
                continue 'outer;
            }
        }
        break;
    }
    c
}

/// A coset representative `w₁` with `^{w₁}F(s) = s` and `w₁φ` stabilizing
/// `Δ(s)`, for an arbitrary `s` whose `F(s)` is conjugate to `s` by `1` or `w₀`.
pub fn twisting_rep(
    d: &RootDatum,
    param: &SemisimpleParam,
    delta: &[usize],
    diagram: &[usize],
    q: QClass,
) -> Result<TwistedClassRep> {
    let fs = frobenius_act(param, diagram, q)?;
    let all: Vec<usize> = (0..d.rank()).collect();
    let candidates = [WeylElement::identity(d), longest_element(d, &all)];
    let w = candidates
        .into_iter()
        .find(|w| weyl_act(d, w, &fs).equiv(param))
        .ok_or_else(|| {
            let mut msg = format!("no coset representative among {{1, w0}} for s = {param}");
            if d.series() == Series::E && d.rank() == 8 && param.order() == 5 {
                msg.push_str("; this is the exceptional E8 case n = 5 with q ≡ 2, 3 (mod 5)");
            }
            Error::Unsupported(msg)
        })?;
    let g = TwistedElement::new(d, w.clone(), diagram.to_vec())?;
    let c = align_to_simple_system(d, delta, &g);
    let w1 = c.compose(d, &w);
    let twisted = TwistedElement::new(d, w1.clone(), diagram.to_vec())?;
    let out = TwistedClassRep { param: param.clone(), w: w1, twisted, delta: delta.to_vec() };
    out.verify(d, q)?;
    Ok(out)
}

/// [`twisting_rep`] for an isolated node representative.
pub fn choose_coset_rep(d: &RootDatum, rep: &IsolatedRep, diagram: &[usize], q: QClass) -> Result<TwistedClassRep> {
    twisting_rep(d, &rep.param, &rep.centralizer_simples, diagram, q).map_err(|e| match e {
        Error::Unsupported(_) => Error::Unsupported(format!(
            "no coset representative among {{1, w0}} for node {} with n = {}; \
             this is the exceptional E8 case n = 5 with q ≡ 2, 3 (mod 5)",
            rep.node, rep.coefficient
        )),
        e => e,
    })
}

/// Permutations of `delta` preserving the Gram matrix.
fn diagram_automorphisms(d: &RootDatum, delta: &[usize]) -> Vec<Vec<usize>> {
    let k = delta.len();
    let g = |a: usize, b: usize| d.form_int(d.root(delta[a]), d.root(delta[b]));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(
        k: usize,
        g: &dyn Fn(usize, usize) -> i64,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = cur.len();
        if i == k {
            out.push(cur.clone());
            return;
        }
        for j in 0..k {
            if used[j] || g(i, i) != g(j, j) {
                continue;
            }
            if (0..i).any(|a| g(a, i) != g(cur[a], j)) {
                continue;
            }
            used[j] = true;
            cur.push(j);
            rec(k, g, cur, used, out);
            cur.pop();
            used[j] = false;
        }
    }
    rec(k, &g, &mut cur, &mut used, &mut out);
    out
}

/// Elements of `W` stabilizing `Δ(s)` and fixing `s`: a complement to
/// `W(s)` in `C_W(s)`.
pub fn component_group(d: &RootDatum, s: &SemisimpleParam, delta: &[usize]) -> Result<Vec<WeylElement>> {
    let n = d.rank();
    if delta.len() != n {
        return Err(Error::invalid("component group needs an isolated element"));
    }
    let cols: Vec<Vec<Rational>> = delta.iter().map(|&r| d.root(r).iter().map(|&x| rat(x)).collect()).collect();
    let b = QMatrix::from_cols(&cols, n);
    let binv = b.inverse().ok_or_else(|| Error::invalid("Δ(s) is not a basis"))?;
    let mut out = Vec::new();
    for sigma in diagram_automorphisms(d, delta) {
        let img: Vec<Vec<Rational>> = sigma.iter().map(|&j| cols[j].clone()).collect();
        let m = QMatrix::from_cols(&img, n).mul(&binv);
        let Ok(w) = WeylElement::from_q_matrix(d, &m) else {
            continue;
        };
        if weyl_act(d, &w, s).equiv(s) {
            out.push(w);
        }
    }
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word().cmp(b.word())));
    Ok(out)
}

/// Orbit representatives of the twisted classes `C_W°(s)·ω·w₁`, under
/// twisted conjugation by `C_W(s)`.
pub fn component_group_orbits(
    d: &RootDatum,
    rep: &IsolatedRep,
    diagram: &[usize],
    q: QClass,
) -> Result<Vec<TwistedClassRep>> {
    let base = choose_coset_rep(d, rep, diagram, q)?;
    let a = component_group(d, &rep.param, &rep.centralizer_simples)?;
    let t = base.twisted.int_matrix().clone();
    let t_inv = base.twisted.inverse(d).int_matrix().clone();
    let mats: Vec<IntMat> = a.iter().map(|w| w.int_matrix().clone()).collect();
    let inv: Vec<IntMat> = a.iter().map(|w| w.inverse(d).int_matrix().clone()).collect();
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for i in 0..a.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = vec![i];
        seen[i] = true;
        let mut k = 0;
        while k < orbit.len() {
            let om = &mats[orbit[k]];
            for (y, yinv) in mats.iter().zip(&inv) {
                let img = y.mul(om).mul(&t).mul(yinv).mul(&t_inv);
                let j = mats
                    .iter()
                    .position(|m| *m == img)
                    .ok_or_else(|| Error::Internal("component group is not closed under twisted conjugation".into()))?;
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        let w = a[i].compose(d, &base.w);
        let twisted = TwistedElement::new(d, w.clone(), diagram.to_vec())?;
        let r = TwistedClassRep { param: rep.param.clone(), w, twisted, delta: rep.centralizer_simples.clone() };
        r.verify(d, q)?;
        out.push(r);
    }
    Ok(out)
}
