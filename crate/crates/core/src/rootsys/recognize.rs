use super::cartan::{CartanLabel, Series};
use super::datum::RootDatum;
use super::subsystem::SubsystemHandle;
use super::weyl::TwistedElement;
use crate::error::{Error, Result};
use crate::exactlin::{char_poly, cyclotomic_factor, rat, CycloFactorization, QMatrix, Rational, Subspace};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// Recognized type of a twisted subsystem: its component orbits and the
/// cyclotomic factorization of the torus part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviType {
    pub components: Vec<CartanLabel>,
    pub torus: CycloFactorization,
}

fn label_order(a: &CartanLabel, b: &CartanLabel) -> std::cmp::Ordering {
    (b.rank * b.field_power)
        .cmp(&(a.rank * a.field_power))
        .then(b.rank.cmp(&a.rank))
        .then(a.series.cmp(&b.series))
        .then(b.twist_order.cmp(&a.twist_order))
        .then(a.field_power.cmp(&b.field_power))
}

impl LeviType {
    pub fn new(components: Vec<CartanLabel>, torus: CycloFactorization) -> Self {
        let mut components: Vec<CartanLabel> = components.into_iter().flat_map(CartanLabel::normalized).collect();
        components.sort_by(label_order);
        LeviType { components, torus: CycloFactorization { scalar: Rational::one(), ..torus } }
    }

    /// Semisimple rank plus torus rank: the rank of the ambient lattice.
    pub fn total_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank * c.field_power).sum::<usize>() + self.torus.degree()
    }

    /// Components only, e.g. `2E6x2A2`; `1` when there are none.
    pub fn semisimple_part(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        self.components.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }
}

impl fmt::Display for LeviType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.components.is_empty(), self.torus.is_trivial()) {
            (true, _) => f.write_str(&self.torus.compact()),
            (false, true) => f.write_str(&self.semisimple_part()),
            (false, false) => write!(f, "{}.{}", self.semisimple_part(), self.torus.compact()),
        }
    }
}

impl Serialize for LeviType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Identifies the untwisted Cartan type of one irreducible component.
fn identify(d: &RootDatum, comp: &[usize], simple: &[usize]) -> Result<(Series, usize)> {
    let r = simple.len();
    let count = comp.len();
    let norms: Vec<i64> = simple.iter().map(|&s| d.norm(s)).collect();
    let short = *norms.iter().min().unwrap();
    let long = *norms.iter().max().unwrap();
    let bad = || Error::Internal(format!("unrecognized component of rank {r} with {count} roots"));
    if r == 1 {
        return Ok((Series::A, 1));
    }
    if short == long {
        return match (r, count) {
            (_, c) if c == r * (r + 1) => Ok((Series::A, r)),
            (6, 72) => Ok((Series::E, 6)),
            (7, 126) => Ok((Series::E, 7)),
            (8, 240) => Ok((Series::E, 8)),
            (_, c) if r >= 4 && c == 2 * r * (r - 1) => Ok((Series::D, r)),
            _ => Err(bad()),
        };
    }
    match long / short {
        3 if r == 2 => Ok((Series::G, 2)),
        2 if r == 2 => Ok((if d.series() == Series::C { Series::C } else { Series::B }, 2)),
        2 if r == 4 && count == 48 => Ok((Series::F, 4)),
        2 if count == 2 * r * r => {
            let nshort = norms.iter().filter(|&&x| x == short).count();
            if nshort == 1 {
                Ok((Series::B, r))
            } else if nshort == r - 1 {
                Ok((Series::C, r))
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

/// Order of the permutation of the component's simple roots induced by `g`
/// after correcting by an element of the component's Weyl group.
fn induced_twist(d: &RootDatum, simple: &[usize], g: &TwistedElement) -> Result<u8> {
    let k = simple.len();
    let gram = QMatrix::from_rows(
        simple
            .iter()
            .map(|&a| simple.iter().map(|&b| rat(d.form_int(d.root(a), d.root(b)))).collect())
            .collect(),
    );
    let ones = QMatrix::from_cols(&[vec![Rational::one(); k]], k);
    let coeffs = gram.solve(&ones).expect("simple roots are independent").col(0);
    let mut lambda = vec![Rational::zero(); d.rank()];
    for (c, &a) in coeffs.iter().zip(simple) {
        for (l, &x) in lambda.iter_mut().zip(d.root(a)) {
            *l += c * rat(x);
        }
    }
    let mut mu = g.apply(&lambda);
    let mut path = Vec::new();
    'outer: loop {
        for &b in simple {
            if d.form_with_root(&mu, b).is_negative() {
                mu = d.reflect(&mu, b);
                path.push(b);
                continue 'outer;
            }
        }
        break;
    }
    let sigma: Vec<usize> = simple
        .iter()
        .map(|&a| {
            let img = path.iter().fold(g.apply_root(a), |r, &b| d.reflect_root(r, b));
            simple.iter().position(|&s| s == img)
        })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("twisted image of a simple system is not a simple system".into()))?;
    let mut order = 1u8;
    let mut p = sigma.clone();
    while p.iter().enumerate().any(|(i, &j)| i != j) {
        p = p.iter().map(|&j| sigma[j]).collect();
        order += 1;
    }
    Ok(order)
}

/// Characteristic polynomial factorization of `t` on the orthogonal complement of `span`.
pub fn torus_factor(d: &RootDatum, span: &Subspace<Rational>, t: &TwistedElement) -> Result<CycloFactorization> {
    let perp = span.orthogonal_complement(&d.gram_q());
    let k = perp.dim();
    if k == 0 {
        return Ok(CycloFactorization::trivial());
    }
    let b = QMatrix::from_cols(perp.basis(), d.rank());
    let images: Vec<Vec<Rational>> = perp.basis().iter().map(|v| t.apply(v)).collect();
    let tb = QMatrix::from_cols(&images, d.rank());
    let x = b
        .solve(&tb)
        .ok_or_else(|| Error::Internal("orthogonal complement is not stable".into()))?;
    cyclotomic_factor(&char_poly(&x))
}

/// Recognizes the twisted type of a `t`-stable subsystem.
pub fn recognize_type(d: &RootDatum, h: &SubsystemHandle, t: &TwistedElement) -> Result<LeviType> {
    if h.roots().iter().any(|&r| !h.contains(t.apply_root(r))) {
        return Err(Error::NotStable);
    }
    let comps = h.components();
    let comp_simple = h.component_simple();
    let comp_of = |r: usize| comps.iter().position(|c| c.binary_search(&r).is_ok()).expect("root in a component");
    let image: Vec<usize> = comps.iter().map(|c| comp_of(t.apply_root(c[0]))).collect();

    let mut seen = vec![false; comps.len()];
    let mut labels = Vec::new();
    for c in 0..comps.len() {
        if seen[c] {
            continue;
        }
        let mut e = 0;
        let mut x = c;
        loop {
            seen[x] = true;
            e += 1;
            x = image[x];
            if x == c {
                break;
            }
        }
        let (series, rank) = identify(d, &comps[c], &comp_simple[c])?;
        let twist = induced_twist(d, &comp_simple[c], &t.pow(d, e))?;
        let label = CartanLabel::twisted(series, rank, twist).over(e);
        label
            .validate()
            .map_err(|_| Error::Internal(format!("impossible twisted label {label}")))?;
        labels.push(label);
    }
    let torus = torus_factor(d, &h.span(d), t)?;
    Ok(LeviType::new(labels, torus))
}
