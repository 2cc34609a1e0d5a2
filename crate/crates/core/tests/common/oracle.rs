//! Brute-force reference implementations used to check the library.

use cusplevi::exactlin::{rat, QMatrix, Rational};
use cusplevi::rootsys::{diagram_twist, longest_element, RootDatum, Series, TwistedElement, WeylElement};
use num_traits::Zero;
use std::collections::BTreeSet;

fn add(d: &RootDatum, a: usize, b: usize) -> Option<usize> {
    let v: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
    d.index_of(&v)
}

pub fn is_closed(d: &RootDatum, set: &BTreeSet<usize>) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| add(d, a, b).is_none_or(|c| set.contains(&c))))
}

/// Every `Σ = S ∪ -S` with `S ⊆ Φ⁺` that is closed under root addition.
pub fn symmetric_closed_subsets(d: &RootDatum) -> Vec<BTreeSet<usize>> {
    let pos: Vec<usize> = (0..d.num_roots()).filter(|&r| d.is_positive(r)).collect();
    assert!(pos.len() <= 16, "too many positive roots for brute force");
    (0u32..(1 << pos.len()))
        .map(|mask| {
            pos.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .flat_map(|(_, &r)| [r, d.neg(r)])
                .collect::<BTreeSet<usize>>()
        })
        .filter(|s| is_closed(d, s))
        .collect()
}

fn root_q(d: &RootDatum, r: usize) -> Vec<Rational> {
    d.root(r).iter().map(|&x| rat(x)).collect()
}

/// `Σ` is `t`-split exactly when `Φ ∩ E^⊥ = Σ` for `E = (span Σ)^⊥ ∩ V^t`.
pub fn is_split(d: &RootDatum, set: &BTreeSet<usize>, t: &TwistedElement) -> bool {
    let n = d.rank();
    let g = d.gram_q();
    let tm = t.matrix().sub(&QMatrix::identity(n));
    let mut rows: Vec<Vec<Rational>> = (0..n).map(|i| tm.row(i).to_vec()).collect();
    for &a in set {
        let v = root_q(d, a);
        rows.push((0..n).map(|j| (0..n).map(|i| &v[i] * &g.row(i)[j]).sum()).collect());
    }
    let e = QMatrix::from_rows(rows).kernel();
    let perp: BTreeSet<usize> = (0..d.num_roots())
        .filter(|&r| e.iter().all(|x| d.form(&root_q(d, r), x).is_zero()))
        .collect();
    perp == *set
}

/// The unique smallest split subset containing `sigma` among `candidates`.
pub fn minimum_split_cover(
    sigma: &BTreeSet<usize>,
    split_sets: &[BTreeSet<usize>],
) -> Option<BTreeSet<usize>> {
    let over: Vec<&BTreeSet<usize>> = split_sets.iter().filter(|s| s.is_superset(sigma)).collect();
    let min = over.iter().min_by_key(|s| s.len())?;
    over.iter().all(|s| s.is_superset(min)).then(|| (*min).clone())
}

/// Identity, longest element, a sign change (types B and C) and a Coxeter
/// element, each with and without the diagram twist when there is one.
pub fn catalogue(d: &RootDatum) -> Vec<(String, TwistedElement)> {
    let n = d.rank();
    let all: Vec<usize> = (0..n).collect();
    let mut ws = vec![
        ("1".to_string(), WeylElement::identity(d)),
        ("w0".to_string(), longest_element(d, &all)),
        ("cox".to_string(), WeylElement::from_word(d, &all).unwrap()),
    ];
    if matches!(d.series(), Series::B | Series::C) {
        // The reflection in e1 (or 2e1): the root with coordinates (1,..,1) or (2,..,2,1).
        let v: Vec<i64> = match d.series() {
            Series::B => vec![1; n],
            _ => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
        };
        let r = d.index_of(&v).expect("e1 direction is a root");
        ws.push(("c1".to_string(), WeylElement::reflection(d, r)));
    }
    let mut twists = vec![(String::new(), (0..n).collect::<Vec<_>>())];
    if let Ok(pi) = diagram_twist(d.series(), n, 2) {
        if pi.iter().enumerate().any(|(i, &j)| i != j) {
            twists.push(("phi".to_string(), pi));
        }
    }
    let mut out = Vec::new();
    for (pname, pi) in &twists {
        for (wname, w) in &ws {
            let t = TwistedElement::new(d, w.clone(), pi.clone()).unwrap();
            out.push((format!("{wname}{pname}"), t));
        }
    }
    out
}
