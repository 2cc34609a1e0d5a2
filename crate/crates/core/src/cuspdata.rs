//! Existence and multiplicity of cuspidal unipotent characters, and the
//! twist-stable standard Levi subsystems of a centralizer that support one.

use crate::error::{Error, Result};
use crate::rootsys::{recognize_type, span_of, CartanLabel, LeviType, RootDatum, Series, SubsystemHandle, TwistedElement};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Arithmetic classes of non-negative integers used in rank conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegerClass {
    /// `□_m = {(2k+m)² : k ≥ 0} ∖ {1}`.
    Square(u64),
    /// `△ = {k(k+1)/2}`.
    Triangle,
    /// `c·X` for a class `X`.
    Scaled(u64, &'static IntegerClass),
}

impl IntegerClass {
    pub const SQUARE0: IntegerClass = IntegerClass::Square(0);
    pub const SQUARE1: IntegerClass = IntegerClass::Square(1);
    pub const SQUARE2: IntegerClass = IntegerClass::Square(2);
    pub const TWICE_TRIANGLE: IntegerClass = IntegerClass::Scaled(2, &IntegerClass::Triangle);
    pub const FOUR_TRIANGLE: IntegerClass = IntegerClass::Scaled(4, &IntegerClass::Triangle);
    pub const TWICE_SQUARE0: IntegerClass = IntegerClass::Scaled(2, &IntegerClass::SQUARE0);
    pub const TWICE_SQUARE1: IntegerClass = IntegerClass::Scaled(2, &IntegerClass::SQUARE1);

    pub fn contains(&self, n: u64) -> bool {
        match *self {
            IntegerClass::Square(m) => {
                n != 1 && (0..).map(|k| (2 * k + m).pow(2)).take_while(|&x| x <= n).any(|x| x == n)
            }
            IntegerClass::Triangle => (0..).map(|k: u64| k * (k + 1) / 2).take_while(|&x| x <= n).any(|x| x == n),
            IntegerClass::Scaled(c, inner) => n.is_multiple_of(c) && inner.contains(n / c),
        }
    }
}

fn exceptional_table() -> &'static BTreeMap<CartanLabel, usize> {
    static TABLE: OnceLock<BTreeMap<CartanLabel, usize>> = OnceLock::new();
    TABLE.get_or_init(|| {
        include_str!("../data/cuspidal_exceptional.txt")
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let (label, count) = l.split_once(char::is_whitespace).expect("label and count");
                let label: CartanLabel = label.parse().expect("valid label in data file");
                (label, count.trim().parse().expect("integer count"))
            })
            .collect()
    })
}

/// Number of cuspidal unipotent characters of the finite group with this
/// (possibly twisted, possibly over `q^e`) simple type.
pub fn has_cuspidal_unipotent(label: &CartanLabel) -> Result<usize> {
    label.validate()?;
    let m = label.rank as u64;
    let twisted = label.twist_order > 1;
    let yes = |b: bool| usize::from(b);
    Ok(match label.series {
        Series::A if twisted => yes(IntegerClass::Triangle.contains(m + 1)),
        Series::A => 0,
        Series::B | Series::C => yes(IntegerClass::TWICE_TRIANGLE.contains(m)),
        Series::D if label.twist_order == 3 => exceptional_count(label)?,
        Series::D if twisted => yes(IntegerClass::SQUARE1.contains(m)),
        Series::D => yes(IntegerClass::SQUARE0.contains(m)),
        Series::E | Series::F | Series::G => exceptional_count(label)?,
    })
}

fn exceptional_count(label: &CartanLabel) -> Result<usize> {
    let key = CartanLabel { field_power: 1, ..*label };
    exceptional_table()
        .get(&key)
        .copied()
        .ok_or_else(|| Error::Unsupported(format!("no cuspidal data for {key}")))
}

/// Number of cuspidal unipotent characters of a group of the given type:
/// the product over its components, tori contributing 1.
pub fn cuspidal_count(ty: &LeviType) -> Result<usize> {
    ty.components.iter().try_fold(1, |acc, c| Ok(acc * has_cuspidal_unipotent(c)?))
}

/// A twist-stable subset `J` of the simple system with a cuspidal
/// unipotent character on `M_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalSupport {
    /// Root indices of `J`, a subset of the given simple system.
    pub j: Vec<usize>,
    /// Root indices of `M_J = Σ ∩ span J`.
    pub m_j: Vec<usize>,
    pub ty: LeviType,
    pub count: usize,
}

/// All `t`-stable `J ⊆ Δ` whose `M_J` carries a cuspidal unipotent character,
/// where `delta` is a simple system of `sigma` (not necessarily positive).
pub fn cuspidal_standard_levis(
    d: &RootDatum,
    sigma: &SubsystemHandle,
    delta: &[usize],
    t: &TwistedElement,
) -> Result<Vec<CuspidalSupport>> {
    if delta.len() != sigma.semisimple_rank() || delta.iter().any(|&r| !sigma.contains(r)) {
        return Err(Error::invalid("simple system does not belong to the subsystem"));
    }
    if delta.iter().any(|&r| !sigma.contains(t.apply_root(r))) || delta.iter().any(|&r| !delta.contains(&t.apply_root(r))) {
        return Err(Error::NotStable);
    }
    let k = delta.len();
    if k > 20 {
        return Err(Error::Unsupported("simple system too large for subset enumeration".into()));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let j: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| delta[i]).collect();
        if j.iter().any(|&r| !j.contains(&t.apply_root(r))) {
            continue;
        }
        let span = span_of(d, &j);
        let m_j: Vec<usize> = sigma
            .roots()
            .iter()
            .copied()
            .filter(|&r| span.contains(&d.root(r).iter().map(|&x| crate::exactlin::rat(x)).collect::<Vec<_>>()))
            .collect();
        let handle = SubsystemHandle::new(d, m_j.clone())?;
        let ty = recognize_type(d, &handle, t)?;
        let count = cuspidal_count(&ty)?;
        if count > 0 {
            out.push(CuspidalSupport { j, m_j, ty, count });
        }
    }
    Ok(out)
}
