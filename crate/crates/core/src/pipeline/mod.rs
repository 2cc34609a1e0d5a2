//! Extraction of the Levi subsystems carrying cuspidal Jordan data, and the
//! classical tables built from them.

mod render;
mod table;

pub use render::{render_records_json, render_records_text, RecordJson};
pub use table::{classical_table, parse_table, render_table, TableBlock, TableRow};

use crate::cuspdata::cuspidal_standard_levis;
use crate::error::{Error, Result};
use crate::exactlin::rat;
use crate::rootsys::{recognize_type, span_of, LeviType, RootDatum, SubsystemHandle, TwistedElement};
use crate::semisimple::{centralizer_roots, TwistedClassRep};
use crate::splitlevi::{conjugate_to_standard, d_split_cover, is_split_levi, split_levi_cover, StandardForm};

/// One cuspidal support of the centralizer together with its split Levi cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalLeviRecord {
    /// Root indices of `J ⊆ Δ(s)`.
    pub j: Vec<usize>,
    /// Root indices of `M_J`.
    pub m_j: Vec<usize>,
    pub centralizer: LeviType,
    /// Root indices of `L`.
    pub levi_roots: Vec<usize>,
    pub levi: LeviType,
    pub cusp_count: usize,
    pub standard_form: Option<StandardForm>,
}

impl CuspidalLeviRecord {
    /// `J` as 1-based root numbers.
    pub fn j_nodes(&self) -> Vec<usize> {
        self.j.iter().map(|&r| r + 1).collect()
    }
}

fn sort_records(records: &mut [CuspidalLeviRecord]) {
    records.sort_by(|a, b| b.j.len().cmp(&a.j.len()).then_with(|| a.j.cmp(&b.j)));
}

fn check_invariant(d: &RootDatum, phi_s: &SubsystemHandle, m_j: &[usize], levi: &SubsystemHandle) -> Result<()> {
    let meet: Vec<usize> = levi.roots().iter().copied().filter(|&r| phi_s.contains(r)).collect();
    if meet != m_j {
        return Err(Error::Internal(format!(
            "L ∩ Φ(s) has {} roots but M_J has {} (rank {})",
            meet.len(),
            m_j.len(),
            d.rank()
        )));
    }
    Ok(())
}

/// Records for every `t`-stable `J ⊆ Δ(s)` supporting a cuspidal unipotent
/// character, with `L` the smallest split Levi subsystem containing `M_J`.
pub fn jordan_cuspidal_levis(d: &RootDatum, rep: &TwistedClassRep, standardize: bool) -> Result<Vec<CuspidalLeviRecord>> {
    let t = &rep.twisted;
    let phi_s = centralizer_roots(d, &rep.param);
    let mut out = Vec::new();
    for sup in cuspidal_standard_levis(d, &phi_s, &rep.delta, t)? {
        let levi = split_levi_cover(d, &sup.m_j, t)?;
        check_invariant(d, &phi_s, &sup.m_j, &levi)?;
        if !is_split_levi(d, &levi, t)? {
            return Err(Error::Internal("split cover is not a fixed point of the cover operation".into()));
        }
        let levi_ty = recognize_type(d, &levi, t)?;
        let standard_form = if standardize { Some(conjugate_to_standard(d, &levi, t)?) } else { None };
        out.push(CuspidalLeviRecord {
            j: sup.j,
            m_j: sup.m_j,
            centralizer: sup.ty,
            levi_roots: levi.roots().to_vec(),
            levi: levi_ty,
            cusp_count: sup.count,
            standard_form,
        });
    }
    sort_records(&mut out);
    Ok(out)
}

/// As [`jordan_cuspidal_levis`] with `d`-split covers. For `d > 1` the
/// supports `(J, count)` must be supplied, since only the `d = 1` data is
/// stored.
pub fn d_jordan_cuspidal_levis(
    d: &RootDatum,
    rep: &TwistedClassRep,
    dd: usize,
    supports: Option<&[(Vec<usize>, usize)]>,
) -> Result<Vec<CuspidalLeviRecord>> {
    let t = &rep.twisted;
    let phi_s = centralizer_roots(d, &rep.param);
    let supports: Vec<(Vec<usize>, usize)> = match supports {
        Some(s) => s.to_vec(),
        None if dd == 1 => cuspidal_standard_levis(d, &phi_s, &rep.delta, t)?
            .into_iter()
            .map(|s| (s.j, s.count))
            .collect(),
        None => {
            return Err(Error::Unsupported(format!("no stored {dd}-cuspidal data; supply the supports explicitly")))
        }
    };
    let phi = TwistedElement::diagram(d, t.diagram_perm().to_vec())?;
    let mut out = Vec::new();
    for (mut j, count) in supports {
        j.sort_unstable();
        j.dedup();
        if j.iter().any(|r| !rep.delta.contains(r)) {
            return Err(Error::invalid("support is not a subset of Δ(s)"));
        }
        if j.iter().any(|&r| !j.contains(&t.apply_root(r))) {
            return Err(Error::NotStable);
        }
        let span = span_of(d, &j);
        let m_j: Vec<usize> = phi_s
            .roots()
            .iter()
            .copied()
            .filter(|&r| span.contains(&d.root(r).iter().map(|&x| rat(x)).collect::<Vec<_>>()))
            .collect();
        let m_handle = SubsystemHandle::new(d, m_j.clone())?;
        let centralizer = recognize_type(d, &m_handle, t)?;
        let levi = d_split_cover(d, &m_j, &phi, t.weyl(), dd)?;
        check_invariant(d, &phi_s, &m_j, &levi)?;
        if d_split_cover(d, levi.roots(), &phi, t.weyl(), dd)?.roots() != levi.roots() {
            return Err(Error::Internal("d-split cover is not a fixed point of the cover operation".into()));
        }
        let levi_ty = recognize_type(d, &levi, t)?;
        out.push(CuspidalLeviRecord {
            j,
            m_j,
            centralizer,
            levi_roots: levi.roots().to_vec(),
            levi: levi_ty,
            cusp_count: count,
            standard_form: None,
        });
    }
    sort_records(&mut out);
    Ok(out)
}
