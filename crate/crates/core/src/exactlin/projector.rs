use super::{rat, CycMatrix, CycloField, Cyclotomic, QMatrix, Scalar};
use crate::error::{Error, Result};
use num_traits::Zero;

/// Smallest `m ≥ 1` with `g^m = 1`, searching up to `limit`.
pub fn matrix_order(g: &QMatrix, limit: usize) -> Option<usize> {
    assert!(g.is_square());
    let mut acc = g.clone();
    for m in 1..=limit {
        if acc.is_identity() {
            return Some(m);
        }
        acc = acc.mul(g);
    }
    None
}

fn powers(g: &QMatrix, order: usize) -> Result<Vec<QMatrix>> {
    if order == 0 || !g.is_square() {
        return Err(Error::invalid("projector needs a square matrix and a positive order"));
    }
    let mut out = Vec::with_capacity(order);
    let mut acc = QMatrix::identity(g.rows());
    for _ in 0..order {
        out.push(acc.clone());
        acc = acc.mul(g);
    }
    if !acc.is_identity() {
        return Err(Error::OrderMismatch { order });
    }
    Ok(out)
}

/// Averaging projector onto the fixed space of `g`.
pub fn fixed_projector(g: &QMatrix, order: usize) -> Result<QMatrix> {
    let pows = powers(g, order)?;
    let n = g.rows();
    let sum = pows.iter().fold(QMatrix::zero(n, n), |a, p| a.add(p));
    Ok(sum.scale(&(rat(1) / rat(order as i64))))
}

/// Projector onto the ζ_n^k-eigenspace of `g`, with entries in ℚ(ζ_n).
pub fn eigen_projector(g: &QMatrix, order: usize, zeta_exponent: i64) -> Result<CycMatrix> {
    let pows = powers(g, order)?;
    let field = CycloField::new(order);
    let zero = Cyclotomic::zero_in(&field);
    let n = g.rows();
    let mut sum = CycMatrix::zeros_like(n, n, &zero);
    for (j, p) in pows.iter().enumerate() {
        let c = Cyclotomic::zeta_pow(&field, -(j as i64) * zeta_exponent);
        for r in 0..n {
            for s in 0..n {
                let x = &p[(r, s)];
                if Zero::is_zero(x) {
                    continue;
                }
                let v = sum[(r, s)].plus(&c.times(&c.from_rational(x)));
                sum[(r, s)] = v;
            }
        }
    }
    let inv = zero.from_rational(&(rat(1) / rat(order as i64)));
    Ok(sum.scale(&inv))
}

/// Embeds a rational matrix into a cyclotomic field.
pub fn embed(m: &QMatrix, field: &std::sync::Arc<CycloField>) -> CycMatrix {
    let zero = Cyclotomic::zero_in(field);
    m.map(&zero, |x| zero.from_rational(x))
}
