//! The orthonormal basis `e_i` of the classical types and Weyl elements
//! written as signed permutations.

use super::cartan::Series;
use super::datum::RootDatum;
use super::weyl::WeylElement;
use crate::error::{Error, Result};
use crate::exactlin::{frac, rat, Rational};
use num_traits::Zero;

/// `e_i` (0-based) in simple-root coordinates for types B, C and D.
pub fn e_basis(d: &RootDatum, i: usize) -> Result<Vec<Rational>> {
    let n = d.rank();
    if i >= n {
        return Err(Error::invalid(format!("e{} out of range for rank {n}", i + 1)));
    }
    let mut v = vec![Rational::zero(); n];
    match d.series() {
        Series::B => v[i..].iter_mut().for_each(|x| *x = rat(1)),
        Series::C => {
            v[i..n - 1].iter_mut().for_each(|x| *x = rat(1));
            v[n - 1] = frac(1, 2);
        }
        Series::D if i == n - 1 => {
            v[n - 2] = frac(-1, 2);
            v[n - 1] = frac(1, 2);
        }
        Series::D => {
            v[i..n - 2].iter_mut().for_each(|x| *x = rat(1));
            v[n - 2] = frac(1, 2);
            v[n - 1] = frac(1, 2);
        }
        s => return Err(Error::invalid(format!("type {} has no signed-permutation model", s.letter()))),
    }
    Ok(v)
}

/// Index of the root proportional to `Σ c_i e_i`.
fn root_along(d: &RootDatum, coeffs: &[(usize, i64)]) -> Result<usize> {
    let mut v = vec![Rational::zero(); d.rank()];
    for &(i, c) in coeffs {
        for (x, y) in v.iter_mut().zip(e_basis(d, i)?) {
            *x += y * rat(c);
        }
    }
    (0..d.num_roots())
        .find(|&r| {
            let root = d.root(r);
            let k = root.iter().zip(&v).find(|(_, x)| !x.is_zero()).map(|(&a, x)| rat(a) / x);
            k.is_some_and(|k| k > rat(0) && root.iter().zip(&v).all(|(&a, x)| rat(a) == &k * x))
        })
        .ok_or_else(|| Error::invalid("signed permutation is not in the Weyl group of this type"))
}

fn parse_pair(s: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::invalid(format!("cannot read an index pair from {s:?}"));
    let s = s.trim_start_matches('_').trim_start_matches('{').trim_end_matches('}');
    let (a, b) = match s.split_once(',') {
        Some(p) => p,
        None if s.len() == 2 => s.split_at(1),
        None => return Err(bad()),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || b == 0 || a > n || b > n || a == b {
        return Err(bad());
    }
    Ok((a - 1, b - 1))
}

/// Product of tokens `u<i><j>` (`e_i ↔ -e_j`), `p<i><j>` (`e_i ↔ e_j`) and
/// `c<i>` (`e_i ↦ -e_i`), left to right; `u1,4` and `u_{1,4}` are accepted.
pub fn parse_signed_word(d: &RootDatum, s: &str) -> Result<WeylElement> {
    let n = d.rank();
    let mut w = WeylElement::identity(d);
    for tok in s.split_whitespace() {
        let mut chars = tok.chars();
        let kind = chars.next();
        let rest = chars.as_str();
        let r = match kind {
            Some('u') => {
                let (i, j) = parse_pair(rest, n)?;
                root_along(d, &[(i, 1), (j, 1)])?
            }
            Some('p') => {
                let (i, j) = parse_pair(rest, n)?;
                root_along(d, &[(i, 1), (j, -1)])?
            }
            Some('c') => {
                let i: usize = rest
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad token {tok:?}")))?;
                if i == 0 || i > n {
                    return Err(Error::invalid(format!("bad token {tok:?}")));
                }
                root_along(d, &[(i - 1, 1)])?
            }
            _ => return Err(Error::invalid(format!("unknown signed-permutation token {tok:?}"))),
        };
        w = w.compose(d, &WeylElement::reflection(d, r));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_basis_pairs_orthonormally() {
        for (s, n) in [(Series::B, 4), (Series::C, 4), (Series::D, 5)] {
            let d = RootDatum::build(s, n).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let a = e_basis(&d, i).unwrap();
                    let b = e_basis(&d, j).unwrap();
                    let g = d.gram_q();
                    let ip: Rational = (0..n)
                        .flat_map(|x| (0..n).map(move |y| (x, y)))
                        .map(|(x, y)| &a[x] * &g.row(x)[y] * &b[y])
                        .sum();
                    // Short roots have squared length 2, so |e_i|² is 2 in B and 1 otherwise.
                    let unit = if s == Series::B { rat(2) } else { rat(1) };
                    assert_eq!(ip, if i == j { unit } else { rat(0) }, "{s:?} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn tokens() {
        let d = RootDatum::build(Series::C, 4).unwrap();
        let w = parse_signed_word(&d, "u14 u2,3").unwrap();
        let e1 = e_basis(&d, 0).unwrap();
        let e4 = e_basis(&d, 3).unwrap();
        assert_eq!(w.apply(&e1), e4.iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(parse_signed_word(&d, "c1 c1").unwrap(), WeylElement::identity(&d));
        let dd = RootDatum::build(Series::D, 4).unwrap();
        assert!(parse_signed_word(&dd, "c1").is_err());
        assert!(parse_signed_word(&dd, "c1x").is_err());
    }
}
