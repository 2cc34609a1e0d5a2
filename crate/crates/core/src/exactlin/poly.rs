use super::{rat, QMatrix, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Dense univariate polynomial over ℚ, coefficients stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); self.coeffs.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, x) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * x;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Formats with the given variable name, highest degree first.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                s.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => {
                    if show_coeff {
                        s.push('*');
                    }
                    s.push_str(var);
                }
                _ => {
                    if show_coeff {
                        s.push('*');
                    }
                    s.push_str(&format!("{var}^{k}"));
                }
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("q"))
    }
}

/// The `d`-th cyclotomic polynomial Φ_d. Panics for `d = 0`.
pub fn cyclotomic_polynomial(d: usize) -> Poly {
    assert!(d > 0, "cyclotomic index must be positive");
    // q^d - 1 divided by Φ_e for every proper divisor e.
    let mut p = Poly::monomial(d).sub(&Poly::one());
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (q, r) = p.div_rem(&cyclotomic_polynomial(e));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Characteristic polynomial `det(q·I − M)` by Faddeev–LeVerrier.
pub fn char_poly(m: &QMatrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let id = QMatrix::identity(n);
    let mut mk = QMatrix::zero(n, n);
    for k in 1..=n {
        // M_k = M·M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(M·M_k)/k
        mk = m.mul(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let c = -(m.mul(&mk).trace()) / rat(k as i64);
        coeffs[n - k] = c;
    }
    Poly::new(coeffs)
}

/// A polynomial written as `scalar · Π Φ_d^{a_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloFactorization {
    pub factors: BTreeMap<usize, usize>,
    pub scalar: Rational,
}

impl CycloFactorization {
    pub fn trivial() -> Self {
        CycloFactorization { factors: BTreeMap::new(), scalar: Rational::one() }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let factors = pairs.iter().copied().filter(|&(_, m)| m > 0).collect();
        CycloFactorization { factors, scalar: Rational::one() }
    }

    pub fn multiplicity(&self, d: usize) -> usize {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(&d, &m)| euler_phi(d) * m).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&d, &m) in &rhs.factors {
            *factors.entry(d).or_insert(0) += m;
        }
        CycloFactorization { factors, scalar: &self.scalar * &rhs.scalar }
    }

    pub fn reconstruct(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.scalar.clone()), |acc, (&d, &m)| {
                acc.mul(&cyclotomic_polynomial(d).pow(m))
            })
    }

    /// Compact ASCII form such as `Phi1^5.Phi2^3`; the empty product prints as `1`.
    pub fn compact(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(&d, &m)| if m == 1 { format!("Phi{d}") } else { format!("Phi{d}^{m}") })
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

pub(crate) fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// Factors `p` into cyclotomic polynomials times a rational scalar.
pub fn cyclotomic_factor(p: &Poly) -> Result<CycloFactorization> {
    if p.is_zero() {
        return Err(Error::NonCyclotomic { residual: "0".into() });
    }
    let mut rest = p.clone();
    let mut factors = BTreeMap::new();
    // φ(d) ≤ deg forces d ≤ 2·deg² for every d that can occur.
    let bound = 2 * p.degree() * p.degree() + 2;
    for d in 1..=bound {
        if rest.is_constant() {
            break;
        }
        if euler_phi(d) > rest.degree() {
            continue;
        }
        let phi = cyclotomic_polynomial(d);
        loop {
            let (q, r) = rest.div_rem(&phi);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *factors.entry(d).or_insert(0) += 1;
        }
    }
    if !rest.is_constant() {
        return Err(Error::NonCyclotomic { residual: rest.to_string() });
    }
    Ok(CycloFactorization { factors, scalar: rest.leading() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), Poly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn char_poly_examples() {
        let phi1 = cyclotomic_polynomial(1);
        assert_eq!(char_poly(&QMatrix::identity(2)), phi1.pow(2));
        let swap = QMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(char_poly(&swap), phi1.mul(&cyclotomic_polynomial(2)));
        // s1 s2 on the root plane of A2 in the simple-root basis.
        let cox = QMatrix::from_int_rows(&[vec![-1, -1], vec![1, 0]]);
        assert_eq!(char_poly(&cox), Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn factor_examples() {
        let phi1 = cyclotomic_polynomial(1);
        let phi2 = cyclotomic_polynomial(2);
        let f = cyclotomic_factor(&phi1.pow(2)).unwrap();
        assert_eq!(f, CycloFactorization::from_pairs(&[(1, 2)]));
        let f = cyclotomic_factor(&Poly::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(f, CycloFactorization::from_pairs(&[(3, 1)]));
        let p = phi1.pow(5).mul(&phi2.pow(3));
        let f = cyclotomic_factor(&p).unwrap();
        assert_eq!(f, CycloFactorization::from_pairs(&[(1, 5), (2, 3)]));
        assert_eq!(f.compact(), "Phi1^5.Phi2^3");
        assert_eq!(f.reconstruct(), p);
    }

    #[test]
    fn non_cyclotomic_residual_is_reported() {
        let p = Poly::from_ints(&[-2, 0, 1]).mul(&cyclotomic_polynomial(1));
        match cyclotomic_factor(&p) {
            Err(Error::NonCyclotomic { residual }) => assert_eq!(residual, "q^2 - 2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scalar_is_kept() {
        let p = Poly::from_ints(&[-3, 3]);
        let f = cyclotomic_factor(&p).unwrap();
        assert_eq!(f.scalar, rat(3));
        assert_eq!(f.reconstruct(), p);
    }
}
