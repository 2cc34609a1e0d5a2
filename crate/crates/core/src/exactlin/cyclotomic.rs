use super::poly::{cyclotomic_polynomial, Poly};
use super::{Rational, Scalar};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// The field ℚ(ζ_n) presented as ℚ[x]/Φ_n.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    conductor: usize,
    modulus: Poly,
}

impl CycloField {
    pub fn new(conductor: usize) -> Arc<Self> {
        assert!(conductor > 0, "conductor must be positive");
        Arc::new(CycloField { conductor, modulus: cyclotomic_polynomial(conductor) })
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    fn reduce(&self, p: &Poly) -> Vec<Rational> {
        let (_, r) = p.div_rem(&self.modulus);
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), Rational::zero());
        c
    }
}

/// An element of ℚ(ζ_n) in the power basis.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational_in(field: &Arc<CycloField>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = r;
        Cyclotomic { field: field.clone(), coeffs }
    }

    pub fn zero_in(field: &Arc<CycloField>) -> Self {
        Self::from_rational_in(field, Rational::zero())
    }

    pub fn one_in(field: &Arc<CycloField>) -> Self {
        Self::from_rational_in(field, Rational::one())
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let coeffs = field.reduce(&Poly::monomial(e));
        Cyclotomic { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn as_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    fn check_field(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field,
            "cyclotomic arithmetic across different conductors"
        );
    }

    fn with(&self, coeffs: Vec<Rational>) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.field.conductor);
        f.write_str(&self.as_poly().format_with(&var))
    }
}

impl Scalar for Cyclotomic {
    fn zero_of(&self) -> Self {
        Self::zero_in(&self.field)
    }
    fn one_of(&self) -> Self {
        Self::one_in(&self.field)
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        self.with(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        self.with(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        self.with(self.field.reduce(&self.as_poly().mul(&rhs.as_poly())))
    }
    fn negated(&self) -> Self {
        self.with(self.coeffs.iter().map(|a| -a).collect())
    }
    fn recip(&self) -> Self {
        assert!(!self.vanishes(), "division by zero");
        // Extended Euclid: find s with s·a ≡ 1 mod Φ_n.
        let (mut r0, mut r1) = (self.field.modulus.clone(), self.as_poly());
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because Φ_n is irreducible.
        debug_assert!(r0.is_constant());
        let inv = s0.scale(&(Rational::one() / r0.leading()));
        self.with(self.field.reduce(&inv))
    }
    fn from_rational(&self, r: &Rational) -> Self {
        Self::from_rational_in(&self.field, r.clone())
    }
}
