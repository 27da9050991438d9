//! Factorization into monic irreducibles.

mod modp;
mod zassenhaus;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Rational};

pub const DEFAULT_MAX_DEGREE: usize = 30;

#[derive(Clone, PartialEq, Debug)]
pub struct FactoredPoly<K> {
    pub unit: K,
    /// Monic irreducible factors with multiplicities, pairwise coprime.
    pub factors: Vec<(Poly<K>, usize)>,
}

impl<K: Field> FactoredPoly<K> {
    pub fn expand(&self) -> Poly<K> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e as u32))
    }
}

/// Factors over the coefficient field with the default degree cap.
pub fn poly_factor<K: Field>(p: &Poly<K>) -> Result<FactoredPoly<K>> {
    poly_factor_with(p, DEFAULT_MAX_DEGREE)
}

pub fn poly_factor_with<K: Field>(p: &Poly<K>, max_degree: usize) -> Result<FactoredPoly<K>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    K::factor_poly(p, max_degree)
}

fn to_integer_poly(p: &Poly<Rational>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    zassenhaus::primitive(&ints)
}

fn to_monic_rational(p: &[BigInt]) -> Poly<Rational> {
    Poly::new(p.iter().map(|c| Rational::from_integer(c.clone())).collect()).monic()
}

/// Orders factors by degree, then coefficients.
pub(crate) fn poly_order(a: &Poly<Rational>, b: &Poly<Rational>) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

pub(crate) fn factor_rational(p: &Poly<Rational>, max_degree: usize) -> Result<FactoredPoly<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors = Vec::new();
    for (s, e) in p.squarefree_decomposition() {
        let mut s = s;
        // Strip a power of x cheaply before the modular machinery.
        if s.coeff(0).is_zero() {
            factors.push((Poly::x(), e));
            s = s.exact_div(&Poly::x()).unwrap();
        }
        if s.deg() <= 0 {
            continue;
        }
        if s.deg() == 1 {
            factors.push((s, e));
            continue;
        }
        let d = s.degree().unwrap();
        if d > max_degree {
            return Err(Error::DegreeCap { degree: d, cap: max_degree });
        }
        for g in zassenhaus::factor_squarefree(&to_integer_poly(&s)) {
            factors.push((to_monic_rational(&g), e));
        }
    }
    factors.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(FactoredPoly { unit: p.lc(), factors })
}

/// Integer roots of a nonzero polynomial over Q, ascending, each listed once.
pub fn integer_roots(p: &Poly<Rational>) -> Vec<BigInt> {
    let mut out = Vec::new();
    if p.deg() <= 0 {
        return out;
    }
    let sq = p.exact_div(&p.gcd(&p.derivative())).unwrap();
    let mut sq = sq;
    if sq.coeff(0).is_zero() {
        out.push(BigInt::zero());
        sq = sq.exact_div(&Poly::x()).unwrap();
    }
    if sq.deg() > 0 {
        out.extend(zassenhaus::integer_roots_squarefree(&to_integer_poly(&sq)));
    }
    out.sort();
    out
}

/// Monic irreducible factors, each listed once.
pub fn irreducible_factors<K: Field>(p: &Poly<K>, max_degree: usize) -> Result<Vec<Poly<K>>> {
    Ok(poly_factor_with(p, max_degree)?.factors.into_iter().map(|(f, _)| f).collect())
}

impl<K: Field> FactoredPoly<K> {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn qp(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    #[test]
    fn examples() {
        let f = poly_factor(&qp(&[0, 1, 1])).unwrap();
        assert_eq!(f.factors, vec![(qp(&[0, 1]), 1), (qp(&[1, 1]), 1)]);
        let f = poly_factor(&qp(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![(qp(&[-1, 1]), 1), (qp(&[1, 1]), 1), (qp(&[1, 0, 1]), 1)]
        );
        let f = poly_factor(&qp(&[1, 0, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn rational_coefficients_and_multiplicity() {
        // 3/2 (x - 1/3)^2 (x^2 - 2)
        let g = Poly::new(vec![rat(-1, 3), rat(1, 1)]);
        let p = (&g.pow(2) * &qp(&[-2, 0, 1])).scale(&rat(3, 2));
        let f = poly_factor(&p).unwrap();
        assert_eq!(f.unit, rat(3, 2));
        assert_eq!(f.factors, vec![(g, 2), (qp(&[-2, 0, 1]), 1)]);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn degree_cap_and_zero() {
        let p = &qp(&[1, 1, 1]) * &Poly::monomial(rat(1, 1), 40);
        let big = &p + &qp(&[3]);
        assert!(matches!(poly_factor_with(&big, 30), Err(Error::DegreeCap { .. })));
        assert_eq!(poly_factor(&Poly::<Rational>::zero()), Err(Error::ZeroInput));
    }
}
