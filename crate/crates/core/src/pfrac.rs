//! Partial fractions over the irreducible factors of the denominator.

use crate::error::Result;
use crate::factor::poly_factor_with;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;

/// `n / p^j` with `p` monic irreducible and `deg n < deg p`.
#[derive(Clone, PartialEq, Debug)]
pub struct PfTerm<K> {
    pub p: Poly<K>,
    pub j: usize,
    pub n: Poly<K>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct PartialFractions<K> {
    pub poly_part: Poly<K>,
    pub terms: Vec<PfTerm<K>>,
}

impl<K: Field> PartialFractions<K> {
    pub fn recombine(&self) -> RatFunc<K> {
        self.terms.iter().fold(RatFunc::from_poly(self.poly_part.clone()), |acc, t| {
            &acc + &RatFunc::new(t.n.clone(), t.p.pow(t.j as u32))
        })
    }
}

pub fn partial_fractions<K: Field>(f: &RatFunc<K>) -> Result<PartialFractions<K>> {
    partial_fractions_with(f, crate::factor::DEFAULT_MAX_DEGREE)
}

/// Terms are ordered by factor, then by decreasing multiplicity.
pub fn partial_fractions_with<K: Field>(
    f: &RatFunc<K>,
    max_degree: usize,
) -> Result<PartialFractions<K>> {
    let (poly_part, r) = f.num().div_rem(f.den());
    let mut terms = Vec::new();
    if r.is_zero() {
        return Ok(PartialFractions { poly_part, terms });
    }
    let den = f.den();
    for (p, e) in poly_factor_with(den, max_degree)?.factors {
        let pe = p.pow(e as u32);
        let cofactor = den.exact_div(&pe).unwrap();
        let inv = cofactor.inv_mod(&pe).expect("coprime factors");
        // a / p^e with deg a < e deg p, expanded p-adically.
        let mut a = (&r * &inv).rem(&pe);
        let mut local = Vec::new();
        for j in (1..=e).rev() {
            let (q, n) = a.div_rem(&p);
            if !n.is_zero() {
                local.push(PfTerm { p: p.clone(), j, n });
            }
            a = q;
        }
        local.sort_by(|x, y| y.j.cmp(&x.j));
        terms.extend(local);
    }
    Ok(PartialFractions { poly_part, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type Q = RatFunc<Rational>;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    #[test]
    fn examples() {
        let pf = partial_fractions(&Q::new(p(&[1]), p(&[0, 1, 1]))).unwrap();
        assert!(pf.poly_part.is_zero());
        assert_eq!(
            pf.terms,
            vec![
                PfTerm { p: p(&[0, 1]), j: 1, n: p(&[1]) },
                PfTerm { p: p(&[1, 1]), j: 1, n: p(&[-1]) },
            ]
        );

        let pf = partial_fractions(&Q::new(p(&[1, 1]), p(&[0, 2]))).unwrap();
        assert_eq!(pf.poly_part, Poly::constant(rat(1, 2)));
        assert_eq!(pf.terms, vec![PfTerm { p: p(&[0, 1]), j: 1, n: Poly::constant(rat(1, 2)) }]);

        let f = &Q::new(p(&[2]), p(&[0, 0, 1])) + &Q::new(p(&[3]), p(&[0, 1]));
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(
            pf.terms,
            vec![
                PfTerm { p: p(&[0, 1]), j: 2, n: p(&[2]) },
                PfTerm { p: p(&[0, 1]), j: 1, n: p(&[3]) },
            ]
        );
    }

    #[test]
    fn quadratic_factor_round_trip() {
        let f = Q::new(p(&[1, 2, 0, 5, 1, 1]), &p(&[1, 0, 1]).pow(2) * &p(&[-2, 1]));
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(pf.recombine(), f);
        assert!(pf.terms.iter().all(|t| t.n.deg() < t.p.deg()));
        assert_eq!(pf.poly_part, Poly::constant(int(1)));
    }
}
