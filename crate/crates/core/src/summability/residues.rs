use crate::error::Result;
use crate::factor::{poly_factor_with, DEFAULT_MAX_DEGREE};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;

use super::orbit::OrbitClass;

#[derive(Clone, PartialEq, Debug)]
pub struct ResidueEntry<K> {
    pub orbit: OrbitClass<K>,
    pub multiplicity: usize,
    /// Residue as a polynomial in a root of the representative, reduced
    /// modulo it. Never zero.
    pub residue: Poly<K>,
}

/// Discrete residues keyed by (orbit, multiplicity), sorted by orbit and
/// then by decreasing multiplicity.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ResidueTable<K> {
    entries: Vec<ResidueEntry<K>>,
}

impl<K: Field> ResidueTable<K> {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ResidueEntry<K>] {
        &self.entries
    }

    pub fn get(&self, orbit: &OrbitClass<K>, multiplicity: usize) -> Option<&Poly<K>> {
        self.entries
            .iter()
            .find(|e| e.multiplicity == multiplicity && &e.orbit == orbit)
            .map(|e| &e.residue)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).max().unwrap_or(0)
    }

    /// Distinct orbits, in table order.
    pub fn orbits(&self) -> Vec<OrbitClass<K>> {
        let mut out: Vec<OrbitClass<K>> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.orbit) {
                out.push(e.orbit.clone());
            }
        }
        out
    }

    fn insert_add(&mut self, orbit: &OrbitClass<K>, multiplicity: usize, residue: Poly<K>) {
        let rep = &orbit.representative;
        match self
            .entries
            .iter_mut()
            .find(|e| e.multiplicity == multiplicity && &e.orbit == orbit)
        {
            Some(e) => e.residue = (&e.residue + &residue).rem(rep),
            None => self.entries.push(ResidueEntry {
                orbit: orbit.clone(),
                multiplicity,
                residue: residue.rem(rep),
            }),
        }
    }

    fn finish(mut self) -> Self {
        self.entries.retain(|e| !e.residue.is_zero());
        self.entries
            .sort_by(|a, b| a.orbit.cmp(&b.orbit).then(b.multiplicity.cmp(&a.multiplicity)));
        self
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for e in &other.entries {
            out.insert_add(&e.orbit, e.multiplicity, e.residue.clone());
        }
        out.finish()
    }
}

/// Coefficients of `eps^0 .. eps^(n-1)` in `g(x + eps)`, reduced modulo `m`.
fn taylor<K: Field>(g: &Poly<K>, n: usize, m: &Poly<K>) -> Vec<Poly<K>> {
    let c = g.coeffs();
    (0..n)
        .map(|i| {
            let mut out = Vec::new();
            let mut binom = K::one();
            for k in i..c.len() {
                if k > i {
                    // binom(k, i) from binom(k - 1, i)
                    binom = binom * &K::from_int(k as i64) * &K::from_int((k - i) as i64).inv();
                }
                out.push(c[k].clone() * &binom);
            }
            Poly::new(out).rem(m)
        })
        .collect()
}

fn series_mul<K: Field>(a: &[Poly<K>], b: &[Poly<K>], n: usize, m: &Poly<K>) -> Vec<Poly<K>> {
    (0..n)
        .map(|k| {
            let mut acc = Poly::zero();
            for i in 0..=k {
                if let (Some(x), Some(y)) = (a.get(i), b.get(k - i)) {
                    acc = &acc + &(x * y);
                }
            }
            acc.rem(m)
        })
        .collect()
}

fn series_inv<K: Field>(a: &[Poly<K>], n: usize, m: &Poly<K>) -> Vec<Poly<K>> {
    let b0 = a[0].inv_mod(m).expect("unit constant term");
    let mut b = vec![b0.clone()];
    for k in 1..n {
        let mut acc = Poly::zero();
        for i in 1..=k {
            if let Some(x) = a.get(i) {
                acc = &acc + &(x * &b[k - i]);
            }
        }
        b.push((-&(&b0 * &acc)).rem(m));
    }
    b
}

/// Laurent coefficients of `num / (p^e q)` at a root of `p`, for
/// multiplicities `1..=e`, as polynomials in that root.
fn laurent<K: Field>(num: &Poly<K>, p: &Poly<K>, e: usize, q: &Poly<K>) -> Vec<(usize, Poly<K>)> {
    // p(b + eps) = eps S(eps), so f = eps^-e N / (S^e Q).
    let s: Vec<Poly<K>> = taylor(p, e + 1, p).into_iter().skip(1).collect();
    let mut se = vec![Poly::one()];
    for _ in 0..e {
        se = series_mul(&se, &s, e, p);
    }
    let den = series_mul(&se, &taylor(q, e, p), e, p);
    let h = series_mul(&taylor(num, e, p), &series_inv(&den, e, p), e, p);
    (1..=e).map(|j| (j, h[e - j].clone())).collect()
}

pub fn discrete_residues<K: Field>(f: &RatFunc<K>) -> Result<ResidueTable<K>> {
    discrete_residues_with(f, DEFAULT_MAX_DEGREE)
}

pub fn discrete_residues_with<K: Field>(f: &RatFunc<K>, max_degree: usize) -> Result<ResidueTable<K>> {
    let mut table = ResidueTable { entries: Vec::new() };
    if f.is_polynomial() {
        return Ok(table);
    }
    let den = f.den();
    for (p, e) in poly_factor_with(den, max_degree)?.factors {
        let q = den.exact_div(&p.pow(e as u32)).unwrap();
        let (orbit, k) = OrbitClass::of(&p);
        for (j, c) in laurent(f.num(), &p, e, &q) {
            // Roots of p = rep(x + k) are (roots of rep) - k.
            table.insert_add(&orbit, j, c.shift_int(-k));
        }
    }
    Ok(table.finish())
}

pub fn is_summable<K: Field>(f: &RatFunc<K>) -> Result<bool> {
    Ok(discrete_residues(f)?.is_empty())
}

pub fn is_summable_with<K: Field>(f: &RatFunc<K>, max_degree: usize) -> Result<bool> {
    Ok(discrete_residues_with(f, max_degree)?.is_empty())
}

/// Residues with respect to orbits under `x -> x + t`, computed on `f(t x)`.
pub fn discrete_residues_step<K: Field>(
    f: &RatFunc<K>,
    t: u32,
    max_degree: usize,
) -> Result<ResidueTable<K>> {
    discrete_residues_with(&f.scale_x(&K::from_int(t as i64)), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type Q = RatFunc<Rational>;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    fn rf(n: &[i64], d: &[i64]) -> Q {
        Q::new(p(n), p(d))
    }

    fn x_orbit() -> OrbitClass<Rational> {
        OrbitClass { representative: p(&[0, 1]) }
    }

    #[test]
    fn examples() {
        let t = discrete_residues(&rf(&[1], &[0, 1])).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(&x_orbit(), 1), Some(&p(&[1])));

        let f = &rf(&[1], &[1, 1]) - &rf(&[1], &[0, 1]);
        assert!(discrete_residues(&f).unwrap().is_empty());

        let f = &rf(&[1], &[0, 0, 1]) + &rf(&[3], &[0, 1]);
        let t = discrete_residues(&f).unwrap();
        assert_eq!(t.get(&x_orbit(), 2), Some(&p(&[1])));
        assert_eq!(t.get(&x_orbit(), 1), Some(&p(&[3])));
    }

    #[test]
    fn summability_examples() {
        assert!(!is_summable(&rf(&[1], &[0, 1])).unwrap());
        assert!(is_summable(&rf(&[1], &[0, 1, 1])).unwrap());
        assert!(is_summable(&rf(&[3, 0, 7], &[1])).unwrap());
    }

    #[test]
    fn log_derivative_residues_are_integers() {
        // (x^2 + 1)^2 / ((x^2 + 2x + 2) x^3)
        let r = rf(&[1, 0, 2, 0, 1], &[0, 0, 0, 2, 2, 1]);
        let t = discrete_residues(&r.log_derivative().unwrap()).unwrap();
        let i_orbit = OrbitClass { representative: p(&[1, 0, 1]) };
        assert_eq!(t.get(&i_orbit, 1), Some(&p(&[1])));
        assert_eq!(t.get(&x_orbit(), 1), Some(&Poly::constant(int(-3))));
        assert_eq!(t.max_multiplicity(), 1);
    }

    #[test]
    fn quadratic_orbit_residue_in_root() {
        // 1/(x^2+1): Laurent coefficient at a root b is 1/(2b) = -b/2.
        let t = discrete_residues(&rf(&[1], &[1, 0, 1])).unwrap();
        let orbit = OrbitClass { representative: p(&[1, 0, 1]) };
        assert_eq!(t.get(&orbit, 1), Some(&Poly::new(vec![int(0), Rational::new((-1).into(), 2.into())])));
    }
}
