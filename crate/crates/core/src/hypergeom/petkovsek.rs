use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factor::poly_factor_with;
use crate::numberfield::{roots_in_field, AlgNum, NumberField};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{Field, Rational};
use crate::summability::{polynomial_solutions, solve_multiplicative};
use crate::Settings;
use num_traits::One;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cardinality {
    Zero,
    One,
    Two,
    ThreeOrMore,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Completeness {
    Complete,
    PossiblyIncomplete,
}

/// Rational solutions of `u sigma^t(u) + a u + b = 0`.
#[derive(Clone, Debug)]
pub struct RiccatiSolutionSet {
    pub solutions: Vec<RatFunc<AlgNum>>,
    pub cardinality: Cardinality,
    pub completeness: Completeness,
    /// Number field holding the constants of the certificates, if any.
    pub field: Option<Arc<NumberField>>,
    /// Irreducible leading-coefficient equations whose roots were not in
    /// the constant field.
    pub discarded: Vec<Poly<Rational>>,
}

impl RiccatiSolutionSet {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Monic divisors of `p`, ordered by degree and then canonically.
fn monic_divisors(p: &Poly<Rational>, max_degree: usize) -> Result<Vec<Poly<Rational>>> {
    let mut out = vec![Poly::one()];
    if p.deg() > 0 {
        for (f, e) in poly_factor_with(p, max_degree)?.factors {
            let mut next = Vec::with_capacity(out.len() * (e + 1));
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..e {
                    acc = &acc * &f;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// Clears denominators of `y(x+2) + a y(x+1) + b y(x)` after `x -> t x`.
fn cleared(a: &RatFunc<Rational>, b: &RatFunc<Rational>, t: u32) -> [Poly<Rational>; 3] {
    let tq = Rational::from_int(t as i64);
    let (a, b) = (a.scale_x(&tq), b.scale_x(&tq));
    let l = a.den().lcm(b.den());
    let lr = RatFunc::from_poly(l.clone());
    [(&b * &lr).num().clone(), (&a * &lr).num().clone(), l]
}

pub fn petkovsek_riccati(
    a: &RatFunc<Rational>,
    b: &RatFunc<Rational>,
    t: u32,
) -> Result<RiccatiSolutionSet> {
    petkovsek_riccati_with(a, b, t, &Settings::default())
}

pub fn petkovsek_riccati_with(
    a: &RatFunc<Rational>,
    b: &RatFunc<Rational>,
    t: u32,
    settings: &Settings,
) -> Result<RiccatiSolutionSet> {
    if b.is_zero() {
        return Err(Error::Precondition("b must be nonzero".into()));
    }
    let max_deg = settings.limits.max_factor_degree;
    let [p0, p1, p2] = cleared(a, b, t);
    let mut field = settings.number_field.clone();
    let mut discarded: Vec<Poly<Rational>> = Vec::new();
    let mut solutions: Vec<RatFunc<AlgNum>> = Vec::new();

    let a_divs = monic_divisors(&p0, max_deg)?;
    let b_divs = monic_divisors(&p2.shift_int(-1), max_deg)?;
    for big_a in &a_divs {
        let p0r = p0.exact_div(big_a).unwrap();
        for big_b in &b_divs {
            let p2r = p2.exact_div(&big_b.shift_int(1)).unwrap();
            let q2 = &p2r * &big_a.shift_int(1);
            let q1 = p1.clone();
            let q0 = &p0r * big_b;
            let d = [&q2, &q1, &q0].iter().map(|q| q.deg()).max().unwrap();
            let lead = |q: &Poly<Rational>| if q.deg() == d { q.lc() } else { Rational::from_int(0) };
            // Z^2 lc(q2) + Z lc(q1) + lc(q0) = 0 with Z != 0.
            let mut zeq = Poly::new(vec![lead(&q0), lead(&q1), lead(&q2)]);
            while zeq.deg() > 0 && zeq.coeff(0) == Rational::from_int(0) {
                zeq = zeq.exact_div(&Poly::x()).unwrap();
            }
            if zeq.deg() <= 0 {
                continue;
            }
            let zs = z_roots(&zeq, &mut field, &mut discarded, max_deg)?;
            for z in zs {
                let coeffs: Vec<Poly<AlgNum>> = vec![
                    q0.embed(),
                    q1.embed::<AlgNum>().scale(&z),
                    q2.embed::<AlgNum>().scale(&(z.clone() * &z)),
                ];
                let Some((_, basis)) = polynomial_solutions(
                    &coeffs,
                    &Poly::zero(),
                    settings.limits.petkovsek_degree_cap,
                )?
                else {
                    continue;
                };
                for c in basis {
                    let c = RatFunc::from_poly(c);
                    let ratio = &(&c.shift(1) / &c) * &RatFunc::new(big_a.embed(), big_b.embed());
                    let u = ratio.scale(&z);
                    let u = if t == 1 { u } else { u.scale_x(&AlgNum::from_int(t as i64).inv()) };
                    if !solutions.contains(&u) {
                        solutions.push(u);
                    }
                }
            }
        }
    }

    let completeness = if discarded.is_empty() {
        Completeness::Complete
    } else {
        Completeness::PossiblyIncomplete
    };
    let cardinality = match solutions.len() {
        0 => Cardinality::Zero,
        1 => Cardinality::One,
        2 => {
            if infinitude_test_with(&solutions[0], &solutions[1], t, max_deg)? {
                Cardinality::ThreeOrMore
            } else {
                Cardinality::Two
            }
        }
        _ => Cardinality::ThreeOrMore,
    };
    Ok(RiccatiSolutionSet { solutions, cardinality, completeness, field, discarded })
}

/// Nonzero roots of the leading-coefficient equation in the constant field.
/// With no designated field, the first irreducible quadratic met defines one.
fn z_roots(
    zeq: &Poly<Rational>,
    field: &mut Option<Arc<NumberField>>,
    discarded: &mut Vec<Poly<Rational>>,
    max_degree: usize,
) -> Result<Vec<AlgNum>> {
    let fac = poly_factor_with(zeq, max_degree)?;
    let mut out = Vec::new();
    for (g, _) in fac.factors {
        if g.deg() == 1 {
            out.push(AlgNum::rational(-g.coeff(0)));
            continue;
        }
        if field.is_none() {
            *field = Some(NumberField::new(&g)?);
        }
        let roots = roots_in_field(&g, field.as_ref(), max_degree)?;
        if roots.is_empty() {
            if !discarded.contains(&g) {
                discarded.push(g);
            }
        } else {
            out.extend(roots);
        }
    }
    Ok(out)
}

/// True iff `v / u = sigma^t(f) / f` for a rational `f`, in which case the
/// Riccati equation has infinitely many rational solutions.
pub fn infinitude_test(u: &RatFunc<AlgNum>, v: &RatFunc<AlgNum>) -> Result<bool> {
    infinitude_test_with(u, v, 1, crate::factor::DEFAULT_MAX_DEGREE)
}

pub fn infinitude_test_with(
    u: &RatFunc<AlgNum>,
    v: &RatFunc<AlgNum>,
    t: u32,
    max_degree: usize,
) -> Result<bool> {
    if u == v {
        return Err(Error::Precondition("infinitude test needs distinct solutions".into()));
    }
    Ok(match solve_multiplicative(&(v / u), t, max_degree)? {
        Some((c, _)) => c.is_one(),
        None => false,
    })
}

/// `u sigma^t(u) + a u + b`, zero exactly for solutions.
pub fn riccati_residual<K: Field>(u: &RatFunc<K>, a: &RatFunc<K>, b: &RatFunc<K>, t: u32) -> RatFunc<K> {
    &(&(u * &u.shift(t as i64)) + &(a * u)) + b
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = RatFunc<Rational>;

    fn rf(n: &[i64], d: &[i64]) -> Q {
        Q::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    fn check(a: &Q, b: &Q, set: &RiccatiSolutionSet, t: u32) {
        for u in &set.solutions {
            assert!(riccati_residual(u, &a.embed(), &b.embed(), t).is_zero(), "{u}");
        }
    }

    #[test]
    fn gamma_example() {
        let a = rf(&[-1, -2], &[1]);
        let b = rf(&[0, 0, 1], &[1]);
        let s = petkovsek_riccati(&a, &b, 1).unwrap();
        check(&a, &b, &s, 1);
        assert_eq!(s.solutions, vec![RatFunc::x()]);
        assert_eq!(s.cardinality, Cardinality::One);
        assert_eq!(s.completeness, Completeness::Complete);
    }

    #[test]
    fn dihedral_example_has_none() {
        let s = petkovsek_riccati(&Q::zero(), &rf(&[1, 1], &[0, 2]), 1).unwrap();
        assert!(s.solutions.is_empty());
        assert_eq!(s.cardinality, Cardinality::Zero);
        assert_eq!(s.completeness, Completeness::Complete);
    }

    #[test]
    fn constant_examples() {
        let (a, b) = (Q::from_int(-5), Q::from_int(6));
        let s = petkovsek_riccati(&a, &b, 1).unwrap();
        check(&a, &b, &s, 1);
        let mut got: Vec<_> = s.solutions.iter().map(|u| u.as_constant().unwrap()).collect();
        got.sort_by_key(|c| c.to_string());
        assert_eq!(got, vec![AlgNum::from_int(2), AlgNum::from_int(3)]);
        assert_eq!(s.cardinality, Cardinality::Two);

        let (a, b) = (Q::from_int(-2), Q::one());
        let s = petkovsek_riccati(&a, &b, 1).unwrap();
        check(&a, &b, &s, 1);
        assert_eq!(s.cardinality, Cardinality::ThreeOrMore);
    }

    #[test]
    fn fibonacci_over_quadratic_field() {
        let (a, b) = (Q::from_int(-1), Q::from_int(-1));
        let s = petkovsek_riccati(&a, &b, 1).unwrap();
        check(&a, &b, &s, 1);
        assert_eq!(s.solutions.len(), 2);
        assert_eq!(s.cardinality, Cardinality::Two);
        assert_eq!(s.completeness, Completeness::Complete);
        assert!(s.solutions.iter().all(|u| u.as_constant().unwrap().as_rational().is_none()));
    }

    #[test]
    fn designated_field_without_roots_degrades() {
        let mut settings = Settings::default();
        settings.number_field = Some(NumberField::new(&Poly::from_ints(&[1, 0, 1])).unwrap());
        let s = petkovsek_riccati_with(&Q::from_int(-1), &Q::from_int(-1), 1, &settings).unwrap();
        assert!(s.solutions.is_empty());
        assert_eq!(s.completeness, Completeness::PossiblyIncomplete);
    }

    #[test]
    fn infinitude_examples() {
        let one = RatFunc::<AlgNum>::one();
        let v = rf(&[1, 1], &[0, 1]).embed();
        assert!(infinitude_test(&one, &v).unwrap());
        assert!(infinitude_test(&v, &one).unwrap());
        let (two, three) = (RatFunc::from_int(2), RatFunc::from_int(3));
        assert!(!infinitude_test(&two, &three).unwrap());
        assert!(infinitude_test(&two, &two).is_err());
    }

    #[test]
    fn no_solution_example() {
        let s = petkovsek_riccati(&Q::x(), &Q::one(), 1).unwrap();
        assert_eq!(s.cardinality, Cardinality::Zero);
        assert_eq!(s.completeness, Completeness::Complete);
    }
}
