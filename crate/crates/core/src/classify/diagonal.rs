use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numberfield::AlgNum;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;
use crate::summability::{
    discrete_residues_step, integer_residue_relation, IntRelation, OrbitClass,
    ResidueTable,
};

use super::descriptor::{Constraint, GroupDescriptor, Shape};

type K = AlgNum;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootOfUnity {
    Order(u32),
    NotRootOfUnity,
}

/// Exact: every root of unity in a field of degree at most 4 has an order
/// with `phi(m) <= 4`, and all of those are tried.
pub fn is_root_of_unity(z: &AlgNum) -> RootOfUnity {
    match z.root_of_unity_order() {
        Some(m) => RootOfUnity::Order(m),
        None => RootOfUnity::NotRootOfUnity,
    }
}

/// Result of the diagonal analysis of `sigma^t(Y) = diag(u, v) Y`.
#[derive(Clone, Debug)]
pub struct DiagonalAnalysis {
    /// Algebraic constraints (shared by both groups).
    pub algebraic: Vec<Constraint>,
    /// Additional delta-constraints of the differential group.
    pub differential: Vec<Constraint>,
    pub components: u32,
    pub cases: Vec<&'static str>,
    /// Primitive integer relation among the log-derivative residues.
    pub residue_relation: IntRelation,
}

impl DiagonalAnalysis {
    pub fn g_descriptor(&self, shape: Shape) -> GroupDescriptor {
        let mut cs = self.algebraic.clone();
        cs.extend(self.differential.iter().cloned());
        GroupDescriptor { cases: self.cases.clone(), ..GroupDescriptor::new(shape, cs, Some(self.components)) }
    }

    pub fn h_descriptor(&self, shape: Shape) -> GroupDescriptor {
        GroupDescriptor::new(shape, self.algebraic.clone(), Some(self.components))
    }
}

/// Integer value of a residue known to be a rational integer.
pub(crate) fn integer_residue(p: &Poly<K>) -> Result<i64> {
    let bad = || Error::InternalInconsistency(format!("log-derivative residue {p} is not an integer"));
    if !p.is_constant() {
        return Err(bad());
    }
    let q = p.coeff(0).as_rational().ok_or_else(bad)?;
    if !q.is_integer() {
        return Err(bad());
    }
    q.to_integer().to_i64().ok_or_else(bad)
}

/// Multiplicity-one residues of `delta(u)/u` under step `t`, scaled so that
/// they are the integer pole/zero counts per orbit.
pub(crate) fn log_residues(u: &RatFunc<K>, t: u32, max_degree: usize) -> Result<ResidueTable<K>> {
    let dl = u.log_derivative()?.scale(&K::from_int(t as i64));
    discrete_residues_step(&dl, t, max_degree)
}

fn residue_rows(ru: &ResidueTable<K>, rv: &ResidueTable<K>) -> Result<Vec<(i64, i64)>> {
    let mut orbits: Vec<OrbitClass<K>> = ru.orbits();
    for o in rv.orbits() {
        if !orbits.contains(&o) {
            orbits.push(o);
        }
    }
    orbits
        .iter()
        .map(|o| {
            let a = ru.get(o, 1).map(integer_residue).transpose()?.unwrap_or(0);
            let b = rv.get(o, 1).map(integer_residue).transpose()?.unwrap_or(0);
            Ok((a, b))
        })
        .collect()
}

/// Value at infinity of `u^m v^n`, assuming the degrees balance.
fn leading_value(u: &RatFunc<K>, v: &RatFunc<K>, m: i64, n: i64) -> K {
    u.num().lc().powi(m) * &v.num().lc().powi(n)
}

/// Pairwise coprime integers > 1 whose products give every input.
fn coprime_base(xs: &[BigInt]) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = xs.iter().filter(|x| **x > BigInt::one()).cloned().collect();
    'outer: loop {
        for i in 0..base.len() {
            for j in (i + 1)..base.len() {
                let g = base[i].gcd(&base[j]);
                if g > BigInt::one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.remove(j);
                    base.remove(i);
                    base.extend([g, a, b].into_iter().filter(|x| *x > BigInt::one()));
                    continue 'outer;
                }
            }
        }
        break;
    }
    base.sort();
    base.dedup();
    base
}

fn valuation(mut n: BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

const UNIT_SEARCH_BOUND: i64 = 48;

/// Primitive-up-to-torsion generator `(m, n)` of `{(m, n) : alpha^m beta^n = 1}`,
/// assuming that lattice has rank at most one.
pub(crate) fn constant_relation(alpha: &K, beta: &K) -> Result<Option<(i64, i64)>> {
    let (na, nb) = (alpha.norm(), beta.norm());
    let parts = [na.numer().abs(), na.denom().clone(), nb.numer().abs(), nb.denom().clone()];
    let base = coprime_base(&parts);
    let rows: Vec<(i64, i64)> = base
        .iter()
        .map(|p| {
            let va = valuation(parts[0].clone(), p) - valuation(parts[1].clone(), p);
            let vb = valuation(parts[2].clone(), p) - valuation(parts[3].clone(), p);
            (va, vb)
        })
        .collect();
    let one = K::one();
    match integer_residue_relation(&rows) {
        IntRelation::NoRelation => Ok(None),
        IntRelation::Generator(m, n) => {
            let gamma = alpha.powi(m) * &beta.powi(n);
            Ok(gamma.root_of_unity_order().map(|k| (k as i64 * m, k as i64 * n)))
        }
        IntRelation::AllRelations => {
            // Both norms are units: search a box by increasing size.
            for s in 1..=UNIT_SEARCH_BOUND {
                for m in 0..=s {
                    for n in -s..=s {
                        if m.max(n.abs()) != s || (m == 0 && n <= 0) {
                            continue;
                        }
                        if alpha.powi(m) * &beta.powi(n) == one {
                            return Ok(Some((m, n)));
                        }
                    }
                }
            }
            Err(Error::Inconclusive(format!(
                "no multiplicative relation between units {alpha} and {beta} up to exponent {UNIT_SEARCH_BOUND}"
            )))
        }
    }
}

fn monomial_components(m: i64, n: i64) -> u32 {
    let g = m.gcd(&n).unsigned_abs();
    if m != 0 && n != 0 {
        g as u32
    } else {
        (m.abs() + n.abs()) as u32
    }
}

/// Constraints of the differential Galois group of `sigma^t(Y) = diag(u, v) Y`,
/// tested in order: both torsion, monomial torsion, delta-constant entries,
/// delta-constant monomial, full torus.
pub fn analyze_diagonal(
    u: &RatFunc<K>,
    v: &RatFunc<K>,
    t: u32,
    max_degree: usize,
) -> Result<DiagonalAnalysis> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::Precondition("diagonal entries must be nonzero".into()));
    }
    let ru = log_residues(u, t, max_degree)?;
    let rv = log_residues(v, t, max_degree)?;
    let rows = residue_rows(&ru, &rv)?;
    let relation = integer_residue_relation(&rows);
    let mut algebraic = Vec::new();
    let mut differential = Vec::new();
    let mut cases = Vec::new();
    let mut components = 1;

    let mut both_torsion = false;
    let mut monomial: Option<(i64, i64)> = None;
    if relation == IntRelation::AllRelations {
        let (alpha, beta) = (u.num().lc(), v.num().lc());
        if let (Some(m), Some(n)) = (alpha.root_of_unity_order(), beta.root_of_unity_order()) {
            let d = m.gcd(&n);
            let (g_m, g_n) = (m / d, n / d);
            let l = m.lcm(&n);
            let one = K::one();
            let e = (1..=l)
                .find(|&e| e.gcd(&d) == 1 && alpha.pow((e * g_m) as u64) * &beta.pow(g_n as u64) == one)
                .ok_or_else(|| Error::InternalInconsistency("no torsion link exponent".into()))?;
            algebraic.push(Constraint::TorsionAlpha(m));
            algebraic.push(Constraint::TorsionLambda(n));
            algebraic.push(Constraint::TorsionLink { e, g_m, g_n });
            components = l;
            both_torsion = true;
            cases.push("both-torsion");
        } else {
            monomial = constant_relation(&alpha, &beta)?;
        }
    } else if let IntRelation::Generator(m0, n0) = relation {
        let c = leading_value(u, v, m0, n0);
        monomial = c.root_of_unity_order().map(|k| (k as i64 * m0, k as i64 * n0));
    }
    if let Some((m, n)) = monomial {
        algebraic.push(Constraint::MonomialTorsion(m, n));
        components = monomial_components(m, n);
        cases.push("monomial-torsion");
    }

    let implied_alpha = both_torsion || matches!(monomial, Some((_, 0)));
    let implied_lambda = both_torsion || matches!(monomial, Some((0, _)));
    if ru.is_empty() && !implied_alpha {
        differential.push(Constraint::DeltaConstAlpha);
        cases.push("delta-constant-alpha");
    }
    if rv.is_empty() && !implied_lambda {
        differential.push(Constraint::DeltaConstLambda);
        cases.push("delta-constant-lambda");
    }
    if let IntRelation::Generator(m, n) = relation {
        if m != 0 && n != 0 && monomial.is_none() {
            differential.push(Constraint::DeltaConstMonomial(m, n));
            cases.push("delta-constant-monomial");
        }
    }
    if algebraic.is_empty() && differential.is_empty() {
        cases.push("full-torus");
    }
    Ok(DiagonalAnalysis { algebraic, differential, components, cases, residue_relation: relation })
}

/// Differential Galois group of `sigma(Y) = diag(u, v) Y`.
pub fn classify_diagonalizable(u: &RatFunc<K>, v: &RatFunc<K>) -> Result<GroupDescriptor> {
    Ok(analyze_diagonal(u, v, 1, crate::factor::DEFAULT_MAX_DEGREE)?.g_descriptor(Shape::Diagonalizable))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;

    fn kx(n: &[i64], d: &[i64]) -> RatFunc<K> {
        RatFunc::new(Poly::from_ints(n).embed(), Poly::from_ints(d).embed())
    }

    #[test]
    fn constants_two_and_three() {
        let g = classify_diagonalizable(&RatFunc::from_int(2), &RatFunc::from_int(3)).unwrap();
        assert_eq!(g.constraints, vec![Constraint::DeltaConstAlpha, Constraint::DeltaConstLambda]);
        assert_eq!(g.components, Some(1));
    }

    #[test]
    fn golden_ratio_pair() {
        let f = NumberField::new(&Poly::from_ints(&[-1, -1, 1])).unwrap();
        let phi = f.gen();
        let psi = K::one() - &phi;
        let a = analyze_diagonal(&RatFunc::constant(phi), &RatFunc::constant(psi), 1, 30).unwrap();
        let g = a.g_descriptor(Shape::Diagonalizable);
        assert_eq!(
            g.constraints,
            vec![
                Constraint::MonomialTorsion(2, 2),
                Constraint::DeltaConstAlpha,
                Constraint::DeltaConstLambda
            ]
        );
        assert_eq!(g.components, Some(2));
    }

    #[test]
    fn gamma_pair() {
        let g = classify_diagonalizable(&RatFunc::x(), &RatFunc::x()).unwrap();
        assert_eq!(g.constraints, vec![Constraint::MonomialTorsion(1, -1)]);
        assert_eq!(g.components, Some(1));
    }

    #[test]
    fn torsion_pair() {
        let g = classify_diagonalizable(&RatFunc::from_int(-1), &kx(&[1, 1], &[0, 1])).unwrap();
        assert_eq!(
            g.constraints,
            vec![
                Constraint::TorsionAlpha(2),
                Constraint::TorsionLambda(1),
                Constraint::TorsionLink { e: 1, g_m: 2, g_n: 1 }
            ]
        );
        assert_eq!(g.components, Some(2));
    }

    #[test]
    fn delta_monomial_and_full() {
        // u = x, v = 2x: residues proportional, 1/2 not a root of unity.
        let g = classify_diagonalizable(&RatFunc::x(), &kx(&[0, 2], &[1])).unwrap();
        assert_eq!(g.constraints, vec![Constraint::DeltaConstMonomial(1, -1)]);
        let g = classify_diagonalizable(&RatFunc::x(), &kx(&[1, 1], &[0, 0, 1])).unwrap();
        assert_eq!(g.constraints, vec![Constraint::MonomialTorsion(1, 1)]);
        let g = classify_diagonalizable(&RatFunc::x(), &kx(&[1, 0, 1], &[1])).unwrap();
        assert_eq!(g.constraints, vec![Constraint::FullGroup]);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(is_root_of_unity(&K::from_int(-1)), RootOfUnity::Order(2));
        assert_eq!(is_root_of_unity(&K::from_int(2)), RootOfUnity::NotRootOfUnity);
        let i = NumberField::new(&Poly::from_ints(&[1, 0, 1])).unwrap().gen();
        assert_eq!(is_root_of_unity(&i), RootOfUnity::Order(4));
    }

    #[test]
    fn coprime_base_refines() {
        let b = coprime_base(&[BigInt::from(12), BigInt::from(18)]);
        assert_eq!(b, vec![BigInt::from(2), BigInt::from(3)]);
    }
}
