//! The classification decision tree: difference Galois group `H` and
//! difference-differential Galois group `G` of `y(x+2) + a y(x+1) + b y(x) = 0`.

mod descriptor;
mod diagonal;
mod irreducible;
mod reducible;

pub use descriptor::{
    delta_erasure, same_group, Constraint, GroupDescriptor, LinearDeltaOp, ParityCase, Shape,
};
pub use diagonal::{analyze_diagonal, classify_diagonalizable, is_root_of_unity, DiagonalAnalysis, RootOfUnity};
pub use irreducible::{classify_imprimitive, classify_imprimitive_pair, classify_large, classify_large_pair};
pub use reducible::{
    classify_reducible, classify_reducible_full, reduce_to_connected, solve_l_coefficients, IterateData,
    ReducibleOutcome,
};

use crate::error::{Error, Result};
use crate::hypergeom::{build_r, petkovsek_riccati_with, solve_ric2_with, Cardinality, Completeness};
use crate::ratfunc::RatFunc;
use crate::scalar::Rational;
use crate::{KRatFunc, Settings};

/// Branch-specific witnesses produced alongside the descriptors.
#[derive(Clone, Debug)]
pub enum Branch {
    /// Two independent hypergeometric solutions with `sigma(y) = u y`, `sigma(y) = v y`.
    Diagonal { u: KRatFunc, v: KRatFunc },
    /// One hypergeometric solution `sigma(y1) = u y1`; `v = b / u`.
    Reducible {
        u: KRatFunc,
        v: KRatFunc,
        iterate: IterateData,
        w: Option<KRatFunc>,
        /// `(L, g)` with `L(delta(u_t)/u_t) - w_t = sigma^t(g) - g`.
        embedding: Option<(LinearDeltaOp, KRatFunc)>,
    },
    /// Equivalent to `sigma^2(y) + r y = 0`; `e` is the second Riccati solution used.
    Imprimitive { r: KRatFunc, e: Option<KRatFunc> },
    Large,
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Diagonal { .. } => "diagonal",
            Branch::Reducible { .. } => "reducible",
            Branch::Imprimitive { .. } => "imprimitive",
            Branch::Large => "large",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Diagnostics {
    pub ric1: Completeness,
    pub ric2: Option<Completeness>,
    /// Defining polynomial of the constant field, when not Q.
    pub number_field: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub a: KRatFunc,
    pub b: KRatFunc,
    pub h: GroupDescriptor,
    pub g: GroupDescriptor,
    pub branch: Branch,
    pub diagnostics: Diagnostics,
}

pub fn classify(a: &RatFunc<Rational>, b: &RatFunc<Rational>) -> Result<Classification> {
    classify_with(a, b, &Settings::default())
}

pub fn classify_with(a: &RatFunc<Rational>, b: &RatFunc<Rational>, settings: &Settings) -> Result<Classification> {
    if b.is_zero() {
        return Err(Error::Precondition("b must be nonzero".into()));
    }
    let maxdeg = settings.limits.max_factor_degree;
    let ric1 = petkovsek_riccati_with(a, b, 1, settings)?;
    let mut field = ric1.field.clone();
    let (ka, kb): (KRatFunc, KRatFunc) = (a.embed(), b.embed());
    let mut ric2_status = None;
    let incomplete = |what: &str| {
        Error::Inconclusive(format!("{what}: a Riccati root lies outside the constant field"))
    };

    let (g, h, branch) = match ric1.cardinality {
        Cardinality::Two | Cardinality::ThreeOrMore => {
            let shape = if ric1.cardinality == Cardinality::Two {
                Shape::Diagonalizable
            } else {
                Shape::ScalarOrTrivial
            };
            let (u, v) = (ric1.solutions[0].clone(), ric1.solutions[1].clone());
            let d = analyze_diagonal(&u, &v, 1, maxdeg)?;
            (d.g_descriptor(shape), d.h_descriptor(shape), Branch::Diagonal { u, v })
        }
        Cardinality::One => {
            if ric1.completeness == Completeness::PossiblyIncomplete {
                return Err(incomplete("uniqueness of the hypergeometric solution is not certified"));
            }
            let u = ric1.solutions[0].clone();
            let out = classify_reducible_full(&u, &kb, maxdeg)?;
            let v = &kb / &u;
            let branch = Branch::Reducible { u, v, iterate: out.iterate, w: out.w, embedding: out.embedding };
            (out.g, out.h, branch)
        }
        Cardinality::Zero => {
            if ric1.completeness == Completeness::PossiblyIncomplete {
                return Err(incomplete("absence of hypergeometric solutions is not certified"));
            }
            if a.is_zero() {
                let (g, h) = classify_imprimitive_pair(&kb, maxdeg)?;
                (g, h, Branch::Imprimitive { r: kb.clone(), e: None })
            } else {
                let mut s2 = settings.clone();
                s2.number_field = field.clone();
                let ric2 = solve_ric2_with(a, b, &s2)?;
                ric2_status = Some(ric2.completeness);
                if field.is_none() {
                    field = ric2.field.clone();
                }
                if let Some(e) = ric2.solutions.first() {
                    let r = build_r(&ka, &kb, e)?;
                    let (g, h) = classify_imprimitive_pair(&r, maxdeg)?;
                    (g, h, Branch::Imprimitive { r, e: Some(e.clone()) })
                } else if ric2.completeness == Completeness::PossiblyIncomplete {
                    return Err(incomplete("irreducibility is established but imprimitivity is not decided"));
                } else {
                    let (g, h) = classify_large_pair(&kb, maxdeg)?;
                    (g, h, Branch::Large)
                }
            }
        }
    };
    let diagnostics = Diagnostics {
        ric1: ric1.completeness,
        ric2: ric2_status,
        number_field: field.map(|f| f.modulus().display_in("t").to_string()),
    };
    Ok(Classification { a: ka, b: kb, h, g, branch, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    type Q = RatFunc<Rational>;

    fn rf(n: &[i64], d: &[i64]) -> Q {
        Q::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    #[test]
    fn reducible_golden() {
        let c = classify(&rf(&[-1, -2], &[1]), &rf(&[0, 0, 1], &[1])).unwrap();
        assert_eq!(c.g.shape, Shape::TriangularReducible);
        assert_eq!(
            c.g.constraints,
            vec![Constraint::MonomialTorsion(1, -1), Constraint::UnipotentEmbedding(LinearDeltaOp::identity())]
        );
        assert_eq!(c.h.constraints, vec![Constraint::MonomialTorsion(1, -1), Constraint::UnipotentFull]);
        assert!(same_group(&delta_erasure(&c.g), &c.h));
    }

    #[test]
    fn imprimitive_golden() {
        let c = classify(&Q::zero(), &rf(&[1, 1], &[0, 2])).unwrap();
        assert_eq!(c.g.shape, Shape::ImprimitiveDihedral);
        assert_eq!(c.g.constraints, vec![Constraint::DeltaConstDet]);
        assert!(same_group(&delta_erasure(&c.g), &c.h));
    }

    #[test]
    fn large_golden() {
        let c = classify(&Q::x(), &Q::one()).unwrap();
        assert_eq!(c.g.shape, Shape::Sl2Extension);
        assert_eq!(c.g.constraints, vec![Constraint::DetTorsion(1)]);
        assert_eq!(c.h.constraints, vec![Constraint::DetTorsion(1)]);
    }

    #[test]
    fn diagonal_and_scalar() {
        let c = classify(&Q::from_int(-5), &Q::from_int(6)).unwrap();
        assert_eq!(c.g.shape, Shape::Diagonalizable);
        assert_eq!(c.g.constraints, vec![Constraint::DeltaConstAlpha, Constraint::DeltaConstLambda]);
        assert_eq!(c.h.constraints, vec![Constraint::FullGroup]);
        let c = classify(&Q::from_int(-1), &Q::from_int(-1)).unwrap();
        assert_eq!(c.g.components, Some(2));
        assert!(c.diagnostics.number_field.is_some());
        let c = classify(&Q::from_int(-2), &Q::one()).unwrap();
        assert_eq!(c.g.shape, Shape::ScalarOrTrivial);
    }

    #[test]
    fn zero_b_rejected() {
        assert!(matches!(classify(&Q::x(), &Q::zero()), Err(Error::Precondition(_))));
    }
}
