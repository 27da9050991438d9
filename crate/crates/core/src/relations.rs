//! Explicit difference-differential relations among the solutions, derived
//! from a classification, and their exact verification.

use std::fmt;

use num_traits::One;

use crate::classify::{Branch, Classification, Constraint, LinearDeltaOp, Shape};
use crate::error::{Error, Result};
use crate::hypergeom::riccati_residual;
use crate::summability::{abramov_rational_solutions_with, apply_operator, solve_multiplicative, solve_telescoper_with};
use crate::{KRatFunc, Limits};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Target {
    Y1,
    Y2,
    Y0,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Y1 => "y1",
            Target::Y2 => "y2",
            Target::Y0 => "y0",
        })
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum RelationCertificate {
    /// `sigma(target) = u target`.
    Hypergeometric { target: Target, u: KRatFunc },
    /// `y1^m second^n = f`.
    MonomialRational { m: i64, n: i64, second: Target, f: KRatFunc },
    /// `delta(target) = f target`.
    LogDerivRational { target: Target, f: KRatFunc },
    /// `delta(y1^m second^n) = f y1^m second^n`.
    MonomialLogDeriv { m: i64, n: i64, second: Target, f: KRatFunc },
    /// `y2 = y1 L(delta(y1)/y1) + g y1`.
    UnipotentRelation { l: LinearDeltaOp, g: KRatFunc },
    /// `y1 y2 = 0` for the basis of `sigma^2(y) + r y = 0`.
    ProductZero,
    /// `omega^m = f` for the Casoratian `omega`.
    CasoratianPower { m: u32, f: KRatFunc },
    /// `delta(omega) = f omega`.
    CasoratianLogDeriv { f: KRatFunc },
    Independence(&'static str),
}

pub const INDEPENDENT_TORUS: &str = "y1, y2 differentially independent over k";
pub const INDEPENDENT_UNIPOTENT: &str = "y2 differentially transcendental over k<y1, y0>";
pub const INDEPENDENT_DIHEDRAL: &str = "all relations follow from y1 y2 = 0 and sigma(omega) = r omega";
pub const INDEPENDENT_LARGE: &str = "y1, y2, sigma(y1), sigma(y2) differentially independent over k";

impl RelationCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            RelationCertificate::Hypergeometric { .. } => "Hypergeometric",
            RelationCertificate::MonomialRational { .. } => "MonomialRational",
            RelationCertificate::LogDerivRational { .. } => "LogDerivRational",
            RelationCertificate::MonomialLogDeriv { .. } => "MonomialLogDeriv",
            RelationCertificate::UnipotentRelation { .. } => "UnipotentRelation",
            RelationCertificate::ProductZero => "ProductZero",
            RelationCertificate::CasoratianPower { .. } => "CasoratianPower",
            RelationCertificate::CasoratianLogDeriv { .. } => "CasoratianLogDeriv",
            RelationCertificate::Independence(_) => "Independence",
        }
    }

    /// Named witness values, rendered as text.
    pub fn witnesses(&self) -> Vec<(&'static str, String)> {
        use RelationCertificate::*;
        match self {
            Hypergeometric { target, u } => vec![("target", target.to_string()), ("u", u.to_string())],
            MonomialRational { m, n, second, f } | MonomialLogDeriv { m, n, second, f } => vec![
                ("m", m.to_string()),
                ("n", n.to_string()),
                ("second", second.to_string()),
                ("f", f.to_string()),
            ],
            LogDerivRational { target, f } => vec![("target", target.to_string()), ("f", f.to_string())],
            UnipotentRelation { l, g } => vec![("L", l.to_string()), ("g", g.to_string())],
            ProductZero => vec![],
            CasoratianPower { m, f } => vec![("m", m.to_string()), ("f", f.to_string())],
            CasoratianLogDeriv { f } => vec![("f", f.to_string())],
            Independence(tag) => vec![("statement", tag.to_string())],
        }
    }
}

impl fmt::Display for RelationCertificate {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RelationCertificate::*;
        match self {
            Hypergeometric { target, u } => write!(fm, "sigma({target}) = ({u}) {target}"),
            MonomialRational { m, n, second, f } => write!(fm, "y1^{m} {second}^{n} = {f}"),
            LogDerivRational { target, f } => write!(fm, "delta({target}) = ({f}) {target}"),
            MonomialLogDeriv { m, n, second, f } => {
                write!(fm, "delta(y1^{m} {second}^{n}) = ({f}) y1^{m} {second}^{n}")
            }
            UnipotentRelation { l, g } => write!(fm, "y2 = y1 L(delta(y1)/y1) + ({g}) y1 with L = {l}"),
            ProductZero => write!(fm, "y1 y2 = 0"),
            CasoratianPower { m, f } => write!(fm, "omega^{m} = {f}"),
            CasoratianLogDeriv { f } => write!(fm, "delta(omega) = ({f}) omega"),
            Independence(tag) => fm.write_str(tag),
        }
    }
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Verification {
    pub holds: bool,
    pub reason: &'static str,
}

impl Verification {
    fn check(holds: bool, reason: &'static str) -> Self {
        Verification { holds, reason }
    }
}

fn missing(what: &str) -> Error {
    Error::InternalInconsistency(format!("classifier guaranteed {what}, but no witness was found"))
}

fn monomial(u: &KRatFunc, v: &KRatFunc, m: i64, n: i64) -> Result<KRatFunc> {
    Ok(&u.powi(m)? * &v.powi(n)?)
}

fn rational_invariant(rho: &KRatFunc, max_degree: usize) -> Result<KRatFunc> {
    match solve_multiplicative(rho, 1, max_degree)? {
        Some((c, f)) if c.is_one() => Ok(f),
        _ => Err(missing("a rational invariant")),
    }
}

fn log_antidifference(rho: &KRatFunc, max_degree: usize) -> Result<KRatFunc> {
    solve_telescoper_with(&rho.log_derivative()?, max_degree)?.ok_or_else(|| missing("a summable log-derivative"))
}

/// Right-hand side and coefficients of the second-order equation for `g`.
fn unipotent_equation(a: &KRatFunc, b: &KRatFunc, u: &KRatFunc, l: &LinearDeltaOp) -> Result<([KRatFunc; 3], KRatFunc)> {
    let su = u.shift(1);
    let usu = u * &su;
    let rhs = &(b * &l.apply(&u.log_derivative()?)) - &(&usu * &l.apply(&su.log_derivative()?));
    Ok(([b.clone(), a * u, usu], rhs))
}

pub fn emit_relations(c: &Classification) -> Result<Vec<RelationCertificate>> {
    emit_relations_with(c, &Limits::default())
}

pub fn emit_relations_with(c: &Classification, limits: &Limits) -> Result<Vec<RelationCertificate>> {
    use RelationCertificate::*;
    let maxdeg = limits.max_factor_degree;
    let mut out = Vec::new();
    match &c.branch {
        Branch::Diagonal { u, v } => {
            out.push(Hypergeometric { target: Target::Y1, u: u.clone() });
            out.push(Hypergeometric { target: Target::Y2, u: v.clone() });
            torus_relations(&c.g.constraints, u, v, Target::Y2, maxdeg, &mut out)?;
            if c.g.has(&Constraint::FullGroup) {
                out.push(Independence(INDEPENDENT_TORUS));
            }
        }
        Branch::Reducible { u, v, iterate, w, embedding } => {
            out.push(Hypergeometric { target: Target::Y1, u: u.clone() });
            match embedding {
                Some((l, g_wrat)) => {
                    let g = -g_wrat;
                    if iterate.t == 1 {
                        let (coeffs, rhs) = unipotent_equation(&c.a, &c.b, u, l)?;
                        if apply_operator(&coeffs, &g, 1) != rhs {
                            return Err(Error::InternalInconsistency(
                                "telescoping witness does not solve the second-order equation".into(),
                            ));
                        }
                        if abramov_rational_solutions_with(&coeffs, &rhs, 1, limits)?.is_none() {
                            return Err(Error::InternalInconsistency(
                                "rational-solution search disagrees with the telescoping witness".into(),
                            ));
                        }
                    } else if w.is_none() {
                        return Err(missing("a rational w"));
                    }
                    out.push(UnipotentRelation { l: l.clone(), g });
                }
                None => {
                    out.push(Hypergeometric { target: Target::Y0, u: v.clone() });
                    torus_relations(&c.g.constraints, u, v, Target::Y0, maxdeg, &mut out)?;
                    out.push(Independence(INDEPENDENT_UNIPOTENT));
                }
            }
        }
        Branch::Imprimitive { r, .. } => {
            out.push(ProductZero);
            casoratian_relations(&c.g.constraints, r, maxdeg, INDEPENDENT_DIHEDRAL, &mut out)?;
        }
        Branch::Large => {
            casoratian_relations(&c.g.constraints, &c.b, maxdeg, INDEPENDENT_LARGE, &mut out)?;
        }
    }
    Ok(out)
}

fn torus_relations(
    cs: &[Constraint],
    u: &KRatFunc,
    v: &KRatFunc,
    second: Target,
    maxdeg: usize,
    out: &mut Vec<RelationCertificate>,
) -> Result<()> {
    use RelationCertificate::*;
    for con in cs {
        let pair = match con {
            Constraint::TorsionAlpha(m) => Some((*m as i64, 0)),
            Constraint::TorsionLambda(n) => Some((0, *n as i64)),
            Constraint::TorsionLink { e, g_m, g_n } => Some(((e * g_m) as i64, *g_n as i64)),
            Constraint::MonomialTorsion(m, n) => Some((*m, *n)),
            _ => None,
        };
        if let Some((m, n)) = pair {
            let f = rational_invariant(&monomial(u, v, m, n)?, maxdeg)?;
            out.push(MonomialRational { m, n, second, f });
            continue;
        }
        match con {
            Constraint::DeltaConstAlpha => {
                out.push(LogDerivRational { target: Target::Y1, f: log_antidifference(u, maxdeg)? })
            }
            Constraint::DeltaConstLambda => {
                out.push(LogDerivRational { target: second, f: log_antidifference(v, maxdeg)? })
            }
            Constraint::DeltaConstMonomial(m, n) => {
                let f = log_antidifference(&monomial(u, v, *m, *n)?, maxdeg)?;
                out.push(MonomialLogDeriv { m: *m, n: *n, second, f });
            }
            _ => {}
        }
    }
    Ok(())
}

fn casoratian_relations(
    cs: &[Constraint],
    rho: &KRatFunc,
    maxdeg: usize,
    full: &'static str,
    out: &mut Vec<RelationCertificate>,
) -> Result<()> {
    use RelationCertificate::*;
    for con in cs {
        match con {
            Constraint::DetTorsionDihedral { m, .. } | Constraint::DetTorsion(m) => {
                let f = rational_invariant(&rho.powi(*m as i64)?, maxdeg)?;
                out.push(CasoratianPower { m: *m, f });
            }
            Constraint::DeltaConstDet => out.push(CasoratianLogDeriv { f: log_antidifference(rho, maxdeg)? }),
            Constraint::FullGroup => out.push(Independence(full)),
            _ => {}
        }
    }
    Ok(())
}

/// Checks the defining identity of `cert` by exact arithmetic in the context
/// of `c`.
pub fn verify_certificate(cert: &RelationCertificate, c: &Classification) -> Verification {
    verify_inner(cert, c).unwrap_or(Verification::check(false, "arithmetic error"))
}

fn verify_inner(cert: &RelationCertificate, c: &Classification) -> Result<Verification> {
    use RelationCertificate::*;
    let ok = Verification::check;
    let (u, v) = match &c.branch {
        Branch::Diagonal { u, v } | Branch::Reducible { u, v, .. } => (Some(u), Some(v)),
        _ => (None, None),
    };
    let rho = match &c.branch {
        Branch::Imprimitive { r, .. } => Some(r),
        Branch::Large => Some(&c.b),
        _ => None,
    };
    let no_ctx = ok(false, "witness does not belong to this branch");
    Ok(match cert {
        Hypergeometric { target, u: w } => match (target, u) {
            (Target::Y1 | Target::Y2, Some(_)) => {
                ok(riccati_residual(w, &c.a, &c.b, 1).is_zero(), "Riccati equation")
            }
            (Target::Y0, Some(u)) => ok(
                riccati_residual(u, &c.a, &c.b, 1).is_zero() && &(u * w) == &c.b,
                "factorization of the operator",
            ),
            _ => no_ctx,
        },
        MonomialRational { m, n, f, .. } => match (u, v) {
            (Some(u), Some(v)) => ok(
                !f.is_zero() && f.shift(1) == &monomial(u, v, *m, *n)? * f,
                "sigma(f) = u^m v^n f",
            ),
            _ => no_ctx,
        },
        LogDerivRational { target, f } => match (u, v) {
            (Some(u), Some(v)) => {
                let base = if *target == Target::Y1 { u } else { v };
                ok(&f.shift(1) - f == base.log_derivative()?, "sigma(f) - f = delta(u)/u")
            }
            _ => no_ctx,
        },
        MonomialLogDeriv { m, n, f, .. } => match (u, v) {
            (Some(u), Some(v)) => ok(
                &f.shift(1) - f == monomial(u, v, *m, *n)?.log_derivative()?,
                "sigma(f) - f = delta(u^m v^n)/(u^m v^n)",
            ),
            _ => no_ctx,
        },
        UnipotentRelation { l, g } => match &c.branch {
            Branch::Reducible { u, iterate, w: Some(w), .. } => {
                if iterate.t == 1 {
                    let (coeffs, rhs) = unipotent_equation(&c.a, &c.b, u, l)?;
                    ok(apply_operator(&coeffs, g, 1) == rhs, "second-order equation for g")
                } else {
                    let t = iterate.t as i64;
                    let lhs = &g.shift(t) - g;
                    let rhs = w - &l.apply(&iterate.u_t.log_derivative()?);
                    ok(lhs == rhs, "sigma^t(g) - g = w_t - L(delta(u_t)/u_t)")
                }
            }
            _ => no_ctx,
        },
        ProductZero => ok(c.g.shape == Shape::ImprimitiveDihedral, "imprimitive branch"),
        CasoratianPower { m, f } => match rho {
            Some(rho) => ok(
                !f.is_zero() && f.shift(1) == &rho.powi(*m as i64)? * f,
                "sigma(f) = r^m f",
            ),
            None => no_ctx,
        },
        CasoratianLogDeriv { f } => match rho {
            Some(rho) => ok(&f.shift(1) - f == rho.log_derivative()?, "sigma(f) - f = delta(r)/r"),
            None => no_ctx,
        },
        Independence(tag) => {
            let holds = if *tag == INDEPENDENT_UNIPOTENT {
                c.g.has(&Constraint::UnipotentFull)
            } else {
                c.g.has(&Constraint::FullGroup)
            };
            ok(holds, "full group")
        }
    })
}
