use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numberfield::AlgNum;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;
use crate::summability::{discrete_residues_with, is_summable_with, solve_multiplicative, solve_telescoper_with};

use super::descriptor::{Constraint, GroupDescriptor, LinearDeltaOp, Shape};
use super::diagonal::{analyze_diagonal, DiagonalAnalysis};

type K = AlgNum;

/// Data of the `t`-th iterate of the triangular system.
#[derive(Clone, Debug, PartialEq)]
pub struct IterateData {
    pub t: u32,
    pub u_t: RatFunc<K>,
    pub v_t: RatFunc<K>,
    pub f_t: RatFunc<K>,
    /// `c` in `sigma^t(w_t) = c w_t`.
    pub w_coefficient: RatFunc<K>,
}

pub fn reduce_to_connected(u: &RatFunc<K>, v: &RatFunc<K>, t: u32) -> Result<IterateData> {
    if t == 0 {
        return Err(Error::Precondition("step must be positive".into()));
    }
    let (mut un, mut vn, mut fn_) = (u.clone(), v.clone(), RatFunc::one());
    for n in 1..t {
        let s = n as i64;
        fn_ = &(&u.shift(s) * &fn_) + &vn;
        un = &u.shift(s) * &un;
        vn = &v.shift(s) * &vn;
    }
    if fn_.is_zero() || un.is_zero() {
        return Err(Error::InternalInconsistency("degenerate iterate of the triangular system".into()));
    }
    let ts = t as i64;
    let w_coefficient = &(&fn_.shift(ts) * &vn) / &(&un.shift(ts) * &fn_);
    Ok(IterateData { t, u_t: un, v_t: vn, f_t: fn_, w_coefficient })
}

/// `L` and `g` with `L(delta(u)/u) - w = sigma^t(g) - g`, or `None` when no
/// linear delta-operator with constant coefficients exists.
pub fn solve_l_coefficients(
    u: &RatFunc<K>,
    w: &RatFunc<K>,
    t: u32,
    max_degree: usize,
) -> Result<Option<(LinearDeltaOp, RatFunc<K>)>> {
    let tk = K::from_int(t as i64);
    let (ut, wt) = (u.scale_x(&tk), w.scale_x(&tk));
    let dl = ut.log_derivative()?;
    let d = discrete_residues_with(&dl, max_degree)?;
    let wr = discrete_residues_with(&wt, max_degree)?;
    let mut coeffs: Vec<K> = Vec::new();
    let mut factor = K::one();
    for j in 1..=wr.max_multiplicity() {
        let i = j - 1;
        if i > 0 {
            factor = factor * &K::from_int(-(i as i64));
        }
        if wr.entries().iter().any(|e| e.multiplicity == j && d.get(&e.orbit, 1).is_none()) {
            return Ok(None);
        }
        let mut c: Option<K> = None;
        for orbit in d.orbits() {
            let rep = &orbit.representative;
            let dres = d.get(&orbit, 1).unwrap().scale(&factor);
            let cand = match wr.get(&orbit, j) {
                None => K::zero(),
                Some(target) => {
                    let inv = dres
                        .inv_mod(rep)
                        .ok_or_else(|| Error::InternalInconsistency("residue not invertible".into()))?;
                    let q = (target * &inv).rem(rep);
                    if !q.is_constant() {
                        return Ok(None);
                    }
                    q.coeff(0)
                }
            };
            match &c {
                None => c = Some(cand),
                Some(prev) if *prev != cand => return Ok(None),
                _ => {}
            }
        }
        coeffs.push(c.unwrap_or_else(K::zero));
    }
    let lt = LinearDeltaOp::new(coeffs);
    if lt.is_zero() {
        return Err(Error::InternalInconsistency("residue system produced the zero operator".into()));
    }
    let gt = solve_telescoper_with(&(&lt.apply(&dl) - &wt), max_degree)?
        .ok_or_else(|| Error::InternalInconsistency("residue system solved but remainder not summable".into()))?;
    let mut scale = tk.clone();
    let l = LinearDeltaOp::new(
        lt.coeffs
            .iter()
            .map(|c| {
                let out = c.clone() * &scale;
                scale = scale.clone() * &tk;
                out
            })
            .collect(),
    );
    let g = gt.scale_x(&tk.inv());
    let lhs = &l.apply(&u.log_derivative()?) - w;
    if lhs != &g.shift(t as i64) - &g {
        return Err(Error::InternalInconsistency("unipotent embedding failed verification".into()));
    }
    Ok(Some((l, g)))
}

#[derive(Clone, Debug)]
pub struct ReducibleOutcome {
    pub diagonal: DiagonalAnalysis,
    pub iterate: IterateData,
    pub w: Option<RatFunc<K>>,
    pub embedding: Option<(LinearDeltaOp, RatFunc<K>)>,
    pub g: GroupDescriptor,
    pub h: GroupDescriptor,
}

/// Component count `t` of the reductive quotient.
fn component_step(diag: &DiagonalAnalysis) -> u32 {
    diag.components.max(1)
}

pub fn classify_reducible_full(u: &RatFunc<K>, b: &RatFunc<K>, max_degree: usize) -> Result<ReducibleOutcome> {
    let v = b / u;
    let diagonal = analyze_diagonal(u, &v, 1, max_degree)?;
    let t = component_step(&diagonal);
    let iterate = reduce_to_connected(u, &v, t)?;
    let mut cases = diagonal.cases.clone();
    let mut w = None;
    let mut embedding = None;
    let unipotent = match solve_multiplicative(&iterate.w_coefficient, t, max_degree)? {
        Some((c, f)) if c.is_one() => {
            w = Some(f.clone());
            let ut = &iterate.u_t;
            if matches!(solve_multiplicative(ut, t, max_degree)?, Some((c, _)) if c.is_one()) {
                cases.push("unipotent-trivial-torus");
                Constraint::UnipotentFull
            } else if is_summable_with(&ut.log_derivative()?.scale_x(&K::from_int(t as i64)), max_degree)? {
                cases.push("unipotent-delta-constant-torus");
                Constraint::UnipotentFull
            } else if let Some((l, g)) = solve_l_coefficients(ut, &f, t, max_degree)? {
                cases.push("unipotent-embedding");
                let c = Constraint::UnipotentEmbedding(l.clone());
                embedding = Some((l, g));
                c
            } else {
                cases.push("unipotent-full");
                Constraint::UnipotentFull
            }
        }
        _ => {
            cases.push("unipotent-equals-difference-radical");
            Constraint::UnipotentFull
        }
    };
    let mut gcs: Vec<Constraint> =
        diagonal.algebraic.iter().chain(diagonal.differential.iter()).cloned().collect();
    gcs.push(unipotent);
    let mut hcs = diagonal.algebraic.clone();
    hcs.push(Constraint::UnipotentFull);
    let comps = Some(diagonal.components);
    let g = GroupDescriptor { cases, ..GroupDescriptor::new(Shape::TriangularReducible, gcs, comps) };
    let h = GroupDescriptor::new(Shape::TriangularReducible, hcs, comps);
    Ok(ReducibleOutcome { diagonal, iterate, w, embedding, g, h })
}

/// Differential Galois group when `u` is the unique rational Riccati solution.
pub fn classify_reducible(u: &RatFunc<K>, b: &RatFunc<K>) -> Result<GroupDescriptor> {
    Ok(classify_reducible_full(u, b, crate::factor::DEFAULT_MAX_DEGREE)?.g)
}
