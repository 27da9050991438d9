use crate::error::Result;
use crate::factor::DEFAULT_MAX_DEGREE;
use crate::linalg;
use crate::pfrac::partial_fractions_with;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;

use super::orbit::OrbitClass;

/// Polynomial `g` with `g(x + 1) - g(x) = p` and `g(0) = 0`.
pub fn poly_antidifference<K: Field>(p: &Poly<K>) -> Poly<K> {
    let Some(d) = p.degree() else {
        return Poly::zero();
    };
    // Unknown coefficients of x^1 .. x^(d+1).
    let n = d + 1;
    let cols: Vec<Poly<K>> = (1..=n)
        .map(|k| {
            let m = Poly::monomial(K::one(), k);
            &m.shift_int(1) - &m
        })
        .collect();
    let matrix: linalg::Matrix<K> =
        (0..n).map(|row| cols.iter().map(|c| c.coeff(row)).collect()).collect();
    let rhs: Vec<K> = (0..n).map(|row| p.coeff(row)).collect();
    let (sol, _) = linalg::solve_affine(&matrix, &rhs, n).expect("difference map is onto");
    let mut coeffs = vec![K::zero()];
    coeffs.extend(sol);
    Poly::new(coeffs)
}

/// `g` with `sigma(g) - g = f`, or `None` when `f` is not summable.
pub fn solve_telescoper<K: Field>(f: &RatFunc<K>) -> Result<Option<RatFunc<K>>> {
    solve_telescoper_with(f, DEFAULT_MAX_DEGREE)
}

pub fn solve_telescoper_with<K: Field>(
    f: &RatFunc<K>,
    max_degree: usize,
) -> Result<Option<RatFunc<K>>> {
    let pf = partial_fractions_with(f, max_degree)?;
    let mut g = RatFunc::from_poly(poly_antidifference(&pf.poly_part));
    // Residual numerators per (orbit, multiplicity) after moving every term
    // to offset 0.
    let mut residual: Vec<(OrbitClass<K>, usize, Poly<K>)> = Vec::new();
    for term in &pf.terms {
        let (orbit, k) = OrbitClass::of(&term.p);
        let rep = &orbit.representative;
        // n / rep(x + k)^j = T(x + k) with T = n(x - k) / rep^j.
        let n0 = term.n.shift_int(-k);
        let t = RatFunc::new(n0.clone(), rep.pow(term.j as u32));
        // T(x + k) - T(x) = sigma(G) - G.
        if k > 0 {
            for i in 0..k {
                g = &g + &t.shift(i);
            }
        } else {
            for i in 0..(-k) {
                g = &g - &t.shift(k + i);
            }
        }
        match residual.iter_mut().find(|(o, j, _)| o == &orbit && *j == term.j) {
            Some(entry) => entry.2 = &entry.2 + &n0,
            None => residual.push((orbit, term.j, n0)),
        }
    }
    if residual.iter().any(|(_, _, n)| !n.is_zero()) {
        return Ok(None);
    }
    Ok(Some(g))
}

/// `g` with `sigma^t(g) - g = f`, via `x = t x~`.
pub fn solve_telescoper_step<K: Field>(
    f: &RatFunc<K>,
    t: u32,
    max_degree: usize,
) -> Result<Option<RatFunc<K>>> {
    if t == 1 {
        return solve_telescoper_with(f, max_degree);
    }
    let tk = K::from_int(t as i64);
    let g = solve_telescoper_with(&f.scale_x(&tk), max_degree)?;
    Ok(g.map(|g| g.scale_x(&tk.inv())))
}
