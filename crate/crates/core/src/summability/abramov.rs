use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;
use crate::Limits;

use super::dispersion::{dispersion, integer_roots_of};

/// `particular + span(homogeneous)`.
#[derive(Clone, PartialEq, Debug)]
pub struct AffineSolutions<K> {
    pub particular: RatFunc<K>,
    pub homogeneous: Vec<RatFunc<K>>,
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Upper bound on the degree of polynomial solutions of
/// `sum_i q_i(x) y(x + i) = s(x)`; `None` means only `y = 0` can work.
pub(crate) fn degree_bound<K: Field>(q: &[Poly<K>], s: &Poly<K>) -> Result<Option<usize>> {
    // sigma^i = sum_j binom(i, j) Delta^j
    let r: Vec<Poly<K>> = (0..q.len())
        .map(|j| {
            (j..q.len()).fold(Poly::zero(), |acc, i| &acc + &q[i].scale(&K::from_int(binom(i, j))))
        })
        .collect();
    let Some(b) = r
        .iter()
        .enumerate()
        .filter(|(_, rj)| !rj.is_zero())
        .map(|(j, rj)| rj.deg() - j as isize)
        .max()
    else {
        return Err(Error::InternalInconsistency("zero difference operator".into()));
    };
    // Leading coefficient of L(x^n) is I(n) x^(n+b).
    let mut indicial = Poly::zero();
    for (j, rj) in r.iter().enumerate() {
        if rj.is_zero() || rj.deg() - j as isize != b {
            continue;
        }
        let mut falling = Poly::one();
        for i in 0..j {
            falling = &falling * &Poly::linear(K::from_int(i as i64));
        }
        indicial = &indicial + &falling.scale(&rj.lc());
    }
    let mut bound: Option<isize> = None;
    if !s.is_zero() {
        bound = Some(s.deg() - b);
    }
    if indicial.is_zero() {
        return Err(Error::InternalInconsistency("degenerate indicial polynomial".into()));
    }
    let roots: Vec<BigInt> = integer_roots_of(&indicial);
    if let Some(n) = roots.iter().filter(|n| !n.is_negative()).max() {
        let n = n.to_isize().unwrap_or(isize::MAX);
        bound = Some(bound.map_or(n, |b| b.max(n)));
    }
    Ok(bound.filter(|&n| n >= 0).map(|n| n as usize))
}

/// All polynomial solutions of `sum_i q_i(x) y(x + i) = s(x)`, as a
/// particular solution plus a basis of the homogeneous ones.
pub fn polynomial_solutions<K: Field>(
    q: &[Poly<K>],
    s: &Poly<K>,
    cap: usize,
) -> Result<Option<(Poly<K>, Vec<Poly<K>>)>> {
    let Some(n) = degree_bound(q, s)? else {
        return Ok(s.is_zero().then(|| (Poly::zero(), Vec::new())));
    };
    if n > cap {
        return Err(Error::Inconclusive(format!(
            "polynomial solution degree bound {n} exceeds cap {cap}"
        )));
    }
    let images: Vec<Poly<K>> = (0..=n)
        .map(|k| {
            let m = Poly::monomial(K::one(), k);
            q.iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (i, qi)| &acc + &(qi * &m.shift_int(i as i64)))
        })
        .collect();
    let rows = images.iter().map(|p| p.coeffs().len()).max().unwrap_or(0).max(s.coeffs().len());
    let matrix: linalg::Matrix<K> =
        (0..rows).map(|r| images.iter().map(|p| p.coeff(r)).collect()).collect();
    let rhs: Vec<K> = (0..rows).map(|r| s.coeff(r)).collect();
    let Some((part, hom)) = linalg::solve_affine(&matrix, &rhs, n + 1) else {
        return Ok(None);
    };
    Ok(Some((Poly::new(part), hom.into_iter().map(Poly::new).collect())))
}

/// Universal denominator for `sum_i p_i(x) y(x + i)` with polynomial
/// coefficients.
pub fn universal_denominator<K: Field>(p: &[Poly<K>]) -> Poly<K> {
    let s = p.len() - 1;
    let mut a = p[s].shift_int(-(s as i64));
    let mut b = p[0].clone();
    let mut u = Poly::one();
    let disp = dispersion(&a, &b);
    for &j in disp.iter().rev() {
        let g = a.gcd(&b.shift_int(j));
        if g.deg() <= 0 {
            continue;
        }
        a = a.exact_div(&g).unwrap();
        b = b.exact_div(&g.shift_int(-j)).unwrap();
        for i in 0..=j {
            u = &u * &g.shift_int(-i);
        }
    }
    u
}

/// All rational `g` with `sum_i p_i sigma^(t i)(g) = rhs`; `None` when there
/// is no rational solution.
pub fn abramov_rational_solutions<K: Field>(
    coeffs: &[RatFunc<K>],
    rhs: &RatFunc<K>,
    t: u32,
) -> Result<Option<AffineSolutions<K>>> {
    abramov_rational_solutions_with(coeffs, rhs, t, &Limits::default())
}

pub fn abramov_rational_solutions_with<K: Field>(
    coeffs: &[RatFunc<K>],
    rhs: &RatFunc<K>,
    t: u32,
    limits: &Limits,
) -> Result<Option<AffineSolutions<K>>> {
    if coeffs.is_empty() || coeffs[0].is_zero() || coeffs[coeffs.len() - 1].is_zero() {
        return Err(Error::Precondition("leading and trailing coefficients must be nonzero".into()));
    }
    let tk = K::from_int(t as i64);
    let scaled: Vec<RatFunc<K>> = coeffs.iter().map(|c| c.scale_x(&tk)).collect();
    let rhs_s = rhs.scale_x(&tk);
    let l = scaled.iter().chain(std::iter::once(&rhs_s)).fold(Poly::one(), |l, c| l.lcm(c.den()));
    let lr = RatFunc::from_poly(l);
    let p: Vec<Poly<K>> = scaled.iter().map(|c| (c * &lr).num().clone()).collect();
    let s = (&rhs_s * &lr).num().clone();

    let u = universal_denominator(&p);
    let shifted_u: Vec<Poly<K>> = (0..p.len()).map(|i| u.shift_int(i as i64)).collect();
    let m = shifted_u.iter().fold(Poly::one(), |m, ui| m.lcm(ui));
    let q: Vec<Poly<K>> = p
        .iter()
        .zip(&shifted_u)
        .map(|(pi, ui)| pi * &m.exact_div(ui).unwrap())
        .collect();
    let Some((y, basis)) = polynomial_solutions(&q, &(&s * &m), limits.abramov_degree_cap)? else {
        return Ok(None);
    };
    let back = |y: Poly<K>| RatFunc::new(y, u.clone()).scale_x(&tk.inv());
    Ok(Some(AffineSolutions {
        particular: back(y),
        homogeneous: basis.into_iter().map(back).collect(),
    }))
}

/// Substitutes `g` into `sum_i p_i sigma^(t i)(g)`.
pub fn apply_operator<K: Field>(coeffs: &[RatFunc<K>], g: &RatFunc<K>, t: u32) -> RatFunc<K> {
    coeffs.iter().enumerate().fold(RatFunc::zero(), |acc, (i, c)| {
        &acc + &(c * &g.shift((t as usize * i) as i64))
    })
}
