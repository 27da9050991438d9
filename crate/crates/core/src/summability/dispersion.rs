use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::factor::integer_roots;
use crate::poly::Poly;
use crate::scalar::{Field, Rational};

/// Integer roots of a nonzero polynomial over K: common integer roots of
/// its rational coordinate polynomials.
pub(crate) fn integer_roots_of<K: Field>(p: &Poly<K>) -> Vec<BigInt> {
    let coords: Vec<Poly<Rational>> =
        p.coordinate_polys().into_iter().filter(|c| !c.is_zero()).collect();
    let Some(first) = coords.first() else {
        return Vec::new();
    };
    let g = coords.iter().skip(1).fold(first.clone(), |g, c| g.gcd(c));
    integer_roots(&g)
}

/// `Res_x(p(x), q(x + j))` as a polynomial in `j`.
pub fn shift_resultant<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Poly<K> {
    let deg = p.degree().unwrap_or(0) * q.degree().unwrap_or(0);
    let js: Vec<K> = (0..=deg as i64).map(K::from_int).collect();
    let vals: Vec<K> = js.iter().map(|j| p.resultant(&q.shift(j))).collect();
    Poly::interpolate(&js, &vals)
}

/// All `j >= 0` with `gcd(p(x), q(x + j)) != 1`, ascending.
pub fn dispersion<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Vec<i64> {
    if p.deg() <= 0 || q.deg() <= 0 {
        return Vec::new();
    }
    let r = shift_resultant(p, q);
    integer_roots_of(&r)
        .into_iter()
        .filter(|j| !j.is_negative())
        .filter_map(|j| j.to_i64())
        .filter(|&j| p.gcd(&q.shift_int(j)).deg() > 0)
        .collect()
}
