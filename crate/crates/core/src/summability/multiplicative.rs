use crate::error::{Error, Result};
use crate::factor::poly_factor_with;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;

use super::orbit::OrbitClass;

/// `(c, f)` with `r = c sigma^t(f) / f`, or `None` when some step-t orbit
/// carries a nonzero total multiplicity.
pub fn solve_multiplicative<K: Field>(
    r: &RatFunc<K>,
    t: u32,
    max_degree: usize,
) -> Result<Option<(K, RatFunc<K>)>> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    let tk = K::from_int(t as i64);
    let rt = if t == 1 { r.clone() } else { r.scale_x(&tk) };

    // Signed multiplicity of rep(x + k), per orbit.
    let mut orbits: Vec<(OrbitClass<K>, Vec<(i64, i64)>)> = Vec::new();
    let mut record = |p: Poly<K>, m: i64| {
        let (orbit, k) = OrbitClass::of(&p);
        let idx = match orbits.iter().position(|(o, _)| o == &orbit) {
            Some(i) => i,
            None => {
                orbits.push((orbit, Vec::new()));
                orbits.len() - 1
            }
        };
        orbits[idx].1.push((k, m));
    };
    if !rt.num().is_constant() {
        for (p, e) in poly_factor_with(rt.num(), max_degree)?.factors {
            record(p, e as i64);
        }
    }
    if !rt.den().is_constant() {
        for (p, e) in poly_factor_with(rt.den(), max_degree)?.factors {
            record(p, -(e as i64));
        }
    }

    let mut f = RatFunc::one();
    for (orbit, mut ds) in orbits {
        if ds.iter().map(|(_, m)| m).sum::<i64>() != 0 {
            return Ok(None);
        }
        ds.sort();
        // F(k) = -sum_{j <= k} D(j) is the exponent of rep(x + k) in f.
        let lo = ds[0].0;
        let hi = ds[ds.len() - 1].0;
        let mut acc = 0i64;
        let mut it = ds.iter().peekable();
        for k in lo..=hi {
            while let Some((_, m)) = it.next_if(|(kk, _)| *kk == k) {
                acc += m;
            }
            if acc != 0 {
                let factor = RatFunc::from_poly(orbit.representative.shift_int(k));
                f = &f * &factor.powi(-acc)?;
            }
        }
    }
    let ratio = &rt / &(&f.shift(1) / &f);
    let c = ratio.as_constant().ok_or_else(|| {
        Error::InternalInconsistency("multiplicative telescoping left a nonconstant quotient".into())
    })?;
    let f = if t == 1 { f } else { f.scale_x(&tk.inv()) };
    Ok(Some((c, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type Q = RatFunc<Rational>;

    fn rf(n: &[i64], d: &[i64]) -> Q {
        Q::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    #[test]
    fn examples() {
        let (c, f) = solve_multiplicative(&rf(&[1, 1], &[0, 1]), 1, 30).unwrap().unwrap();
        assert_eq!((c, f), (int(1), Q::x()));
        let (c, f) = solve_multiplicative(&rf(&[2, 2], &[0, 1]), 1, 30).unwrap().unwrap();
        assert_eq!((c, f), (int(2), Q::x()));
        assert!(solve_multiplicative(&rf(&[0, 0, 1], &[1]), 1, 30).unwrap().is_none());
    }

    #[test]
    fn spread_orbit_and_step() {
        // r = (x+3)(x^2+2x+2) / ((x-1)(x^2+1))
        let num = &Poly::from_ints(&[3, 1]) * &Poly::from_ints(&[2, 2, 1]);
        let den = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[1, 0, 1]);
        let r = Q::new(num, den).scale(&int(-5));
        let (c, f) = solve_multiplicative(&r, 1, 30).unwrap().unwrap();
        assert_eq!(c, int(-5));
        assert_eq!(&(&f.shift(1) / &f).scale(&c), &r);

        let r = rf(&[2, 1], &[0, 1]);
        let (c, f) = solve_multiplicative(&r, 2, 30).unwrap().unwrap();
        assert_eq!(c, int(1));
        assert_eq!(&f.shift(2) / &f, r);
        // (x+1)/x is sigma(x)/x but its poles sit in different step-2 orbits
        assert!(solve_multiplicative(&rf(&[1, 1], &[0, 1]), 2, 30).unwrap().is_none());
    }
}
