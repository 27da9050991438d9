//! Rational solutions of the Riccati equations attached to
//! `y(x+2) + a y(x+1) + b y(x) = 0`.

mod petkovsek;

pub use petkovsek::{
    infinitude_test, infinitude_test_with, petkovsek_riccati, petkovsek_riccati_with,
    riccati_residual, Cardinality, Completeness, RiccatiSolutionSet,
};

use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::scalar::{Field, Rational};
use crate::Settings;

/// Coefficients `(P, Q)` of `e sigma^2(e) + P e + Q = 0`.
pub fn ric2_coefficients(
    a: &RatFunc<Rational>,
    b: &RatFunc<Rational>,
) -> Result<(RatFunc<Rational>, RatFunc<Rational>)> {
    if a.is_zero() {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let ainv = a.inv()?;
    let b_over_a = b * &ainv;
    let p = &(&b_over_a.shift(2) - &a.shift(1)) + &(&b.shift(1) * &ainv);
    let q = &(&b.shift(1) * b) * &(&ainv * &ainv);
    Ok((p, q))
}

/// Rational solutions of the second Riccati equation, found with step 2.
pub fn solve_ric2(a: &RatFunc<Rational>, b: &RatFunc<Rational>) -> Result<RiccatiSolutionSet> {
    solve_ric2_with(a, b, &Settings::default())
}

pub fn solve_ric2_with(
    a: &RatFunc<Rational>,
    b: &RatFunc<Rational>,
    settings: &Settings,
) -> Result<RiccatiSolutionSet> {
    let (p, q) = ric2_coefficients(a, b)?;
    petkovsek_riccati_with(&p, &q, 2, settings)
}

/// `r = -a sigma(a) + sigma(b) + a sigma^2(b/a) + a sigma^2(e)`.
pub fn build_r<K: Field>(a: &RatFunc<K>, b: &RatFunc<K>, e: &RatFunc<K>) -> Result<RatFunc<K>> {
    if a.is_zero() {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let b_over_a = b * &a.inv()?;
    let r = &(&b.shift(1) - &(a * &a.shift(1))) + &(a * &(&b_over_a.shift(2) + &e.shift(2)));
    Ok(r)
}
