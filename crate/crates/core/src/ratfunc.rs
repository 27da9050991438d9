//! Reduced rational functions with monic denominators.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Rational};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K> {
    num: Poly<K>,
    den: Poly<K>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum AtInfinity<K> {
    Value(K),
    ZeroAtInfinity,
    PoleAtInfinity,
}

impl<K: Field> RatFunc<K> {
    /// Reduces `num / den`. Panics when `den` is zero.
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let inv = den.lc().inv();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(K::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(c)` for a constant function.
    pub fn as_constant(&self) -> Option<K> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly<K>) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    /// `f(x + t)`.
    pub fn shift(&self, t: i64) -> Self {
        self.shift_by(&K::from_int(t))
    }

    pub fn shift_by(&self, a: &K) -> Self {
        // Shifting preserves coprimality and monicity.
        RatFunc { num: self.num.shift(a), den: self.den.shift(a) }
    }

    /// `f(c x)`.
    pub fn scale_x(&self, c: &K) -> Self {
        Self::new(self.num.scale_x(c), self.den.scale_x(c))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// `f' / f`.
    pub fn log_derivative(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Ok(Self::new(n, &self.num * &self.den))
    }

    pub fn value_at_infinity(&self) -> AtInfinity<K> {
        match self.num.deg().cmp(&self.den.deg()) {
            std::cmp::Ordering::Less => AtInfinity::ZeroAtInfinity,
            std::cmp::Ordering::Greater => AtInfinity::PoleAtInfinity,
            std::cmp::Ordering::Equal => AtInfinity::Value(self.num.lc()),
        }
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Evaluation at a point that is not a pole.
    pub fn eval(&self, at: &K) -> Option<K> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) * &d.inv())
    }

    /// Degree of the numerator minus degree of the denominator.
    pub fn order_at_infinity(&self) -> isize {
        self.den.deg() - self.num.deg()
    }
}

impl RatFunc<Rational> {
    pub fn embed<L: Field>(&self) -> RatFunc<L> {
        RatFunc { num: self.num.embed(), den: self.den.embed() }
    }
}

impl<K: Field> RatFunc<K> {
    pub fn to_rational(&self) -> Option<RatFunc<Rational>> {
        Some(RatFunc { num: self.num.to_rational()?, den: self.den.to_rational()? })
    }
}

impl<K: Field> Default for RatFunc<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> From<Poly<K>> for RatFunc<K> {
    fn from(p: Poly<K>) -> Self {
        Self::from_poly(p)
    }
}

impl<K: Field> Add for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn add(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<K: Field> Neg for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<K: Field> Sub for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn sub(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Mul for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn mul(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero.
impl<K: Field> Div for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn div(self, rhs: &RatFunc<K>) -> RatFunc<K> {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<K: Field> $tr for RatFunc<K> {
            type Output = RatFunc<K>;
            fn $m(self, rhs: RatFunc<K>) -> RatFunc<K> {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl<K: Field> Neg for RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        -&self
    }
}

fn needs_parens<K: Field>(p: &Poly<K>) -> bool {
    p.term_count() > 1
}

impl<K: Field> fmt::Display for RatFunc<K> {
    /// Canonical form: numerator and denominator scaled to coprime integer
    /// coefficients with positive leading denominator coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = match (self.num.to_rational(), self.den.to_rational()) {
            (Some(n), Some(d)) => {
                let all = n.coeffs().iter().chain(d.coeffs());
                let l = all.clone().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
                let g = all.fold(BigInt::zero(), |g, c| g.gcd(&(c * Rational::from_integer(l.clone())).to_integer()));
                let s = Rational::new(l, g.abs());
                let n = n.scale(&s);
                let d = d.scale(&s);
                (n.to_string(), (d.to_string(), needs_parens(&d) || !d.is_monic()))
            }
            _ => (self.num.to_string(), (self.den.to_string(), needs_parens(&self.den))),
        };
        let (den, den_paren) = den;
        if needs_parens(&self.num) {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if den_paren {
            write!(f, "/({den})")
        } else {
            write!(f, "/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    type Q = RatFunc<Rational>;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    fn rf(n: &[i64], d: &[i64]) -> Q {
        Q::new(p(n), p(d))
    }

    #[test]
    fn normalization() {
        let f = rf(&[2, 2], &[0, 4]);
        assert_eq!(f.den(), &p(&[0, 1]));
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(rf(&[0, 1], &[0, 2]), Q::constant(rat(1, 2)));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Q::x().shift(1), rf(&[1, 1], &[1]));
        assert_eq!(rf(&[1], &[0, 1]).shift(2), rf(&[1], &[2, 1]));
        assert_eq!(rf(&[0, 0, 1], &[1]).shift(1), rf(&[1, 2, 1], &[1]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(rf(&[0, 0, 1], &[1]).derivative(), rf(&[0, 2], &[1]));
        assert_eq!(Q::x().log_derivative().unwrap(), rf(&[1], &[0, 1]));
        let f = rf(&[1, 1], &[0, 2]);
        let expect = &rf(&[1], &[1, 1]) - &rf(&[1], &[0, 1]);
        assert_eq!(f.log_derivative().unwrap(), expect);
        assert_eq!(Q::zero().log_derivative(), Err(Error::ZeroInput));
    }

    #[test]
    fn infinity() {
        assert_eq!(rf(&[1, 1], &[0, 2]).value_at_infinity(), AtInfinity::Value(rat(1, 2)));
        assert_eq!(Q::one().value_at_infinity(), AtInfinity::Value(int(1)));
        assert_eq!(rf(&[0, 0, 1], &[1, 1]).value_at_infinity(), AtInfinity::PoleAtInfinity);
        assert_eq!(rf(&[1], &[1, 1]).value_at_infinity(), AtInfinity::ZeroAtInfinity);
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(rf(&[1, 1], &[0, 2]).to_string(), "(x + 1)/(2*x)");
        assert_eq!(rf(&[-1], &[0, 1]).to_string(), "-1/x");
        assert_eq!(rf(&[1], &[0, 1, 1]).to_string(), "1/(x^2 + x)");
        assert_eq!(rf(&[0, 2], &[1]).to_string(), "2*x");
        assert_eq!(Q::zero().to_string(), "0");
    }
}
