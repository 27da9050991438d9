//! Dense univariate polynomials over an exact field, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{fmt_rational, is_negative, Field, Rational};

/// Invariant: no trailing zero coefficient; the zero polynomial is empty.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    pub fn monomial(c: K, n: usize) -> Self {
        let mut v = vec![K::zero(); n];
        v.push(c);
        Self::new(v)
    }

    /// `x - root`.
    pub fn linear(root: K) -> Self {
        Self::new(vec![-root, K::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &K) -> Self {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        // Horner in the ring K[x] with x -> x + a.
        let lin = Poly::new(vec![a.clone(), K::one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn shift_int(&self, t: i64) -> Self {
        self.shift(&K::from_int(t))
    }

    /// `p(c x)`.
    pub fn scale_x(&self, c: &K) -> Self {
        let mut pw = K::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &pw);
            pw = pw * c;
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &K::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.deg() < d.deg() {
            return (Self::zero(), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![K::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = c.clone() * dc;
                r[i + j] = r[i + j].clone() - &t;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient of an exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.is_one()).then(|| s.rem(m))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (&self.exact_div(&g).unwrap() * other).monic()
    }

    /// Resultant, via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> K {
        if self.is_zero() || other.is_zero() {
            return K::zero();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = K::one();
        loop {
            let da = a.deg();
            let db = b.deg();
            if db == 0 {
                return acc * &b.lc().pow(da as u64);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return K::zero();
            }
            // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
            let dr = r.deg();
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            acc = acc * &b.lc().pow((da - dr) as u64);
            a = b;
            b = r;
        }
    }

    /// Squarefree decomposition `p = lc * prod s_i^i` (Yun). Entries with
    /// `s_i = 1` are omitted; every returned factor is monic.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg() <= 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a).unwrap();
        let mut c = df.exact_div(&a).unwrap();
        let mut i = 1;
        while b.deg() > 0 {
            let d = &c - &b.derivative();
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g).unwrap();
            c = d.exact_div(&g).unwrap();
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg() <= 0 || self.gcd(&self.derivative()).deg() == 0
    }
}

impl<K: Field> Default for Poly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_vec<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        Poly::new(add_vec(&self.coeffs, &rhs.coeffs))
    }
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        &self + &rhs
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        &self - &rhs
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        &self * &rhs
    }
}

/// Writes one coefficient-times-monomial term. `first` controls whether a
/// leading "+" is emitted.
fn fmt_term<K: Field>(
    f: &mut fmt::Formatter<'_>,
    c: &K,
    var: &str,
    power: usize,
    first: bool,
) -> fmt::Result {
    let mono = match power {
        0 => String::new(),
        1 => var.to_string(),
        n => format!("{var}^{n}"),
    };
    match c.as_rational() {
        Some(q) => {
            let neg = is_negative(&q);
            let abs = if neg { -q } else { q };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                fmt_rational(&abs, f)
            } else if abs.is_one() {
                write!(f, "{mono}")
            } else {
                fmt_rational(&abs, f)?;
                write!(f, "*{mono}")
            }
        }
        None => {
            if !first {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "({c})")
            } else {
                write!(f, "({c})*{mono}")
            }
        }
    }
}

impl<K: Field> Poly<K> {
    /// Display in the variable `var`, highest degree first.
    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, K> {
        PolyDisplay { poly: self, var }
    }

    /// Total order by degree, then coefficients from the top, comparing
    /// rational coordinates.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.deg().cmp(&other.deg()).then_with(|| {
            let a = self.coeffs.iter().rev().map(|c| c.rational_coords());
            let b = other.coeffs.iter().rev().map(|c| c.rational_coords());
            a.cmp(b)
        })
    }

    /// Lagrange interpolation through distinct points.
    pub fn interpolate(xs: &[K], ys: &[K]) -> Self {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::one();
            let mut denom = K::one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = &basis * &Poly::linear(xj.clone());
                    denom = denom * &(xi.clone() - xj);
                }
            }
            acc = &acc + &basis.scale(&(yi.clone() * &denom.inv()));
        }
        acc
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

pub struct PolyDisplay<'a, K> {
    poly: &'a Poly<K>,
    var: &'a str,
}

impl<K: Field> fmt::Display for PolyDisplay<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_term(f, c, self.var, i, first)?;
            first = false;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl Poly<Rational> {
    /// Embed into a polynomial ring over another field.
    pub fn embed<L: Field>(&self) -> Poly<L> {
        Poly::new(self.coeffs.iter().map(|c| L::from_rational(c.clone())).collect())
    }
}

impl<K: Field> Poly<K> {
    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// Splits a polynomial over K into one rational polynomial per
    /// coordinate of the coefficients.
    pub fn coordinate_polys(&self) -> Vec<Poly<Rational>> {
        let width = self
            .coeffs
            .iter()
            .map(|c| c.rational_coords().len())
            .max()
            .unwrap_or(0);
        (0..width)
            .map(|k| {
                Poly::new(
                    self.coeffs
                        .iter()
                        .map(|c| c.rational_coords().get(k).cloned().unwrap_or_else(Rational::zero))
                        .collect(),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    type Q = Poly<Rational>;

    fn p(cs: &[i64]) -> Q {
        Q::from_ints(cs)
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[1, 2, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&b * &b, a);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, Q::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcd_and_ext_gcd() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn shift_and_scale() {
        assert_eq!(p(&[0, 0, 1]).shift_int(1), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1]).shift_int(-1), p(&[0, 1]));
        assert_eq!(p(&[1, 1, 1]).scale_x(&int(2)), p(&[1, 2, 4]));
    }

    #[test]
    fn resultant_matches_root_products() {
        // res(x - 2, x^2 + 1) = 2^2 + 1
        assert_eq!(p(&[-2, 1]).resultant(&p(&[1, 0, 1])), int(5));
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-2, 1, 1]).shift_int(0)), int(4));
        assert_eq!(p(&[0, 1]).resultant(&p(&[0, 1])), int(0));
    }

    #[test]
    fn squarefree_parts() {
        // (x+1)^2 (x-1)^3 x
        let f = &(&p(&[1, 1]).pow(2) * &p(&[-1, 1]).pow(3)) * &p(&[0, 1]);
        let sq = f.squarefree_decomposition();
        assert_eq!(sq, vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 2]).to_string(), "2*x^2 - 3*x + 1");
        assert_eq!(Q::new(vec![rat(-1, 2), int(1)]).to_string(), "x - 1/2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Q::zero().to_string(), "0");
    }
}
