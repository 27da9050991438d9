//! A single small number field Q(t)/(m(t)) and its elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_rational, FactoredPoly};
use crate::linalg;
use crate::poly::Poly;
use crate::scalar::{fmt_rational, int, Field, Rational};

pub const MAX_FIELD_DEGREE: usize = 4;

/// Orders `m` with `phi(m) <= 4`, ascending.
const SMALL_ORDERS: [u32; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

#[derive(Clone, PartialEq, Debug)]
pub struct NumberField {
    modulus: Poly<Rational>,
}

impl NumberField {
    /// Checks that `m` is irreducible over Q of degree 1..=4 and makes it monic.
    pub fn new(m: &Poly<Rational>) -> Result<Arc<Self>> {
        let d = m.degree().unwrap_or(0);
        if !(1..=MAX_FIELD_DEGREE).contains(&d) {
            return Err(Error::InvalidField(format!(
                "degree {d} outside 1..={MAX_FIELD_DEGREE}"
            )));
        }
        let f = factor_rational(m, 30)?;
        if f.factors.len() != 1 || f.factors[0].1 != 1 {
            return Err(Error::InvalidField(format!("{} is reducible", m.display_in("t"))));
        }
        Ok(Arc::new(NumberField { modulus: m.monic() }))
    }

    pub fn modulus(&self) -> &Poly<Rational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The generator `t`.
    pub fn gen(self: &Arc<Self>) -> AlgNum {
        AlgNum::from_poly(self, &Poly::x())
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({})", self.modulus.display_in("t"))
    }
}

/// An element of Q or of the designated number field, in the power basis.
///
/// Elements with `field == None` are rational and combine with any field.
/// Combining elements of two different fields panics.
#[derive(Clone, Debug)]
pub struct AlgNum {
    field: Option<Arc<NumberField>>,
    coords: Vec<Rational>,
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn join(a: &Option<Arc<NumberField>>, b: &Option<Arc<NumberField>>) -> Option<Arc<NumberField>> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => {
            assert!(
                Arc::ptr_eq(x, y) || x.modulus == y.modulus,
                "arithmetic across distinct number fields"
            );
            Some(x.clone())
        }
    }
}

impl AlgNum {
    pub fn rational(q: Rational) -> Self {
        AlgNum { field: None, coords: trim(vec![q]) }
    }

    /// The residue class of `p(t)`.
    pub fn from_poly(field: &Arc<NumberField>, p: &Poly<Rational>) -> Self {
        let r = p.rem(&field.modulus);
        AlgNum { field: Some(field.clone()), coords: r.into_coeffs() }.normalize()
    }

    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        Self::from_poly(field, &Poly::new(coords))
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn normalize(mut self) -> Self {
        self.coords = trim(std::mem::take(&mut self.coords));
        if self.field.as_ref().map_or(false, |f| f.degree() == 1) {
            // Q itself: reduce to the rational representative.
            self.field = None;
        }
        self
    }

    fn as_poly(&self) -> Poly<Rational> {
        Poly::new(self.coords.clone())
    }

    fn degree(&self) -> usize {
        self.field.as_ref().map_or(1, |f| f.degree())
    }

    /// Matrix of multiplication by `self` on the power basis (columns are
    /// images of `t^j`).
    pub fn mult_matrix(&self) -> linalg::Matrix<Rational> {
        let n = self.degree();
        let Some(field) = &self.field else {
            return vec![vec![self.coord(0)]];
        };
        let mut m = vec![vec![Rational::zero(); n]; n];
        let me = self.as_poly();
        for j in 0..n {
            let img = (&me * &Poly::monomial(int(1), j)).rem(&field.modulus);
            for i in 0..n {
                m[i][j] = img.coeff(i);
            }
        }
        m
    }

    fn coord(&self, i: usize) -> Rational {
        self.coords.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        if self.field.is_none() {
            return self.coord(0);
        }
        linalg::det(&self.mult_matrix())
    }

    /// Smallest `m` with `self^m = 1`, if any.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let deg = self.degree() as u32;
        let one = AlgNum::one();
        SMALL_ORDERS
            .iter()
            .copied()
            .filter(|&m| euler_phi(m) <= deg)
            .find(|&m| self.pow(m as u64) == one)
    }
}

fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => fmt_rational(&q, f),
            None => write!(f, "{}", self.as_poly().display_in("t")),
        }
    }
}

impl Zero for AlgNum {
    fn zero() -> Self {
        AlgNum { field: None, coords: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl One for AlgNum {
    fn one() -> Self {
        AlgNum::rational(Rational::one())
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum { field: self.field, coords: self.coords.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Add<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: &AlgNum) -> AlgNum {
        let field = join(&self.field, &rhs.field);
        let coords = (self.as_poly() + rhs.as_poly()).into_coeffs();
        AlgNum { field, coords }.normalize()
    }
}

impl<'a> Sub<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: &AlgNum) -> AlgNum {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: &AlgNum) -> AlgNum {
        let field = join(&self.field, &rhs.field);
        let prod = self.as_poly() * rhs.as_poly();
        let coords = match &field {
            Some(f) => prod.rem(&f.modulus).into_coeffs(),
            None => prod.into_coeffs(),
        };
        AlgNum { field, coords }.normalize()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $m(self, rhs: AlgNum) -> AlgNum {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Field for AlgNum {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.field {
            None => AlgNum::rational(self.coord(0).recip()),
            Some(f) => {
                let s = self.as_poly().inv_mod(&f.modulus).expect("field element is invertible");
                AlgNum::from_poly(f, &s)
            }
        }
    }

    fn from_rational(q: Rational) -> Self {
        AlgNum::rational(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        (self.coords.len() <= 1).then(|| self.coord(0))
    }

    fn rational_coords(&self) -> Vec<Rational> {
        (0..self.degree()).map(|i| self.coord(i)).collect()
    }

    /// Polynomials with rational coefficients (after making them monic) are
    /// factored over Q; anything else is rejected.
    fn factor_poly(p: &Poly<Self>, max_degree: usize) -> Result<FactoredPoly<Self>> {
        let lc = p.lc();
        let monic = p.monic();
        let Some(q) = monic.to_rational() else {
            return Err(Error::UnsupportedField(format!(
                "factorization of {monic} over a proper number field"
            )));
        };
        let f = factor_rational(&q, max_degree)?;
        Ok(FactoredPoly {
            unit: lc,
            factors: f.factors.into_iter().map(|(g, e)| (g.embed(), e)).collect(),
        })
    }
}

/// Norm of a polynomial over K: `prod_embeddings g^sigma`, in Q[z].
fn poly_norm(field: &Arc<NumberField>, g: &Poly<AlgNum>) -> Poly<Rational> {
    let n = field.degree();
    let deg = g.degree().unwrap_or(0) * n;
    let pts: Vec<Rational> = (0..=deg as i64).map(int).collect();
    let vals: Vec<Rational> = pts
        .iter()
        .map(|z| {
            let v = g.eval(&AlgNum::rational(z.clone()));
            match v.field {
                Some(_) => v.norm(),
                None => Field::pow(&v.coord(0), n as u64),
            }
        })
        .collect();
    Poly::interpolate(&pts, &vals)
}

/// All roots in K of a polynomial with rational coefficients, where K is Q
/// (`field == None`) or the given number field. Roots are returned once each,
/// rational roots first.
pub fn roots_in_field(
    h: &Poly<Rational>,
    field: Option<&Arc<NumberField>>,
    max_degree: usize,
) -> Result<Vec<AlgNum>> {
    let mut out = Vec::new();
    if h.deg() <= 0 {
        return Ok(out);
    }
    let fac = factor_rational(h, max_degree)?;
    let mut nonlinear = Vec::new();
    for (g, _) in &fac.factors {
        if g.deg() == 1 {
            out.push(AlgNum::rational(-g.coeff(0)));
        } else {
            nonlinear.push(g.clone());
        }
    }
    let Some(field) = field else {
        return Ok(out);
    };
    let n = field.degree();
    for g in nonlinear {
        let dg = g.degree().unwrap();
        if n % dg != 0 {
            continue;
        }
        out.extend(irreducible_roots(field, &g, max_degree)?);
    }
    Ok(out)
}

/// Roots in K of an irreducible `g` in Q[z], via the norm of `g(z - k t)`.
fn irreducible_roots(
    field: &Arc<NumberField>,
    g: &Poly<Rational>,
    max_degree: usize,
) -> Result<Vec<AlgNum>> {
    let n = field.degree();
    let gk: Poly<AlgNum> = g.embed();
    let t = field.gen();
    for k in 0..20i64 {
        let kt = t.clone() * &AlgNum::from_int(k);
        let shifted = gk.shift(&(-kt.clone()));
        let norm = poly_norm(field, &shifted);
        if !norm.is_squarefree() {
            continue;
        }
        let mut roots = Vec::new();
        for (h, _) in factor_rational(&norm, max_degree)?.factors {
            if h.degree() != Some(n) {
                continue;
            }
            let lin = h.embed::<AlgNum>().shift(&kt).gcd(&gk);
            if lin.degree() == Some(1) {
                roots.push(-lin.coeff(0));
            }
        }
        return Ok(roots);
    }
    Err(Error::InternalInconsistency("no squarefree norm shift found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn qp(cs: &[i64]) -> Poly<Rational> {
        Poly::from_ints(cs)
    }

    #[test]
    fn gaussian_integers() {
        let k = NumberField::new(&qp(&[1, 0, 1])).unwrap();
        let i = k.gen();
        assert_eq!(i.clone() * &i, AlgNum::from_int(-1));
        assert_eq!(i.root_of_unity_order(), Some(4));
        assert_eq!(AlgNum::from_int(-1).root_of_unity_order(), Some(2));
        assert_eq!(AlgNum::rational(rat(1, 2)).root_of_unity_order(), None);
        let z = i.clone() + &AlgNum::from_int(1);
        assert_eq!(z.norm(), int(2));
        assert_eq!(z.clone() * &z.inv(), AlgNum::one());
    }

    #[test]
    fn rejects_reducible_and_large() {
        assert!(NumberField::new(&qp(&[-1, 0, 1])).is_err());
        assert!(NumberField::new(&qp(&[1, 0, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn golden_ratio_roots() {
        let k = NumberField::new(&qp(&[-5, 0, 1])).unwrap();
        let roots = roots_in_field(&qp(&[-1, -1, 1]), Some(&k), 30).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let v = r.clone() * r - r - &AlgNum::one();
            assert!(v.is_zero());
        }
        // x^2 + 1 has no root in Q(sqrt 5).
        assert!(roots_in_field(&qp(&[1, 0, 1]), Some(&k), 30).unwrap().is_empty());
    }

    #[test]
    fn roots_in_quartic() {
        // Q(zeta_8) contains sqrt 2 and i.
        let k = NumberField::new(&qp(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(roots_in_field(&qp(&[-2, 0, 1]), Some(&k), 30).unwrap().len(), 2);
        assert_eq!(roots_in_field(&qp(&[1, 0, 1]), Some(&k), 30).unwrap().len(), 2);
        assert_eq!(roots_in_field(&qp(&[1, 0, 0, 0, 1]), Some(&k), 30).unwrap().len(), 4);
        assert!(roots_in_field(&qp(&[-3, 0, 1]), Some(&k), 30).unwrap().is_empty());
        assert_eq!(k.gen().root_of_unity_order(), Some(8));
    }
}
