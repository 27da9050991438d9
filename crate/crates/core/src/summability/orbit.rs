use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::poly::Poly;
use crate::scalar::{Field, Rational};

/// Canonical member of the shift orbit `{ p(x + k) : k in Z }` of a monic
/// irreducible polynomial: the one whose root mean lies in `[0, 1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct OrbitClass<K> {
    pub representative: Poly<K>,
}

/// Mean of the roots, `-c_{d-1} / (d c_d)`. Only defined when rational.
fn root_mean<K: Field>(p: &Poly<K>) -> Option<Rational> {
    let d = p.degree()?;
    if d == 0 {
        return None;
    }
    let s = -(p.coeff(d - 1) * &p.lc().inv()) * &K::from_int(d as i64).inv();
    s.as_rational()
}

impl<K: Field> OrbitClass<K> {
    /// Returns the class of `p` and the offset `k` with `p(x) = rep(x + k)`.
    pub fn of(p: &Poly<K>) -> (Self, i64) {
        let Some(s) = root_mean(p) else {
            return (OrbitClass { representative: p.monic() }, 0);
        };
        // p(x + f) has root mean s - f.
        let f = s.numer().div_floor(s.denom()).to_i64().expect("shift fits i64");
        (OrbitClass { representative: p.monic().shift_int(f) }, -f)
    }

    pub fn degree(&self) -> usize {
        self.representative.degree().unwrap_or(0)
    }

    pub fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.representative.canonical_cmp(&other.representative)
    }
}

/// `Some(k)` with `q(x) = p(x + k)`, for monic irreducible `p`, `q`.
pub fn shift_equivalent<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Option<i64> {
    let d = p.degree()?;
    if q.degree() != Some(d) || d == 0 {
        return None;
    }
    // q(x) = p(x + k) forces c_{d-1}(q) = c_{d-1}(p) + d k.
    let k = (q.coeff(d - 1) - &p.coeff(d - 1)) * &K::from_int(d as i64).inv();
    let k = k.as_rational()?;
    if !k.is_integer() {
        return None;
    }
    let k = k.to_integer().to_i64()?;
    (p.shift_int(k) == *q).then_some(k)
}
