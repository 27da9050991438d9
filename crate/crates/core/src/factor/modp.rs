//! Polynomials over F_p for word-sized odd primes, and Cantor-Zassenhaus.

use num_bigint::BigUint;
use num_traits::One;

/// Coefficients lowest degree first, no trailing zeros.
pub(crate) type Fp = Vec<u64>;

/// xorshift64*, enough for choosing splitting elements.
pub(crate) struct XorShift(u64);

impl XorShift {
    pub(crate) fn new(seed: u64) -> Self {
        XorShift(seed | 1)
    }

    pub(crate) fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Zp {
    pub p: u64,
}

fn trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Zp {
    pub(crate) fn new(p: u64) -> Self {
        Zp { p }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub(crate) fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub(crate) fn psub(&self, a: &[u64], b: &[u64]) -> Fp {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub(crate) fn pmul(&self, a: &[u64], b: &[u64]) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(out)
    }

    pub(crate) fn scale(&self, a: &[u64], c: u64) -> Fp {
        trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub(crate) fn divrem(&self, a: &[u64], d: &[u64]) -> (Fp, Fp) {
        assert!(!d.is_empty(), "division by zero polynomial mod p");
        if a.len() < d.len() {
            return (Vec::new(), a.to_vec());
        }
        let dd = d.len() - 1;
        let inv = self.inv(*d.last().unwrap());
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - dd];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + dd], inv);
            if c == 0 {
                continue;
            }
            for (j, &x) in d.iter().enumerate() {
                r[i + j] = self.sub(r[i + j], self.mul(c, x));
            }
            q[i] = c;
        }
        r.truncate(dd);
        (trim(q), trim(r))
    }

    pub(crate) fn rem(&self, a: &[u64], d: &[u64]) -> Fp {
        self.divrem(a, d).1
    }

    pub(crate) fn monic(&self, a: &[u64]) -> Fp {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub(crate) fn gcd(&self, a: &[u64], b: &[u64]) -> Fp {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub(crate) fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().unwrap());
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub(crate) fn derivative(&self, a: &[u64]) -> Fp {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> Fp {
        let mut acc = vec![1u64];
        let base = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.pmul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.pmul(&acc, &base), m);
            }
        }
        acc
    }

    pub(crate) fn is_squarefree(&self, f: &[u64]) -> bool {
        self.gcd(f, &self.derivative(f)).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub(crate) fn ddf(&self, f: &[u64]) -> Vec<(Fp, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.clone(), f.len() - 1));
                break;
            }
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.psub(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a product of distinct monic irreducibles of degree `d`.
    pub(crate) fn edf(&self, f: &[u64], d: usize, rng: &mut XorShift) -> Vec<Fp> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: Fp = trim((0..n).map(|_| rng.next() % self.p).collect());
            if a.len() <= 1 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if g.len() > 1 {
                g
            } else {
                let b = self.powmod(&a, &e, f);
                self.gcd(&self.psub(&b, &[1]), f)
            };
            if split.len() > 1 && split.len() < f.len() {
                let rest = self.divrem(f, &split).0;
                let mut out = self.edf(&split, d, rng);
                out.extend(self.edf(&rest, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub(crate) fn factor(&self, f: &[u64], rng: &mut XorShift) -> Vec<Fp> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }

    /// Number of irreducible factors, without splitting.
    pub(crate) fn count_factors(&self, f: &[u64]) -> usize {
        self.ddf(f).iter().map(|(g, d)| (g.len() - 1) / d).sum()
    }
}
