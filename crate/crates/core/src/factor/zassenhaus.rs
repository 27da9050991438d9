//! Factorization of squarefree integer polynomials: modular factorization,
//! linear Hensel lifting, subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{Fp, XorShift, Zp};

/// Integer polynomial, lowest degree first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

const CANDIDATE_PRIMES: usize = 5;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> ZPoly {
    let mut c = content(a);
    if a.last().map_or(false, |l| l.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Symmetric residues modulo `m`.
fn sym_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Exact division of integer polynomials; `None` if not exact.
fn zdiv(a: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    if a.len() < d.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let lc = d.last().unwrap();
    let dd = d.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, x) in d.iter().enumerate() {
            r[i + j] -= &c * x;
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

/// Lifts `f = g h mod p` (g monic) to `f = g h mod p^k`.
fn hensel_pair(z: Zp, f: &[BigInt], g: &Fp, h: &Fp, k: u32) -> (ZPoly, ZPoly) {
    let p = BigInt::from(z.p);
    let (_, _, t) = z.ext_gcd(g, h);
    let mut gz = from_fp(g);
    let mut hz = from_fp(h);
    let mut pj = p.clone();
    for _ in 1..k {
        let gh = zmul(&gz, &hz);
        let diff: ZPoly = (0..f.len().max(gh.len()))
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()
            })
            .collect();
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, z.p);
        if !e.is_empty() {
            let te = z.pmul(&t, &e);
            let (_, dg) = z.divrem(&te, g);
            let num = z.psub(&e, &z.pmul(h, &dg));
            let dh = z.divrem(&num, g).0;
            gz = add_scaled(&gz, &dg, &pj);
            hz = add_scaled(&hz, &dh, &pj);
        }
        pj *= &p;
    }
    (sym_mod(&gz, &pj), sym_mod(&hz, &pj))
}

fn add_scaled(a: &[BigInt], d: &[u64], m: &BigInt) -> ZPoly {
    let n = a.len().max(d.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + m * BigInt::from(*d.get(i).unwrap_or(&0)))
            .collect(),
    )
}

/// Lifts all modular factors of `f` (lc of `f` absorbed into the last one).
fn hensel_multi(z: Zp, f: &[BigInt], factors: &[Fp], k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let mid = factors.len() / 2;
    let g = factors[..mid].iter().fold(vec![1u64], |acc, q| z.pmul(&acc, q));
    let hmod = z.divrem(&to_fp(f, z.p), &g).0;
    let (gl, hl) = hensel_pair(z, f, &g, &hmod, k);
    let mut out = hensel_multi(z, &gl, &factors[..mid], k);
    out.extend(hensel_multi(z, &hl, &factors[mid..], k));
    out
}

/// Integer factors of a squarefree primitive polynomial with positive
/// leading coefficient and degree at least 2. The factors are primitive
/// with positive leading coefficients.
pub(crate) fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    let lc = f.last().unwrap().clone();
    let mut best: Option<(Zp, usize)> = None;
    let mut tried = 0;
    for p in odd_primes() {
        if tried == CANDIDATE_PRIMES {
            break;
        }
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let z = Zp::new(p);
        let fp = z.monic(&to_fp(f, p));
        if !z.is_squarefree(&fp) {
            continue;
        }
        tried += 1;
        let c = z.count_factors(&fp);
        if best.map_or(true, |(_, b)| c < b) {
            best = Some((z, c));
        }
        if c == 1 {
            break;
        }
    }
    let (z, count) = best.expect("some prime keeps f squarefree");
    if count == 1 {
        return vec![f.to_vec()];
    }
    let mut rng = XorShift::new(0x9E37_79B9_7F4A_7C15 ^ z.p);
    let modular = z.factor(&z.monic(&to_fp(f, z.p)), &mut rng);

    // Lift until p^k exceeds twice the factor coefficient bound times lc.
    let norm: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + BigInt::one();
    let bound = (BigInt::one() << (n + 1)) * norm * &lc;
    let p = BigInt::from(z.p);
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }

    // The leading coefficient rides on the last factor while lifting.
    let lifted = hensel_multi(z, f, &modular, k);
    let mut local: Vec<ZPoly> = lifted
        .iter()
        .map(|g| {
            let inv = z_inv_mod(g.last().unwrap(), &pk);
            sym_mod(&g.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pk)
        })
        .collect();

    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut s = 1;
    while 2 * s <= local.len() {
        let mut found = false;
        for subset in Subsets::new(local.len(), s) {
            let lc_rest = rest.last().unwrap().clone();
            let mut g = vec![lc_rest.clone()];
            for &i in &subset {
                g = sym_mod(&zmul(&g, &local[i]), &pk);
            }
            let g = primitive(&g);
            if let Some(q) = zdiv(&rest, &g) {
                out.push(g);
                rest = q;
                let mut i = 0;
                local.retain(|_| {
                    i += 1;
                    !subset.contains(&(i - 1))
                });
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    out.push(primitive(&rest));
    out
}

/// Integer roots of a squarefree integer polynomial: roots modulo a prime,
/// lifted past the Cauchy bound and checked exactly.
pub(crate) fn integer_roots_squarefree(f: &[BigInt]) -> Vec<BigInt> {
    let lc = f.last().unwrap().clone();
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let z = odd_primes()
        .map(Zp::new)
        .find(|z| {
            !(&lc % BigInt::from(z.p)).is_zero() && z.is_squarefree(&z.monic(&to_fp(f, z.p)))
        })
        .unwrap();
    let fp = z.monic(&to_fp(f, z.p));
    let mut rng = XorShift::new(0x2545_F491 ^ z.p);
    let (lin, _) = z.ddf(&fp).into_iter().find(|(_, d)| *d == 1).unwrap_or((vec![1], 1));
    if lin.len() <= 1 {
        return out;
    }
    let roots: Vec<u64> = z.edf(&lin, 1, &mut rng).iter().map(|g| (z.p - g[0]) % z.p).collect();

    let bound = f.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let p = BigInt::from(z.p);
    let mut pk = p.clone();
    let mut k = 1;
    while pk <= &bound * 2 {
        pk *= &p;
        k += 1;
    }
    let df: ZPoly = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    for r0 in roots {
        let inv = BigInt::from(z.inv(z_eval_mod(&df, &BigInt::from(r0), &p).to_u64().unwrap()));
        let mut r = BigInt::from(r0);
        let mut pj = p.clone();
        for _ in 1..k {
            pj *= &p;
            let v = z_eval(f, &r);
            r = (&r - v * &inv).mod_floor(&pj);
        }
        let half = &pk >> 1;
        if r > half {
            r -= &pk;
        }
        if z_eval(f, &r).is_zero() {
            out.push(r);
        }
    }
    out.sort();
    out
}

fn z_eval(f: &[BigInt], at: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
}

fn z_eval_mod(f: &[BigInt], at: &BigInt, m: &BigInt) -> BigInt {
    z_eval(f, at).mod_floor(m)
}

fn z_inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// k-element subsets of 0..n in lexicographic order.
struct Subsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { n, cur: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let out = cur.clone();
        let k = cur.len();
        let mut next = cur;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(cs: &[i64]) -> ZPoly {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn product(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(zp(&[1]), |acc, g| zmul(&acc, g))
    }

    #[test]
    fn splits_cyclotomic_product() {
        let f = zp(&[-1, 0, 0, 0, 1]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 splits mod every prime but is irreducible over Z.
        let f = zp(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn non_monic_leading_coefficient() {
        // (2x + 1)(3x - 1)(x^2 + x + 1)
        let f = product(&[zp(&[1, 2]), zp(&[-1, 3]), zp(&[1, 1, 1])]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn integer_roots_lift() {
        // (x - 12345)(x + 7)(2x - 1)(x^2 + 1)
        let f = product(&[zp(&[-12345, 1]), zp(&[7, 1]), zp(&[-1, 2]), zp(&[1, 0, 1])]);
        assert_eq!(integer_roots_squarefree(&f), vec![BigInt::from(-7), BigInt::from(12345)]);
        assert!(integer_roots_squarefree(&zp(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn subsets_enumerate() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }
}
