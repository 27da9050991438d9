//! Dense Gaussian elimination over an exact field.

use crate::scalar::Field;

pub type Matrix<K> = Vec<Vec<K>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<K: Field>(m: &mut Matrix<K>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for v in m[r].iter_mut().skip(c) {
            *v = v.clone() * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let t = f.clone() * &m[r][j];
                m[i][j] = m[i][j].clone() - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{ v : m v = 0 }`.
pub fn nullspace<K: Field>(m: &Matrix<K>, cols: usize) -> Vec<Vec<K>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Affine solution set of `m v = rhs`: a particular solution and a basis of
/// the homogeneous solutions, or `None` when inconsistent.
pub fn solve_affine<K: Field>(
    m: &Matrix<K>,
    rhs: &[K],
    cols: usize,
) -> Option<(Vec<K>, Vec<Vec<K>>)> {
    let mut aug: Matrix<K> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.resize(cols, K::zero());
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut part = vec![K::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        part[pc] = aug[row][cols].clone();
    }
    let hom = nullspace(m, cols);
    Some((part, hom))
}

pub fn det<K: Field>(m: &Matrix<K>) -> K {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = K::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return K::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc = acc * &a[c][c];
        let inv = a[c][c].inv();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * &inv;
            for j in c..n {
                let t = f.clone() * &a[c][j];
                a[i][j] = a[i][j].clone() - &t;
            }
        }
    }
    acc
}
