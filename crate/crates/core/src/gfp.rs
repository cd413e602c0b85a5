//! Dense linear algebra over a prime field `GF(p)`.
//!
//! Vectors are rows; matrices act on the right (`v · M`).

use crate::error::{Error, Result};

pub type Vector = Vec<u32>;
pub type Matrix = Vec<Vec<u32>>;

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    // Fermat
    let mut acc = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn add_vec(a: &[u32], b: &[u32], p: u32) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

pub fn scale_vec(a: &[u32], c: u32, p: u32) -> Vector {
    a.iter().map(|&x| mul_mod(x, c, p)).collect()
}

pub fn vec_mat(v: &[u32], m: &Matrix, p: u32) -> Vector {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![0u32; cols];
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(&m[i]) {
            *o = (*o + mul_mod(c, x, p)) % p;
        }
    }
    out
}

pub fn mat_mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    a.iter().map(|row| vec_mat(row, b, p)).collect()
}

pub fn identity(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn row_reduce(m: &mut Matrix, p: u32) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        m[r] = scale_vec(&m[r], inv, p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x = (*x + p - mul_mod(f, *y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, p: u32) -> usize {
    let mut m = m.clone();
    row_reduce(&mut m, p).len()
}

/// A basis of `{x : x · m = 0}` (the left null space).
pub fn left_null_space(m: &Matrix, p: u32) -> Vec<Vector> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    // transpose: solve mᵀ xᵀ = 0
    let mut t: Matrix = (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect();
    let pivots = row_reduce(&mut t, p);
    let free: Vec<usize> = (0..rows).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u32; rows];
            x[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - t[r][f]) % p;
            }
            x
        })
        .collect()
}

/// Coordinates `c` with `c · basis = v`, if `v` is in the row span.
pub fn solve(basis: &Matrix, v: &[u32], p: u32) -> Option<Vector> {
    let rows = basis.len();
    let cols = v.len();
    // augmented system over the transpose: basisᵀ cᵀ = vᵀ
    let mut aug: Matrix = (0..cols)
        .map(|j| {
            let mut row: Vec<u32> = (0..rows).map(|i| basis[i][j]).collect();
            row.push(v[j] % p);
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug, p);
    if pivots.contains(&rows) {
        return None;
    }
    let mut c = vec![0u32; rows];
    for (r, &pc) in pivots.iter().enumerate() {
        c[pc] = aug[r][rows];
    }
    Some(c)
}

pub fn inverse(m: &Matrix, p: u32) -> Result<Matrix> {
    let d = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(d))
        .map(|(row, id)| row.iter().copied().chain(id).collect())
        .collect();
    let pivots = row_reduce(&mut aug, p);
    if pivots.len() < d || pivots[d - 1] != d - 1 {
        return Err(Error::InvalidAction("matrix is singular".into()));
    }
    Ok(aug.into_iter().map(|row| row[d..].to_vec()).collect())
}

/// Integer code of a vector, digits base `p`, coordinate 0 least
/// significant.
pub fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

pub fn decode(mut code: usize, p: u32, d: usize) -> Vector {
    (0..d)
        .map(|_| {
            let x = (code % p as usize) as u32;
            code /= p as usize;
            x
        })
        .collect()
}
