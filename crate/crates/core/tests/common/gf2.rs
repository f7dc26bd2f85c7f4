//! Bit-packed GF(2) matrices of size at most 3 for exhaustive searches.
//!
//! A matrix is a `u16` whose bit `i*n + j` is entry `(i, j)`; a vector is a
//! `u8` whose bit `i` is entry `i`.

use geninv::{FieldTag, Matrix};

pub fn field() -> FieldTag {
    FieldTag::prime(2).unwrap()
}

pub fn entry(n: usize, m: u16, i: usize, j: usize) -> bool {
    m >> (i * n + j) & 1 == 1
}

pub fn mul(n: usize, a: u16, b: u16) -> u16 {
    let mut out = 0u16;
    for i in 0..n {
        for j in 0..n {
            let mut bit = false;
            for k in 0..n {
                bit ^= entry(n, a, i, k) && entry(n, b, k, j);
            }
            if bit {
                out |= 1 << (i * n + j);
            }
        }
    }
    out
}

pub fn apply(n: usize, a: u16, v: u8) -> u8 {
    let mut out = 0u8;
    for i in 0..n {
        let mut bit = false;
        for k in 0..n {
            bit ^= entry(n, a, i, k) && v >> k & 1 == 1;
        }
        if bit {
            out |= 1 << i;
        }
    }
    out
}

pub fn identity(n: usize) -> u16 {
    (0..n).fold(0, |m, i| m | 1 << (i * n + i))
}

pub fn power(n: usize, a: u16, e: usize) -> u16 {
    (0..e).fold(identity(n), |acc, _| mul(n, acc, a))
}

/// Membership table of the image of `a`, indexed by vector.
pub fn image(n: usize, a: u16) -> Vec<bool> {
    let mut set = vec![false; 1 << n];
    for v in 0..1u8 << n {
        set[apply(n, a, v) as usize] = true;
    }
    set
}

pub fn kernel(n: usize, a: u16) -> Vec<bool> {
    (0..1u8 << n).map(|v| apply(n, a, v) == 0).collect()
}

pub fn preserves(n: usize, x: u16, set: &[bool]) -> bool {
    (0..1u8 << n).all(|v| !set[v as usize] || set[apply(n, x, v) as usize])
}

pub fn to_matrix(n: usize, m: u16) -> Matrix {
    let f = field();
    Matrix::from_fn(f, n, n, |i, j| f.from_i64(entry(n, m, i, j) as i64))
}

pub fn from_matrix(m: &Matrix) -> u16 {
    let n = m.rows();
    let mut out = 0u16;
    for i in 0..n {
        for j in 0..n {
            if !m[(i, j)].is_zero() {
                out |= 1 << (i * n + j);
            }
        }
    }
    out
}

pub fn all(n: usize) -> impl Iterator<Item = u16> {
    0..(1u32 << (n * n)) as u16
}
