//! Dense exact matrices and the elimination-based solvers built on them.
//!
//! Pivoting is deterministic: the first nonzero entry in column order is
//! used, so every result is reproducible bit for bit.

mod affine;
mod matrix;

pub use affine::{solve_affine_matrix_system, AffineMatrixSpace, LinearConstraint};
pub use matrix::Matrix;

use crate::error::{Error, Result};

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].inv().expect("pivot is nonzero");
        // Kronecker-built systems are sparse; skip zero pivot-row entries.
        let support: Vec<usize> = (c..cols).filter(|&j| !a[(r, j)].is_zero()).collect();
        for &j in &support {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for &j in &support {
                let delta = &f * &a[(r, j)];
                a[(i, j)] = &a[(i, j)] - delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: pivots.len(),
        pivots,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Basis of `{v : Mv = 0}` read off the RREF, one vector per free column.
pub fn nullspace_basis(m: &Matrix) -> Vec<Matrix> {
    let field = m.field();
    let cols = m.cols();
    let Rref { matrix, pivots, .. } = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = Matrix::zeros(field, cols, 1);
            v[(f, 0)] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[(p, 0)] = -&matrix[(row, f)];
            }
            v
        })
        .collect()
}

/// Nullspace basis packed as the columns of one `cols x k` matrix.
pub fn nullspace_matrix(m: &Matrix) -> Matrix {
    Matrix::from_columns(m.field(), m.cols(), &nullspace_basis(m))
}

/// The pivot columns of `m` itself, which span its column space.
pub fn column_space_basis(m: &Matrix) -> Matrix {
    let pivots = rref(m).pivots;
    m.select_columns(&pivots)
}

/// The reduced basis of the column space: transposed nonzero rows of
/// `rref(Mᵀ)`. Independent of how the columns of `m` are scaled or ordered.
pub fn column_space_reduced(m: &Matrix) -> Matrix {
    let reduced = rref(&m.transpose());
    reduced
        .matrix
        .block(0, reduced.rank, 0, m.rows())
        .transpose()
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    m.require_square("inverse")?;
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(m.field(), n))?;
    let reduced = rref(&aug);
    if reduced.pivots.iter().take(n).copied().ne(0..n) || reduced.rank < n {
        return Err(Error::Singular);
    }
    Ok(reduced.matrix.block(0, n, n, 2 * n))
}

/// One solution of `M x = b` (free variables set to zero), or `None`.
pub fn solve(m: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if m.rows() != b.rows() {
        return Err(Error::ShapeMismatch {
            op: "solve",
            left: m.shape(),
            right: b.shape(),
        });
    }
    let cols = m.cols();
    let reduced = rref(&m.hstack(b)?);
    if reduced.pivots.iter().any(|&p| p >= cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(m.field(), cols, b.cols());
    for (row, &p) in reduced.pivots.iter().enumerate() {
        for k in 0..b.cols() {
            x[(p, k)] = reduced.matrix[(row, cols + k)].clone();
        }
    }
    Ok(Some(x))
}

/// Whether the columns of `sub` lie in the column space of `span`.
pub fn columns_within(span: &Matrix, sub: &Matrix) -> bool {
    rank(&span.hstack(sub).expect("equal heights")) == rank(span)
}

/// Whether two matrices with the same number of rows have the same column space.
pub fn same_column_space(a: &Matrix, b: &Matrix) -> bool {
    columns_within(a, b) && columns_within(b, a)
}
