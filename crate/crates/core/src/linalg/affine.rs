use crate::error::{Error, Result};
use crate::field::{FieldTag, Scalar};

use super::{rref, Matrix};

/// `Σ Lₖ · X · Rₖ = rhs` for an unknown matrix `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: Vec<(Matrix, Matrix)>,
    pub rhs: Matrix,
}

impl LinearConstraint {
    /// `L · X · R = rhs`
    pub fn new(l: Matrix, r: Matrix, rhs: Matrix) -> Self {
        LinearConstraint {
            terms: vec![(l, r)],
            rhs,
        }
    }

    /// `X · B = B · X`, written as `I·X·B - B·X·I = 0`.
    pub fn commutes_with(b: &Matrix) -> Self {
        let field = b.field();
        let n = b.rows();
        let id = Matrix::identity(field, n);
        LinearConstraint {
            terms: vec![(id.clone(), b.clone()), (-b, id)],
            rhs: Matrix::zeros(field, n, n),
        }
    }

    /// Evaluates the left-hand side at `x`.
    pub fn apply(&self, x: &Matrix) -> Result<Matrix> {
        let mut acc = Matrix::zeros(self.rhs.field(), self.rhs.rows(), self.rhs.cols());
        for (l, r) in &self.terms {
            acc = acc.try_add(&l.matmul(x)?.matmul(r)?)?;
        }
        Ok(acc)
    }

    pub fn is_satisfied_by(&self, x: &Matrix) -> bool {
        self.apply(x).is_ok_and(|v| v == self.rhs)
    }
}

/// `{ particular + Σ cᵢ · basisᵢ }`, the exact solution set of a constraint system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMatrixSpace {
    pub shape: (usize, usize),
    pub particular: Matrix,
    pub basis: Vec<Matrix>,
    /// The system this space solves.
    pub constraints: Vec<LinearConstraint>,
}

impl AffineMatrixSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> FieldTag {
        self.particular.field()
    }

    /// The member with the given coefficients on the basis.
    pub fn member(&self, coeffs: &[Scalar]) -> Result<Matrix> {
        if coeffs.len() != self.basis.len() {
            return Err(Error::ShapeMismatch {
                op: "affine member",
                left: (self.basis.len(), 1),
                right: (coeffs.len(), 1),
            });
        }
        let mut x = self.particular.clone();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                x = x.try_add(&b.scale(c))?;
            }
        }
        Ok(x)
    }

    /// Whether `x` satisfies every defining constraint.
    pub fn satisfied_by(&self, x: &Matrix) -> bool {
        x.shape() == self.shape && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    /// Number of members over a finite field, `None` over an infinite one
    /// or when it overflows `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        let q = self.field().modulus()? as u128;
        q.checked_pow(u32::try_from(self.dimension()).ok()?)
    }
}

fn check_constraint(c: &LinearConstraint, shape: (usize, usize)) -> Result<()> {
    let (n, s) = shape;
    let (p, q) = c.rhs.shape();
    for (l, r) in &c.terms {
        if l.shape() != (p, n) {
            return Err(Error::ShapeMismatch {
                op: "constraint left factor",
                left: l.shape(),
                right: (p, n),
            });
        }
        if r.shape() != (s, q) {
            return Err(Error::ShapeMismatch {
                op: "constraint right factor",
                left: r.shape(),
                right: (s, q),
            });
        }
        for f in [l.field(), r.field()] {
            if f != c.rhs.field() {
                return Err(Error::FieldMismatch(c.rhs.field(), f));
            }
        }
    }
    Ok(())
}

/// Solves a stacked system of linear constraints on an `n x s` unknown.
///
/// `X` is vectorized column-major, so `vec(L X R) = (Rᵀ ⊗ L) vec(X)`.
/// Returns `Ok(None)` when the system is infeasible.
pub fn solve_affine_matrix_system(
    field: FieldTag,
    constraints: &[LinearConstraint],
    shape: (usize, usize),
) -> Result<Option<AffineMatrixSpace>> {
    let (n, s) = shape;
    let unknowns = n * s;
    for c in constraints {
        if c.rhs.field() != field {
            return Err(Error::FieldMismatch(field, c.rhs.field()));
        }
        check_constraint(c, shape)?;
    }
    let total_rows: usize = constraints
        .iter()
        .map(|c| c.rhs.rows() * c.rhs.cols())
        .sum();
    let mut system = Matrix::zeros(field, total_rows, unknowns + 1);
    let mut offset = 0;
    for c in constraints {
        let (p, q) = c.rhs.shape();
        for (l, r) in &c.terms {
            for j in 0..s {
                for a in 0..q {
                    let rja = &r[(j, a)];
                    if rja.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        for b in 0..p {
                            let lbi = &l[(b, i)];
                            if lbi.is_zero() {
                                continue;
                            }
                            let (row, col) = (offset + a * p + b, j * n + i);
                            system[(row, col)] = &system[(row, col)] + lbi * rja;
                        }
                    }
                }
            }
        }
        for a in 0..q {
            for b in 0..p {
                system[(offset + a * p + b, unknowns)] = c.rhs[(b, a)].clone();
            }
        }
        offset += p * q;
    }

    let reduced = rref(&system);
    if reduced.pivots.last() == Some(&unknowns) {
        return Ok(None);
    }
    let unvec = |v: &[Scalar]| Matrix::from_fn(field, n, s, |i, j| v[j * n + i].clone());

    let mut particular = vec![field.zero(); unknowns];
    for (row, &p) in reduced.pivots.iter().enumerate() {
        particular[p] = reduced.matrix[(row, unknowns)].clone();
    }
    let free = (0..unknowns).filter(|c| !reduced.pivots.contains(c));
    let basis = free
        .map(|f| {
            let mut v = vec![field.zero(); unknowns];
            v[f] = field.one();
            for (row, &p) in reduced.pivots.iter().enumerate() {
                v[p] = -&reduced.matrix[(row, f)];
            }
            unvec(&v)
        })
        .collect();
    Ok(Some(AffineMatrixSpace {
        shape,
        particular: unvec(&particular),
        basis,
        constraints: constraints.to_vec(),
    }))
}
