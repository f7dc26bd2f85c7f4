//! Index, Fitting decomposition, core-nilpotent split and Jordan chains.
//!
//! For a square `A` with index `m`, `kⁿ = W ⊕ U` with `W = Im A^m` and
//! `U = Ker A^m`. [`FittingData`] records a basis `P = [W | U]` in which
//!
//! ```text
//! P⁻¹ A P = J = diag(C, N)
//! ```
//!
//! with `C` invertible and `N` nilpotent in Jordan form. `C` is whatever
//! matrix `A|_W` has in the reduced column-space basis of `A^m`; no
//! eigenvalues are computed, so everything stays inside the ground field.
//!
//! Each Jordan chain occupies consecutive columns `v, Av, ..., A^{l-1}v` of
//! the `U` block, so `N` carries its ones on the subdiagonal: `N e_k = e_{k+1}`
//! inside a chain and the last vector of each chain is sent to zero.

use crate::error::{Error, Result};
use crate::linalg::{self, column_space_reduced, inverse, nullspace_basis, rank, Matrix};

/// Index of `A` under both conventions plus the ranks of its powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexInfo {
    /// Smallest `m ≥ 0` with `rank A^m = rank A^{m+1}`; 0 for invertible `A`.
    pub index: usize,
    /// `max(index, 1)`, the convention where the index is a positive integer.
    pub matrix_convention: usize,
    /// `rank A^0, rank A^1, ..., rank A^{index+1}`.
    pub rank_profile: Vec<usize>,
}

pub fn index_info(a: &Matrix) -> Result<IndexInfo> {
    a.require_square("matrix_index")?;
    let n = a.rows();
    let mut profile = vec![n];
    let mut power = Matrix::identity(a.field(), n);
    loop {
        power = &power * a;
        let r = rank(&power);
        let prev = *profile.last().expect("nonempty");
        profile.push(r);
        if r == prev {
            break;
        }
    }
    let index = profile.len() - 2;
    Ok(IndexInfo {
        index,
        matrix_convention: index.max(1),
        rank_profile: profile,
    })
}

/// Endomorphism-convention index (see [`IndexInfo::index`]).
pub fn matrix_index(a: &Matrix) -> Result<usize> {
    Ok(index_info(a)?.index)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChain {
    pub generator: Matrix,
    /// `[v, Av, ..., A^{l-1}v]`
    pub vectors: Vec<Matrix>,
}

impl JordanChain {
    pub fn length(&self) -> usize {
        self.vectors.len()
    }

    pub fn tail(&self) -> &Matrix {
        self.vectors.last().expect("chains are nonempty")
    }
}

/// Jordan chains of `A` on `Ker A^m`, longest first.
///
/// Works down from level `m`. At level `i` the span of `Ker A^{i-1}` and of
/// the images `A^{L-i} g` of the longer chains already found is completed to
/// `Ker A^i` by taking nullspace basis vectors of `A^i` in order; each one
/// that raises the rank starts a chain of length `i`.
pub fn jordan_chains_on_kernel(a: &Matrix, m: usize) -> Result<Vec<JordanChain>> {
    a.require_square("jordan_chains")?;
    let field = a.field();
    let n = a.rows();
    let kernels: Vec<Vec<Matrix>> = (0..=m)
        .map(|i| Ok(nullspace_basis(&a.pow(i as u32)?)))
        .collect::<Result<_>>()?;

    let mut generators: Vec<(Matrix, usize)> = Vec::new();
    for level in (1..=m).rev() {
        let mut span: Vec<Matrix> = kernels[level - 1].clone();
        for (g, len) in &generators {
            span.push(&a.pow((len - level) as u32)? * g);
        }
        let mut current = Matrix::from_columns(field, n, &span);
        let mut current_rank = rank(&current);
        for candidate in &kernels[level] {
            let extended = current.hstack(candidate)?;
            let r = rank(&extended);
            if r > current_rank {
                generators.push((candidate.clone(), level));
                current = extended;
                current_rank = r;
            }
        }
    }

    Ok(generators
        .into_iter()
        .map(|(g, len)| {
            let mut vectors = Vec::with_capacity(len);
            let mut v = g.clone();
            for _ in 0..len {
                let next = a * &v;
                vectors.push(v);
                v = next;
            }
            JordanChain {
                generator: g,
                vectors,
            }
        })
        .collect())
}

/// Jordan chains of a nilpotent matrix; they partition a basis of `kⁿ`.
pub fn nilpotent_jordan_chains(n_mat: &Matrix) -> Result<Vec<JordanChain>> {
    n_mat.require_square("nilpotent_jordan_chains")?;
    let n = n_mat.rows();
    if !n_mat.pow(n as u32)?.is_zero() {
        return Err(Error::NotNilpotent);
    }
    jordan_chains_on_kernel(n_mat, matrix_index(n_mat)?)
}

/// `A = A1 + A2` with `A1` acting as `A` on `W` and `A2` as `A` on `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreNilpotent {
    pub a1: Matrix,
    pub a2: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingData {
    pub m: usize,
    /// `n x r`, columns span `Im A^m`.
    pub basis_w: Matrix,
    /// `n x (n-r)`, the chain vectors in order; columns span `Ker A^m`.
    pub basis_u: Matrix,
    /// `r x r`, the matrix of `A|_W` in `basis_w`.
    pub c: Matrix,
    pub chains: Vec<JordanChain>,
    pub p: Matrix,
    pub p_inv: Matrix,
    /// `P⁻¹ A P`
    pub j: Matrix,
}

impl FittingData {
    pub fn n(&self) -> usize {
        self.p.rows()
    }

    /// `dim W = rank A^m`.
    pub fn r(&self) -> usize {
        self.basis_w.cols()
    }

    pub fn chain_lengths(&self) -> Vec<usize> {
        self.chains.iter().map(JordanChain::length).collect()
    }

    /// 0-based offset of each chain inside the `U` block.
    pub fn chain_starts(&self) -> Vec<usize> {
        self.chains
            .iter()
            .scan(0, |acc, c| {
                let start = *acc;
                *acc += c.length();
                Some(start)
            })
            .collect()
    }

    /// The nilpotent block `N` of `J`.
    pub fn nilpotent_block(&self) -> Matrix {
        let (r, n) = (self.r(), self.n());
        self.j.block(r, n, r, n)
    }

    pub fn core_nilpotent(&self) -> CoreNilpotent {
        let field = self.p.field();
        let (r, n) = (self.r(), self.n());
        let zero_u = Matrix::zeros(field, n - r, n - r);
        let zero_w = Matrix::zeros(field, r, r);
        let conj = |m: &Matrix| &(&self.p * m) * &self.p_inv;
        CoreNilpotent {
            a1: conj(&Matrix::block_diagonal(&self.c, &zero_u)),
            a2: conj(&Matrix::block_diagonal(&zero_w, &self.nilpotent_block())),
        }
    }

    /// Builds the decomposition from a caller-supplied basis `P`.
    ///
    /// `P⁻¹AP` must be `diag(C, N)` with `C` invertible of size `rank A^m`
    /// and `N` in subdiagonal chain form: each entry of `N` is zero except
    /// `N[k+1][k] = 1` inside a chain.
    pub fn with_basis(a: &Matrix, p: &Matrix) -> Result<FittingData> {
        a.require_square("with_basis")?;
        if p.shape() != a.shape() {
            return Err(Error::ShapeMismatch {
                op: "with_basis",
                left: a.shape(),
                right: p.shape(),
            });
        }
        let p_inv = inverse(p).map_err(|_| Error::InvalidSimilarity("P is singular".into()))?;
        let info = index_info(a)?;
        let n = a.rows();
        let r = info.rank_profile[info.index];
        let j = &(&p_inv * a) * p;
        let c = j.block(0, r, 0, r);
        let nil = j.block(r, n, r, n);
        if !j.block(0, r, r, n).is_zero() || !j.block(r, n, 0, r).is_zero() {
            return Err(Error::InvalidSimilarity(format!(
                "P^-1 A P is not block diagonal with a {r}x{r} leading block"
            )));
        }
        if rank(&c) != r {
            return Err(Error::InvalidSimilarity("leading block is singular".into()));
        }
        let lengths = read_chain_form(&nil).ok_or_else(|| {
            Error::InvalidSimilarity(
                "trailing block is not in subdiagonal Jordan chain form".into(),
            )
        })?;
        let mut chains = Vec::with_capacity(lengths.len());
        let mut k = r;
        for len in lengths {
            let vectors: Vec<Matrix> = (k..k + len).map(|c| p.column(c)).collect();
            chains.push(JordanChain {
                generator: vectors[0].clone(),
                vectors,
            });
            k += len;
        }
        Ok(FittingData {
            m: info.index,
            basis_w: p.block(0, n, 0, r),
            basis_u: p.block(0, n, r, n),
            c,
            chains,
            p: p.clone(),
            p_inv,
            j,
        })
    }
}

/// Chain lengths of a nilpotent matrix already in subdiagonal Jordan form.
fn read_chain_form(nil: &Matrix) -> Option<Vec<usize>> {
    let d = nil.rows();
    for i in 0..d {
        for j in 0..d {
            let e = &nil[(i, j)];
            let ok = if i == j + 1 {
                e.is_zero() || e.is_one()
            } else {
                e.is_zero()
            };
            if !ok {
                return None;
            }
        }
    }
    let mut lengths = Vec::new();
    let mut len = 0;
    for k in 0..d {
        len += 1;
        if k + 1 == d || nil[(k + 1, k)].is_zero() {
            lengths.push(len);
            len = 0;
        }
    }
    Some(lengths)
}

pub fn fitting_decomposition(a: &Matrix) -> Result<FittingData> {
    let info = index_info(a)?;
    let m = info.index;
    let field = a.field();
    let n = a.rows();
    let basis_w = column_space_reduced(&a.pow(m as u32)?);
    let r = basis_w.cols();
    let chains = jordan_chains_on_kernel(a, m)?;
    let u_cols: Vec<Matrix> = chains.iter().flat_map(|c| c.vectors.clone()).collect();
    let basis_u = Matrix::from_columns(field, n, &u_cols);
    let c = linalg::solve(&basis_w, &(a * &basis_w))?
        .ok_or_else(|| Error::Invariant("Im A^m is not A-invariant".into()))?;
    let p = basis_w.hstack(&basis_u)?;
    let p_inv = inverse(&p).map_err(|_| Error::Invariant("[W | U] is singular".into()))?;
    let j = &(&p_inv * a) * &p;
    let data = FittingData {
        m,
        basis_w,
        basis_u,
        c,
        chains,
        p,
        p_inv,
        j,
    };
    let expected = Matrix::block_diagonal(&data.c, &chain_form(field, &data.chain_lengths()));
    if data.j != expected {
        return Err(Error::Invariant("P^-1 A P is not diag(C, N)".into()));
    }
    if rank(&data.c) != r {
        return Err(Error::Invariant("C is singular".into()));
    }
    Ok(data)
}

/// Nilpotent Jordan matrix with the given chain lengths, ones on the subdiagonal.
pub fn chain_form(field: crate::field::FieldTag, lengths: &[usize]) -> Matrix {
    let d: usize = lengths.iter().sum();
    let mut nil = Matrix::zeros(field, d, d);
    let mut k = 0;
    for &len in lengths {
        for t in 0..len.saturating_sub(1) {
            nil[(k + t + 1, k + t)] = field.one();
        }
        k += len;
    }
    nil
}

pub fn core_nilpotent(a: &Matrix) -> Result<CoreNilpotent> {
    Ok(fitting_decomposition(a)?.core_nilpotent())
}

/// Bases of `W = Im A^m` and `U = Ker A^m` without building Jordan chains.
pub fn fitting_spaces(a: &Matrix) -> Result<(Matrix, Matrix)> {
    let m = matrix_index(a)?;
    let power = a.pow(m as u32)?;
    Ok((
        column_space_reduced(&power),
        linalg::nullspace_matrix(&power),
    ))
}
