#![allow(dead_code)]

pub mod gf2;
pub mod oracle;

use geninv::decomp::chain_form;
use geninv::linalg::{inverse, nullspace_basis, rank};
use geninv::rng::Lcg;
use geninv::{FieldTag, Matrix, Scalar};

pub fn test_fields() -> Vec<FieldTag> {
    vec![
        FieldTag::Rationals,
        FieldTag::GaussianRationals,
        FieldTag::prime(2).unwrap(),
        FieldTag::prime(3).unwrap(),
        FieldTag::prime(5).unwrap(),
    ]
}

pub fn field_label(field: FieldTag) -> String {
    match field.modulus() {
        Some(p) => format!("GF({p})"),
        None if field == FieldTag::Rationals => "Q".into(),
        None => "Q(i)".into(),
    }
}

pub fn random_matrix(field: FieldTag, rows: usize, cols: usize, rng: &mut Lcg) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| rng.scalar(field))
}

pub fn random_vector(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    random_matrix(field, n, 1, rng)
}

pub fn nonzero_scalar(field: FieldTag, rng: &mut Lcg) -> Scalar {
    loop {
        let s = rng.scalar(field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// `0`, `±1`, or over Q(i) also `±i`.
pub fn unit_or_zero(field: FieldTag, rng: &mut Lcg) -> Scalar {
    let k = rng.below(if field == FieldTag::GaussianRationals {
        5
    } else {
        3
    });
    match k {
        0 => field.zero(),
        1 => field.one(),
        2 => -field.one(),
        3 => field.imaginary_unit().unwrap(),
        _ => -field.imaginary_unit().unwrap(),
    }
}

fn unit_triangular_pair(
    field: FieldTag,
    n: usize,
    rng: &mut Lcg,
    entry: fn(FieldTag, &mut Lcg) -> Scalar,
) -> (Matrix, Matrix) {
    let mut l = Matrix::identity(field, n);
    let mut u = Matrix::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = entry(field, rng);
            u[(j, i)] = entry(field, rng);
        }
    }
    (l, u)
}

fn random_permutation(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.below(i as u32 + 1) as usize);
    }
    Matrix::from_fn(field, n, n, |i, j| {
        if perm[i] == j {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// `L·U·P` with unit triangular `L`, `U` whose entries come from
/// [`unit_or_zero`], and a permutation `P`. Entries of it and its inverse stay
/// small, which keeps exact arithmetic on conjugates cheap.
pub fn random_unimodular(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    let (l, u) = unit_triangular_pair(field, n, rng, unit_or_zero);
    &(&l * &u) * &random_permutation(field, n, rng)
}

/// `L·D·U·P` with full-range triangular entries and a nonzero diagonal `D`.
pub fn random_invertible(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    let (l, u) = unit_triangular_pair(field, n, rng, |f, r| r.scalar(f));
    let d: Vec<Scalar> = (0..n).map(|_| nonzero_scalar(field, rng)).collect();
    &(&(&l * &Matrix::diagonal(field, &d)) * &u) * &random_permutation(field, n, rng)
}

/// Random partition of `n` into Jordan block sizes.
pub fn random_partition(n: usize, rng: &mut Lcg) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = 1 + rng.below(left as u32) as usize;
        parts.push(k);
        left -= k;
    }
    parts
}

/// `T·diag(C, N)·T⁻¹` with a random invertible core of random size and a
/// nilpotent part of random Jordan type.
pub fn structured_matrix(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    let r = rng.below(n as u32 + 1) as usize;
    let core = random_invertible(field, r, rng);
    let nil = chain_form(field, &random_partition(n - r, rng));
    let t = random_unimodular(field, n, rng);
    let t_inv = inverse(&t).unwrap();
    &(&t * &Matrix::block_diagonal(&core, &nil)) * &t_inv
}

/// Product of random `n×k` and `k×n` factors, so rank at most `k`.
pub fn low_rank_matrix(field: FieldTag, n: usize, rng: &mut Lcg) -> Matrix {
    let k = rng.below(n as u32 + 1) as usize;
    let left = random_matrix(field, n, k, rng);
    let right = random_matrix(field, k, n, rng);
    if k == 0 {
        Matrix::zeros(field, n, n)
    } else {
        &left * &right
    }
}

/// Cycles through structured, low-rank and unstructured matrices.
pub fn mixed_matrix(field: FieldTag, n: usize, rng: &mut Lcg, i: usize) -> Matrix {
    match i % 3 {
        0 => structured_matrix(field, n, rng),
        1 => low_rank_matrix(field, n, rng),
        _ => random_matrix(field, n, n, rng),
    }
}

pub fn size_in(lo: usize, hi: usize, rng: &mut Lcg) -> usize {
    lo + rng.below((hi - lo + 1) as u32) as usize
}

/// `A^n` for an `n×n` matrix; its image and kernel are `W_A` and `U_A`
/// regardless of the actual index.
pub fn stable_power(a: &Matrix) -> Matrix {
    a.pow(a.rows() as u32).unwrap()
}

pub fn hcat(parts: &[&Matrix]) -> Matrix {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        out = out.hstack(p).unwrap();
    }
    out
}

/// Dimension of the column span of `cols` (an `n×k` matrix; `k` may be 0).
pub fn span_dim(cols: &Matrix) -> usize {
    if cols.cols() == 0 {
        0
    } else {
        rank(cols)
    }
}

pub fn kernel_matrix(a: &Matrix) -> Matrix {
    let basis = nullspace_basis(a);
    Matrix::from_columns(a.field(), a.cols(), &basis)
}

pub fn random_combination(field: FieldTag, basis: &[Matrix], n: usize, rng: &mut Lcg) -> Matrix {
    let mut v = Matrix::zeros(field, n, 1);
    for b in basis {
        v = &v + &b.scale(&rng.scalar(field));
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    Minus,
    GD1,
    OneGD,
}

/// `B = A + Σ u_t·v_tᵀ` with the `u_t` independent modulo `Im A` and the
/// `v_t` independent modulo the row space of `A`, so `rank B = rank A + k`.
///
/// For [`Extension::GD1`] each `v_t` annihilates `W_A`; for
/// [`Extension::OneGD`] each `u_t` lies in `U_A`. The number of rank-one
/// terms is drawn in `0..=max` and silently capped by what is available.
pub fn extend(a: &Matrix, mode: Extension, max: usize, rng: &mut Lcg) -> Matrix {
    let field = a.field();
    let n = a.rows();
    let target = rng.below(max as u32 + 1) as usize;
    let am = stable_power(a);
    let u_basis = nullspace_basis(&am);
    let v_basis = nullspace_basis(&am.transpose());
    let mut us = a.clone();
    let mut vs = a.transpose();
    let base = rank(a);
    let mut b = a.clone();
    let mut added = 0;
    for _ in 0..4 * n {
        if added == target {
            break;
        }
        let u = match mode {
            Extension::OneGD => random_combination(field, &u_basis, n, rng),
            _ => random_vector(field, n, rng),
        };
        let v = match mode {
            Extension::GD1 => random_combination(field, &v_basis, n, rng),
            _ => random_vector(field, n, rng),
        };
        let us_next = us.hstack(&u).unwrap();
        let vs_next = vs.hstack(&v).unwrap();
        if rank(&us_next) == base + added + 1 && rank(&vs_next) == base + added + 1 {
            b = &b + &(&u * &v.transpose());
            us = us_next;
            vs = vs_next;
            added += 1;
        }
    }
    b
}
