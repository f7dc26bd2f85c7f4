//! Checks written directly from the defining equations, sharing no code with
//! the library beyond matrix arithmetic and rank.

use geninv::Matrix;

use super::{hcat, kernel_matrix, span_dim, stable_power};

pub fn inner(a: &Matrix, x: &Matrix) -> bool {
    &(a * x) * a == *a
}

pub fn reflexive(a: &Matrix, x: &Matrix) -> bool {
    inner(a, x) && &(x * a) * x == *x
}

pub fn gdrazin(a: &Matrix, x: &Matrix) -> bool {
    let an = stable_power(a);
    inner(a, x) && x * &an == &an * x
}

/// `X·S ⊆ S` for the column span `S` of `basis`.
pub fn invariant(x: &Matrix, basis: &Matrix) -> bool {
    if basis.cols() == 0 {
        return true;
    }
    span_dim(&hcat(&[basis, &(x * basis)])) == span_dim(basis)
}

pub fn gd1(a: &Matrix, x: &Matrix) -> bool {
    reflexive(a, x) && invariant(x, &stable_power(a))
}

pub fn one_gd(a: &Matrix, x: &Matrix) -> bool {
    reflexive(a, x) && invariant(x, &kernel_matrix(&stable_power(a)))
}

pub fn cancels(a: &Matrix, b: &Matrix, x: &Matrix) -> bool {
    a * x == b * x && x * a == x * b
}

/// `rank B = rank A + rank(B - A)`.
pub fn rank_additive(a: &Matrix, b: &Matrix) -> bool {
    span_dim(b) == span_dim(a) + span_dim(&(b - a))
}

/// `Im A ⊆ Im B` and the row space of `A` inside that of `B`.
pub fn space(a: &Matrix, b: &Matrix) -> bool {
    let rb = span_dim(b);
    span_dim(&hcat(&[b, a])) == rb && span_dim(&hcat(&[&b.transpose(), &a.transpose()])) == rb
}

pub fn gd1_order(a: &Matrix, b: &Matrix) -> bool {
    rank_additive(a, b) && (&(b - a) * &stable_power(a)).is_zero()
}

pub fn one_gd_order(a: &Matrix, b: &Matrix) -> bool {
    rank_additive(a, b) && (&stable_power(a) * &(b - a)).is_zero()
}
