//! Classical inverse sets, membership oracles and the composition maps
//! that build GD1 and 1GD inverses out of simpler ones.
//!
//! `{1}`-inverses and G-Drazin inverses are linear conditions on `X` and are
//! returned as exact affine spaces. Reflexive inverses are never solved for
//! directly: `X₁·A·X₂` is reflexive for any two `{1}`-inverses and every
//! reflexive inverse arises this way (take `X₁ = X₂ = X`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decomp::{fitting_spaces, matrix_index};
use crate::error::{Error, Result};
use crate::linalg::{
    columns_within, rank, solve_affine_matrix_system, AffineMatrixSpace, LinearConstraint, Matrix,
};
use crate::rng::Lcg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseKind {
    /// `AXA = A`
    One,
    /// `AXA = A`, `XAX = X`
    Reflexive,
    /// `AXA = A`, `XA^m = A^mX`
    GDrazin,
    /// Reflexive and `X·W ⊆ W`
    GD1,
    /// Reflexive and `X·U ⊆ U`
    #[serde(rename = "1gd")]
    OneGD,
    /// G-Drazin and reflexive
    GDrazinReflexive,
}

impl InverseKind {
    pub const ALL: [InverseKind; 6] = [
        InverseKind::One,
        InverseKind::Reflexive,
        InverseKind::GDrazin,
        InverseKind::GD1,
        InverseKind::OneGD,
        InverseKind::GDrazinReflexive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::One => "one",
            InverseKind::Reflexive => "reflexive",
            InverseKind::GDrazin => "gd",
            InverseKind::GD1 => "gd1",
            InverseKind::OneGD => "1gd",
            InverseKind::GDrazinReflexive => "gd-reflexive",
        }
    }

    fn identities(self) -> &'static [Identity] {
        use Identity::*;
        match self {
            InverseKind::One => &[Inner],
            InverseKind::Reflexive => &[Inner, Outer],
            InverseKind::GDrazin => &[Inner, CommutesWithPower],
            InverseKind::GD1 => &[Inner, Outer, PreservesW],
            InverseKind::OneGD => &[Inner, Outer, PreservesU],
            InverseKind::GDrazinReflexive => &[Inner, Outer, CommutesWithPower],
        }
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One defining identity of an inverse class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `AXA = A`
    Inner,
    /// `XAX = X`
    Outer,
    /// `X·A^m = A^m·X`
    CommutesWithPower,
    /// `X(Im A^m) ⊆ Im A^m`
    PreservesW,
    /// `X(Ker A^m) ⊆ Ker A^m`
    PreservesU,
}

impl Identity {
    pub fn describe(self) -> &'static str {
        match self {
            Identity::Inner => "AXA = A",
            Identity::Outer => "XAX = X",
            Identity::CommutesWithPower => "XA^m = A^mX",
            Identity::PreservesW => "X(W) ⊆ W",
            Identity::PreservesU => "X(U) ⊆ U",
        }
    }

    fn holds(self, a: &Matrix, x: &Matrix) -> bool {
        match self {
            Identity::Inner => &(a * x) * a == *a,
            Identity::Outer => &(x * a) * x == *x,
            Identity::CommutesWithPower => {
                let m = matrix_index(a).expect("square");
                let am = a.pow(m as u32).expect("square");
                &am * x == x * &am
            }
            Identity::PreservesW => {
                let (w, _) = fitting_spaces(a).expect("square");
                columns_within(&w, &(x * &w))
            }
            Identity::PreservesU => {
                let (_, u) = fitting_spaces(a).expect("square");
                columns_within(&u, &(x * &u))
            }
        }
    }
}

/// Outcome of a membership test, naming each identity that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub kind: InverseKind,
    pub failed: Vec<Identity>,
}

impl Membership {
    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }
}

fn check_pair(a: &Matrix, x: &Matrix) -> Result<()> {
    a.require_square("membership")?;
    if a.field() != x.field() {
        return Err(Error::FieldMismatch(a.field(), x.field()));
    }
    if a.shape() != x.shape() {
        return Err(Error::ShapeMismatch {
            op: "membership",
            left: a.shape(),
            right: x.shape(),
        });
    }
    Ok(())
}

/// Tests every defining identity of `kind` for the candidate `x`.
pub fn membership(kind: InverseKind, a: &Matrix, x: &Matrix) -> Result<Membership> {
    check_pair(a, x)?;
    let failed = kind
        .identities()
        .iter()
        .copied()
        .filter(|id| !id.holds(a, x))
        .collect();
    Ok(Membership { kind, failed })
}

pub fn is_member(kind: InverseKind, a: &Matrix, x: &Matrix) -> Result<bool> {
    Ok(membership(kind, a, x)?.holds())
}

pub fn is_one_inverse(a: &Matrix, x: &Matrix) -> Result<bool> {
    is_member(InverseKind::One, a, x)
}

pub fn is_reflexive(a: &Matrix, x: &Matrix) -> Result<bool> {
    is_member(InverseKind::Reflexive, a, x)
}

pub fn is_gdrazin(a: &Matrix, x: &Matrix) -> Result<bool> {
    is_member(InverseKind::GDrazin, a, x)
}

pub fn is_gd1(a: &Matrix, x: &Matrix) -> Result<bool> {
    is_member(InverseKind::GD1, a, x)
}

pub fn is_1gd(a: &Matrix, x: &Matrix) -> Result<bool> {
    is_member(InverseKind::OneGD, a, x)
}

/// `{X : AXA = A}`
pub fn one_inverse_space(a: &Matrix) -> Result<AffineMatrixSpace> {
    a.require_square("one_inverse_space")?;
    let n = a.rows();
    let c = LinearConstraint::new(a.clone(), a.clone(), a.clone());
    let space = solve_affine_matrix_system(a.field(), &[c], (n, n))?
        .ok_or_else(|| Error::Invariant("no {1}-inverse found".into()))?;
    let r = rank(a);
    if space.dimension() != n * n - r * r {
        return Err(Error::Invariant(format!(
            "{{1}}-inverse space has dimension {}, expected {}",
            space.dimension(),
            n * n - r * r
        )));
    }
    Ok(space)
}

/// `{X : AXA = A, X·A^m = A^m·X}`
pub fn gdrazin_space(a: &Matrix) -> Result<AffineMatrixSpace> {
    a.require_square("gdrazin_space")?;
    let n = a.rows();
    let m = matrix_index(a)?;
    let constraints = [
        LinearConstraint::new(a.clone(), a.clone(), a.clone()),
        LinearConstraint::commutes_with(&a.pow(m as u32)?),
    ];
    solve_affine_matrix_system(a.field(), &constraints, (n, n))?
        .ok_or_else(|| Error::Invariant("no G-Drazin inverse found".into()))
}

/// Deterministic pseudo-random member of `space`, re-checked against its constraints.
pub fn sample_member(space: &AffineMatrixSpace, seed: u64) -> Result<Matrix> {
    let mut rng = Lcg::new(seed);
    let coeffs: Vec<_> = (0..space.dimension())
        .map(|_| rng.scalar(space.field()))
        .collect();
    let x = space.member(&coeffs)?;
    if !space.satisfied_by(&x) {
        return Err(Error::Invariant(
            "sampled member violates its constraints".into(),
        ));
    }
    Ok(x)
}

fn require(kind: InverseKind, a: &Matrix, x: &Matrix, role: &str) -> Result<()> {
    let report = membership(kind, a, x)?;
    if report.holds() {
        Ok(())
    } else {
        let failed: Vec<_> = report.failed.iter().map(|i| i.describe()).collect();
        Err(Error::Precondition(format!(
            "{role} is not a {kind} inverse ({} fails)",
            failed.join(", ")
        )))
    }
}

fn ensure(kind: InverseKind, a: &Matrix, x: Matrix) -> Result<Matrix> {
    if is_member(kind, a, &x)? {
        Ok(x)
    } else {
        Err(Error::Invariant(format!("composition left the {kind} set")))
    }
}

fn compose(a: &Matrix, left: &Matrix, right: &Matrix) -> Matrix {
    &(left * a) * right
}

/// `X₁·A·X₂`, a reflexive inverse for any two `{1}`-inverses.
pub fn gamma_reflexive(a: &Matrix, x1: &Matrix, x2: &Matrix) -> Result<Matrix> {
    require(InverseKind::One, a, x1, "X1")?;
    require(InverseKind::One, a, x2, "X2")?;
    ensure(InverseKind::Reflexive, a, compose(a, x1, x2))
}

/// `X_GD·A·X⁻`, a GD1 inverse.
pub fn gd1_from_components(a: &Matrix, x_gd: &Matrix, x_one: &Matrix) -> Result<Matrix> {
    require(InverseKind::GDrazin, a, x_gd, "Xgd")?;
    require(InverseKind::One, a, x_one, "Xone")?;
    ensure(InverseKind::GD1, a, compose(a, x_gd, x_one))
}

/// `X⁻·A·X_GD`, a 1GD inverse.
pub fn one_gd_from_components(a: &Matrix, x_one: &Matrix, x_gd: &Matrix) -> Result<Matrix> {
    require(InverseKind::One, a, x_one, "Xone")?;
    require(InverseKind::GDrazin, a, x_gd, "Xgd")?;
    ensure(InverseKind::OneGD, a, compose(a, x_one, x_gd))
}

/// `X_GD·A·X'_GD`, again a G-Drazin inverse.
pub fn gamma_gdrazin(a: &Matrix, x_gd: &Matrix, y_gd: &Matrix) -> Result<Matrix> {
    require(InverseKind::GDrazin, a, x_gd, "first factor")?;
    require(InverseKind::GDrazin, a, y_gd, "second factor")?;
    ensure(InverseKind::GDrazin, a, compose(a, x_gd, y_gd))
}

/// `X_GD1·A·X_1GD`, both G-Drazin and reflexive.
pub fn gamma_bilateral(a: &Matrix, x_gd1: &Matrix, x_1gd: &Matrix) -> Result<Matrix> {
    require(InverseKind::GD1, a, x_gd1, "GD1 factor")?;
    require(InverseKind::OneGD, a, x_1gd, "1GD factor")?;
    ensure(InverseKind::GDrazinReflexive, a, compose(a, x_gd1, x_1gd))
}

/// `X_1GD·A·X_GD1`, a reflexive inverse.
pub fn gamma_bilateral_reversed(a: &Matrix, x_1gd: &Matrix, x_gd1: &Matrix) -> Result<Matrix> {
    require(InverseKind::OneGD, a, x_1gd, "1GD factor")?;
    require(InverseKind::GD1, a, x_gd1, "GD1 factor")?;
    ensure(InverseKind::Reflexive, a, compose(a, x_1gd, x_gd1))
}
