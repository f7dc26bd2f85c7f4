//! Decision procedures for the matrix relations built from inverses.
//!
//! Every relation reduces to rank tests and feasibility of linear systems in
//! `X`, decided exactly by [`solve_affine_matrix_system`]. Whenever a relation
//! holds and a certifying `X` exists, the report carries it, and the witness
//! has already been substituted back into the relation's defining equations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decomp::{fitting_spaces, matrix_index};
use crate::error::{Error, Result};
use crate::inverses::{gdrazin_space, is_1gd, is_gd1, is_gdrazin, is_one_inverse, is_reflexive};
use crate::linalg::{
    columns_within, nullspace_basis, solve_affine_matrix_system, LinearConstraint, Matrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Space,
    Minus,
    #[serde(rename = "gd")]
    GDrazin,
    GD1,
    #[serde(rename = "1gd")]
    OneGD,
    #[serde(rename = "gd1-1gd")]
    GD1OneGD,
    #[serde(rename = "1gd-gd1")]
    OneGDGD1,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::Space,
        Relation::Minus,
        Relation::GDrazin,
        Relation::GD1,
        Relation::OneGD,
        Relation::GD1OneGD,
        Relation::OneGDGD1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Space => "space",
            Relation::Minus => "minus",
            Relation::GDrazin => "gd",
            Relation::GD1 => "gd1",
            Relation::OneGD => "1gd",
            Relation::GD1OneGD => "gd1-1gd",
            Relation::OneGDGD1 => "1gd-gd1",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown relation {s:?}")))
    }
}

/// One sub-check that went into a decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub check: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheckReport {
    pub relation: Relation,
    pub holds: bool,
    #[serde(skip)]
    pub witness: Option<Matrix>,
    pub evidence: Vec<Evidence>,
}

impl OrderCheckReport {
    fn new(relation: Relation) -> Self {
        OrderCheckReport {
            relation,
            holds: true,
            witness: None,
            evidence: Vec::new(),
        }
    }

    fn record(&mut self, check: impl Into<String>, holds: bool) -> bool {
        self.evidence.push(Evidence {
            check: check.into(),
            holds,
        });
        self.holds &= holds;
        holds
    }
}

fn check_pair(a: &Matrix, b: &Matrix) -> Result<()> {
    a.require_square("order check")?;
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "order check",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(())
}

/// `AX = BX` and `XA = XB`.
fn cancels(a: &Matrix, b: &Matrix, x: &Matrix) -> bool {
    a * x == b * x && x * a == x * b
}

fn invariant(what: &str) -> Error {
    Error::Invariant(format!("{what} witness failed re-substitution"))
}

/// `Im A ⊆ Im B` and `Ker B ⊆ Ker A`.
pub fn space_preorder(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    check_pair(a, b)?;
    let mut report = OrderCheckReport::new(Relation::Space);
    report.record("Im A ⊆ Im B", columns_within(b, a));
    let kernel_ok = nullspace_basis(b).iter().all(|v| (a * v).is_zero());
    report.record("Ker B ⊆ Ker A", kernel_ok);
    Ok(report)
}

/// A `{1}`-inverse `X` of `A`, with the commuting condition if `gdrazin`,
/// such that `X(A-B) = 0` and `(A-B)X = 0`.
fn cancelling_inverse(a: &Matrix, b: &Matrix, gdrazin: bool) -> Result<Option<Matrix>> {
    let field = a.field();
    let n = a.rows();
    let id = Matrix::identity(field, n);
    let zero = Matrix::zeros(field, n, n);
    let diff = a - b;
    let mut constraints = vec![
        LinearConstraint::new(a.clone(), a.clone(), a.clone()),
        LinearConstraint::new(id.clone(), diff.clone(), zero.clone()),
        LinearConstraint::new(diff, id, zero),
    ];
    if gdrazin {
        let m = matrix_index(a)?;
        constraints.push(LinearConstraint::commutes_with(&a.pow(m as u32)?));
    }
    Ok(solve_affine_matrix_system(field, &constraints, (n, n))?.map(|s| s.particular))
}

/// Some `X ∈ A{1}` with `XA = XB` and `AX = BX`.
pub fn minus_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    check_pair(a, b)?;
    let mut report = OrderCheckReport::new(Relation::Minus);
    let x = cancelling_inverse(a, b, false)?;
    if report.record("{1}-inverse X with XA = XB, AX = BX exists", x.is_some()) {
        let x = x.expect("feasible");
        if !(is_one_inverse(a, &x)? && cancels(a, b, &x)) {
            return Err(invariant("minus"));
        }
        report.witness = Some(x);
    }
    Ok(report)
}

/// Some G-Drazin inverse `X` of `A` with `XA = XB` and `AX = BX`.
pub fn gd_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    check_pair(a, b)?;
    let mut report = OrderCheckReport::new(Relation::GDrazin);
    let x = cancelling_inverse(a, b, true)?;
    if report.record("G-Drazin X with XA = XB, AX = BX exists", x.is_some()) {
        let x = x.expect("feasible");
        if !(is_gdrazin(a, &x)? && cancels(a, b, &x)) {
            return Err(invariant("G-Drazin"));
        }
        report.witness = Some(x);
    }
    Ok(report)
}

/// `A` and `B` agree on `W_A`, and `A ≤⁻ B`.
pub fn gd1_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    check_pair(a, b)?;
    let mut report = OrderCheckReport::new(Relation::GD1);
    let (w, _) = fitting_spaces(a)?;
    report.record("A = B on W_A", (&(b - a) * &w).is_zero());
    let minus = minus_order(a, b)?;
    report.record("A ≤⁻ B", minus.holds);
    if report.holds {
        let a_minus = minus.witness.expect("minus witness");
        let b_gd = gdrazin_space(b)?.particular;
        let x = &(&b_gd * a) * &a_minus;
        if !(is_gd1(a, &x)? && cancels(a, b, &x)) {
            return Err(invariant("GD1"));
        }
        report.witness = Some(x);
    }
    Ok(report)
}

/// `Im(B-A) ⊆ U_A`, and `A ≤⁻ B`.
pub fn one_gd_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    check_pair(a, b)?;
    let mut report = OrderCheckReport::new(Relation::OneGD);
    let m = matrix_index(a)?;
    let am = a.pow(m as u32)?;
    report.record("Im(B - A) ⊆ U_A", (&am * &(b - a)).is_zero());
    let minus = minus_order(a, b)?;
    report.record("A ≤⁻ B", minus.holds);
    if report.holds {
        let a_minus = minus.witness.expect("minus witness");
        let b_gd = gdrazin_space(b)?.particular;
        let x = &(&a_minus * a) * &b_gd;
        if !(is_1gd(a, &x)? && cancels(a, b, &x)) {
            return Err(invariant("1GD"));
        }
        report.witness = Some(x);
    }
    Ok(report)
}

/// Decided as the G-Drazin order; the witness `X·A·X` lies in `A{GD} ∩ A{1,2}`.
pub fn gd1_1gd_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    let inner = gd_order(a, b)?;
    bilateral(Relation::GD1OneGD, a, b, inner, true)
}

/// Decided as the minus order; the witness `X·A·X` is reflexive.
pub fn one_gd_gd1_order(a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    let inner = minus_order(a, b)?;
    bilateral(Relation::OneGDGD1, a, b, inner, false)
}

fn bilateral(
    relation: Relation,
    a: &Matrix,
    b: &Matrix,
    inner: OrderCheckReport,
    gdrazin: bool,
) -> Result<OrderCheckReport> {
    let mut report = OrderCheckReport::new(relation);
    report.record(
        format!("equivalent to A ≤ B under {}", inner.relation),
        inner.holds,
    );
    if let Some(x) = inner.witness {
        let y = &(&x * a) * &x;
        let valid = is_reflexive(a, &y)? && (!gdrazin || is_gdrazin(a, &y)?) && cancels(a, b, &y);
        if !valid {
            return Err(invariant(relation.name()));
        }
        report.witness = Some(y);
    }
    Ok(report)
}

pub fn check_order(relation: Relation, a: &Matrix, b: &Matrix) -> Result<OrderCheckReport> {
    match relation {
        Relation::Space => space_preorder(a, b),
        Relation::Minus => minus_order(a, b),
        Relation::GDrazin => gd_order(a, b),
        Relation::GD1 => gd1_order(a, b),
        Relation::OneGD => one_gd_order(a, b),
        Relation::GD1OneGD => gd1_1gd_order(a, b),
        Relation::OneGDGD1 => one_gd_gd1_order(a, b),
    }
}
