//! Parameterized families of all GD1 and of all 1GD inverses of a matrix.
//!
//! A family is stored in the basis `P` of [`FittingData`], where
//! `J = P⁻¹AP = diag(C, N)`. Its template starts from
//! `J' = diag(C⁻¹, Nᵗ)` and places three kinds of slots:
//!
//! * free parameters in the kernel rows of `J` (one per chain, the row of
//!   the chain's last vector),
//! * free parameters in the zero columns of `Nᵗ` (one per chain, the column
//!   of the chain's first vector),
//! * dependent entries where those kernel rows meet those zero columns.
//!
//! With `J̃` the template with zeros in the dependent slots, the dependent
//! entry at `(i, j)` is `row_i(J̃) · J · col_j(J̃)`. A member is
//! `P · X_J · P⁻¹`.
//!
//! For GD1 the kernel-row parameters go into every nonzero column past the
//! first `r`, and the zero columns get parameters in all non-kernel rows.
//! For 1GD the kernel-row parameters go into every nonzero column, and the
//! zero columns only get parameters in the non-kernel rows of the `U` block.
//! Either way there are `s · (rank A + rank A2)` parameters, `s` being the
//! number of chains.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::decomp::{fitting_decomposition, FittingData};
use crate::error::{Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::inverses::InverseKind;
pub use crate::inverses::{is_1gd, is_gd1};
use crate::linalg::{inverse, nullspace_basis, rank, Matrix};
use crate::rng::Lcg;

/// Position `(row, col)` of a free parameter in the J-basis template, 0-based.
///
/// Displayed 1-based as `a54`, or `a5,4` once an index exceeds 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId {
    pub row: usize,
    pub col: usize,
}

impl ParamId {
    pub fn new(row: usize, col: usize) -> Self {
        ParamId { row, col }
    }
}

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.row + 1, self.col + 1);
        if i < 10 && j < 10 {
            write!(f, "a{i}{j}")
        } else {
            write!(f, "a{i},{j}")
        }
    }
}

impl FromStr for ParamId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownParameter(s.to_string());
        let body = s.trim().strip_prefix('a').ok_or_else(bad)?;
        let body = body.strip_prefix('\'').unwrap_or(body);
        let (i, j) = match body.split_once(',') {
            Some((i, j)) => (i, j),
            None if body.len() == 2 && body.is_ascii() => body.split_at(1),
            None => return Err(bad()),
        };
        let parse = |t: &str| t.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(bad);
        Ok(ParamId::new(parse(i)? - 1, parse(j)? - 1))
    }
}

impl Serialize for ParamId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Fixed(Scalar),
    Free(ParamId),
    Dependent,
}

/// One monomial `coeff · Π params` of a dependent entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub params: Vec<ParamId>,
}

/// Closed form of a dependent entry as a polynomial in the free parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentRule {
    pub row: usize,
    pub col: usize,
    pub terms: Vec<Term>,
}

impl fmt::Display for DependentRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let mut coeff = t.coeff.to_string();
            let negative = coeff.starts_with('-') && !coeff.contains(['+', 'i']);
            if negative {
                coeff.remove(0);
            }
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let names: Vec<String> = t.params.iter().map(ToString::to_string).collect();
            let monomial = names.join("*");
            match (coeff.as_str(), monomial.is_empty()) {
                (c, true) => f.write_str(c)?,
                ("1", false) => f.write_str(&monomial)?,
                (c, false) if c.contains(['+', 'i']) => write!(f, "({c})*{monomial}")?,
                (c, false) => write!(f, "{c}*{monomial}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseFamily {
    pub kind: InverseKind,
    pub decomposition: FittingData,
    /// `n x n` slots in the J-basis.
    pub template: Vec<Vec<Slot>>,
    /// Free parameters in placement order: kernel-row ones, then zero-column ones.
    pub params: Vec<ParamId>,
    /// Dependent positions, row-major.
    pub dependent: Vec<(usize, usize)>,
}

pub type Assignment = BTreeMap<ParamId, Scalar>;

impl InverseFamily {
    pub fn field(&self) -> FieldTag {
        self.decomposition.p.field()
    }

    pub fn n(&self) -> usize {
        self.decomposition.n()
    }

    pub fn param_count(&self) -> usize {
        self.params.len()
    }

    pub fn j(&self) -> &Matrix {
        &self.decomposition.j
    }

    pub fn zero_assignment(&self) -> Assignment {
        let zero = self.field().zero();
        self.params.iter().map(|&p| (p, zero.clone())).collect()
    }

    /// Seeded assignment, values drawn in parameter order.
    pub fn random_assignment(&self, seed: u64) -> Assignment {
        let mut rng = Lcg::new(seed);
        self.params
            .iter()
            .map(|&p| (p, rng.scalar(self.field())))
            .collect()
    }

    /// Pairs values with parameters in placement order.
    pub fn assignment_from_values(&self, values: &[Scalar]) -> Result<Assignment> {
        if values.len() != self.params.len() {
            return Err(Error::ShapeMismatch {
                op: "assignment",
                left: (self.params.len(), 1),
                right: (values.len(), 1),
            });
        }
        Ok(self
            .params
            .iter()
            .copied()
            .zip(values.iter().cloned())
            .collect())
    }

    fn check_assignment(&self, assignment: &Assignment) -> Result<()> {
        for p in &self.params {
            match assignment.get(p) {
                None => return Err(Error::MissingParameter(p.to_string())),
                Some(v) if v.field() != self.field() => {
                    return Err(Error::FieldMismatch(self.field(), v.field()))
                }
                Some(_) => {}
            }
        }
        if let Some(extra) = assignment.keys().find(|k| !self.params.contains(k)) {
            return Err(Error::UnknownParameter(extra.to_string()));
        }
        Ok(())
    }

    /// `J̃`: the template with parameters substituted and dependent slots at zero.
    fn partial(&self, assignment: &Assignment) -> Matrix {
        let field = self.field();
        let n = self.n();
        Matrix::from_fn(field, n, n, |i, j| match &self.template[i][j] {
            Slot::Fixed(v) => v.clone(),
            Slot::Free(p) => assignment[p].clone(),
            Slot::Dependent => field.zero(),
        })
    }

    /// The member in the J-basis, before conjugation by `P`.
    pub fn evaluate_j(&self, assignment: &Assignment) -> Result<Matrix> {
        self.check_assignment(assignment)?;
        let partial = self.partial(assignment);
        let j = self.j();
        let mut x = partial.clone();
        for &(row, col) in &self.dependent {
            let left = &partial.block(row, row + 1, 0, self.n()) * j;
            x[(row, col)] = (&left * &partial.column(col))[(0, 0)].clone();
        }
        Ok(x)
    }

    /// `P · X_J · P⁻¹`
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Matrix> {
        let xj = self.evaluate_j(assignment)?;
        let d = &self.decomposition;
        Ok(&(&d.p * &xj) * &d.p_inv)
    }

    /// Dependent entries computed through the block structure of `J`: the
    /// `C` block plus one shift term per consecutive pair inside each chain.
    pub fn dependent_by_chain_sums(&self, assignment: &Assignment) -> Result<Vec<Scalar>> {
        self.check_assignment(assignment)?;
        let t = self.partial(assignment);
        let d = &self.decomposition;
        let r = d.r();
        let field = self.field();
        let starts = d.chain_starts();
        Ok(self
            .dependent
            .iter()
            .map(|&(i, j)| {
                let mut acc = field.zero();
                for h in 0..r {
                    for l in 0..r {
                        acc = acc + &t[(i, h)] * &d.c[(h, l)] * &t[(l, j)];
                    }
                }
                for (start, len) in starts.iter().zip(d.chain_lengths()) {
                    let g = r + start;
                    for l in 0..len.saturating_sub(1) {
                        acc = acc + &t[(i, g + l + 1)] * &t[(g + l, j)];
                    }
                }
                acc
            })
            .collect())
    }

    /// Each dependent entry expanded as a polynomial in the free parameters.
    pub fn dependent_rules(&self) -> Vec<DependentRule> {
        let n = self.n();
        let j = self.j();
        let field = self.field();
        self.dependent
            .iter()
            .map(|&(row, col)| {
                let mut poly: BTreeMap<Vec<ParamId>, Scalar> = BTreeMap::new();
                for h in 0..n {
                    for l in 0..n {
                        let jhl = &j[(h, l)];
                        if jhl.is_zero() {
                            continue;
                        }
                        let (Some(left), Some(right)) = (
                            slot_factor(field, &self.template[row][h]),
                            slot_factor(field, &self.template[l][col]),
                        ) else {
                            continue;
                        };
                        let mut params: Vec<ParamId> = left.1.into_iter().chain(right.1).collect();
                        params.sort();
                        let coeff = &left.0 * jhl * &right.0;
                        let entry = poly.entry(params).or_insert_with(|| field.zero());
                        *entry = &*entry + coeff;
                    }
                }
                let terms = poly
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(params, coeff)| Term { coeff, params })
                    .collect();
                DependentRule { row, col, terms }
            })
            .collect()
    }

    /// Template cells as strings: fixed values, parameter names, or `*`.
    pub fn template_strings(&self) -> Vec<Vec<String>> {
        self.template
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| match s {
                        Slot::Fixed(v) => v.to_string(),
                        Slot::Free(p) => p.to_string(),
                        Slot::Dependent => "*".to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

/// A nonzero slot as `(coefficient, parameters)`; `None` for zero or dependent.
fn slot_factor(field: FieldTag, slot: &Slot) -> Option<(Scalar, Vec<ParamId>)> {
    match slot {
        Slot::Fixed(v) if v.is_zero() => None,
        Slot::Fixed(v) => Some((v.clone(), vec![])),
        Slot::Free(p) => Some((field.one(), vec![*p])),
        Slot::Dependent => None,
    }
}

pub fn gd1_family(a: &Matrix) -> Result<InverseFamily> {
    build_family(InverseKind::GD1, a)
}

pub fn one_gd_family(a: &Matrix) -> Result<InverseFamily> {
    build_family(InverseKind::OneGD, a)
}

/// Dispatches on `kind`, which must be GD1 or 1GD.
pub fn family(kind: InverseKind, a: &Matrix) -> Result<InverseFamily> {
    match kind {
        InverseKind::GD1 | InverseKind::OneGD => build_family(kind, a),
        other => Err(Error::Precondition(format!(
            "families exist only for gd1 and 1gd, not {other}"
        ))),
    }
}

fn build_family(kind: InverseKind, a: &Matrix) -> Result<InverseFamily> {
    let decomposition = fitting_decomposition(a)?;
    family_from_decomposition(kind, a, decomposition)
}

/// Builds the family on a precomputed decomposition of `a`.
pub fn family_from_decomposition(
    kind: InverseKind,
    a: &Matrix,
    decomposition: FittingData,
) -> Result<InverseFamily> {
    let n = decomposition.n();
    let r = decomposition.r();
    let j = &decomposition.j;

    let c_inv = inverse(&decomposition.c)?;
    let nil_t = decomposition.nilpotent_block().transpose();
    let j_prime = Matrix::block_diagonal(&c_inv, &nil_t);

    // Kernel rows: J e_k = 0 exactly at the last vector of each chain.
    let kernel_rows: Vec<usize> = nullspace_basis(j)
        .iter()
        .map(|v| unit_index(v).ok_or_else(|| Error::Invariant("N(J) is not coordinate".into())))
        .collect::<Result<_>>()?;
    let zero_cols: Vec<usize> = (0..n).filter(|&c| j_prime.column(c).is_zero()).collect();

    let starts = decomposition.chain_starts();
    let lengths = decomposition.chain_lengths();
    let expected_kernel: Vec<usize> = starts
        .iter()
        .zip(&lengths)
        .map(|(s, l)| r + s + l - 1)
        .collect();
    let expected_zero: Vec<usize> = starts.iter().map(|s| r + s).collect();
    let sorted = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
    if sorted(&kernel_rows) != sorted(&expected_kernel)
        || sorted(&zero_cols) != sorted(&expected_zero)
    {
        return Err(Error::Invariant(
            "kernel rows or zero columns of J disagree with the chains".into(),
        ));
    }

    let mut template: Vec<Vec<Slot>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|c| Slot::Fixed(j_prime[(i, c)].clone()))
                .collect()
        })
        .collect();
    let mut params = Vec::new();
    let is_kernel_row = |i: usize| kernel_rows.contains(&i);
    let is_zero_col = |c: usize| zero_cols.contains(&c);

    let kernel_param_cols: Vec<usize> = match kind {
        InverseKind::GD1 => (r..n).filter(|&c| !is_zero_col(c)).collect(),
        _ => (0..n).filter(|&c| !is_zero_col(c)).collect(),
    };
    for &c in &kernel_param_cols {
        for &k in &kernel_rows {
            let id = ParamId::new(k, c);
            template[k][c] = Slot::Free(id);
            params.push(id);
        }
    }

    let zero_col_rows: Vec<usize> = match kind {
        InverseKind::GD1 => (0..n).filter(|&i| !is_kernel_row(i)).collect(),
        _ => (r..n).filter(|&i| !is_kernel_row(i)).collect(),
    };
    let mut dependent = Vec::new();
    for &c in &zero_cols {
        for &i in &zero_col_rows {
            let id = ParamId::new(i, c);
            template[i][c] = Slot::Free(id);
            params.push(id);
        }
        for &k in &kernel_rows {
            template[k][c] = Slot::Dependent;
            dependent.push((k, c));
        }
    }
    dependent.sort();

    let s = kernel_rows.len();
    let rank_a = rank(a);
    let rank_a2 = rank(&decomposition.nilpotent_block());
    let expected = s * (rank_a + rank_a2);
    if params.len() != expected {
        return Err(Error::Invariant(format!(
            "{} parameters placed, structure count is {expected}",
            params.len()
        )));
    }
    Ok(InverseFamily {
        kind,
        decomposition,
        template,
        params,
        dependent,
    })
}

fn unit_index(v: &Matrix) -> Option<usize> {
    let nonzero: Vec<usize> = (0..v.rows()).filter(|&i| !v[(i, 0)].is_zero()).collect();
    match nonzero.as_slice() {
        [k] if v[(*k, 0)].is_one() => Some(*k),
        _ => None,
    }
}

/// Every member of a family over a finite field, at most `cap` of them.
pub fn enumerate_family(family: &InverseFamily, cap: u128) -> Result<Vec<Matrix>> {
    let field = family.field();
    let p = field.modulus().ok_or(Error::NotFinite(field))? as u128;
    let k = family.param_count();
    let count = u32::try_from(k)
        .ok()
        .and_then(|k| p.checked_pow(k))
        .unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let elements: Vec<Scalar> = field.elements().expect("finite").collect();
    let mut digits = vec![0usize; k];
    let mut out = Vec::with_capacity(count as usize);
    loop {
        let values: Vec<Scalar> = digits.iter().map(|&d| elements[d].clone()).collect();
        out.push(family.evaluate(&family.assignment_from_values(&values)?)?);
        let Some(pos) = digits.iter().position(|&d| d + 1 < elements.len()) else {
            break;
        };
        for d in &mut digits[..pos] {
            *d = 0;
        }
        digits[pos] += 1;
    }
    Ok(out)
}
