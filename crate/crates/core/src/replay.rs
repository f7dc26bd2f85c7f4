//! Replays the worked examples in `fixtures/` and reports every mismatch.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::decomp::{fitting_decomposition, fitting_spaces, index_info, FittingData};
use crate::error::Result;
use crate::family::{family_from_decomposition, gd1_family, one_gd_family, InverseFamily, ParamId};
use crate::field::FieldTag;
use crate::fixtures::FixtureSet;
use crate::inverses::{is_gd1, is_one_inverse, membership, InverseKind};
use crate::linalg::{inverse, nullspace_basis, rank, same_column_space, Matrix};
use crate::orders::{check_order, gd1_order, one_gd_order, Relation};

/// Seeds `0..SEEDED_ASSIGNMENTS` are evaluated for each family example.
pub const SEEDED_ASSIGNMENTS: u64 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    /// Fixture files the example reads.
    pub fixtures: &'static [&'static str],
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "gauss5-structure",
        description:
            "5x5 Q(i) matrix: rank 4, index 3, C = diag(i, 3) in the fixture basis, one 3-chain",
        fixtures: &["gauss5-a", "gauss5-p", "gauss5-p-inv"],
    },
    Example {
        name: "gauss5-gd1",
        description: "GD1 family of the 5x5 Q(i) matrix: 6 parameters, a53 = a33*a54 + a43*a55",
        fixtures: &["gauss5-a", "gauss5-p"],
    },
    Example {
        name: "gauss5-1gd",
        description: "1GD family of the 5x5 Q(i) matrix: 6 parameters, a53 from the bilinear rule",
        fixtures: &["gauss5-a", "gauss5-p"],
    },
    Example {
        name: "split2",
        description: "diag(2, 0) below [[2,-6],[0,3]] for GD1 while B^-1 is not a GD1 inverse of A",
        fixtures: &["split2-a", "split2-b", "split2-b-inv", "split2-witness"],
    },
    Example {
        name: "index2",
        description: "5x5 rational pair of indices 2 and 3, ordered for minus, GD1 and 1GD",
        fixtures: &["index2-a", "index2-b", "index2-p", "index2-a-minus"],
    },
];

pub fn example(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayOutcome {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

struct Checker {
    failures: Vec<String>,
}

impl Checker {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

pub fn run_all(fixtures: &FixtureSet) -> Vec<ReplayOutcome> {
    EXAMPLES
        .iter()
        .map(|e| run_example(e.name, fixtures))
        .collect()
}

pub fn run_example(name: &str, fixtures: &FixtureSet) -> ReplayOutcome {
    let mut checker = Checker { failures: vec![] };
    let result = match name {
        "gauss5-structure" => gauss5_structure(fixtures, &mut checker),
        "gauss5-gd1" => gauss5_family(fixtures, &mut checker, InverseKind::GD1),
        "gauss5-1gd" => gauss5_family(fixtures, &mut checker, InverseKind::OneGD),
        "split2" => split2(fixtures, &mut checker),
        "index2" => index2(fixtures, &mut checker),
        other => {
            checker.failures.push(format!("unknown example {other}"));
            Ok(())
        }
    };
    if let Err(e) = result {
        checker.failures.push(format!("error: {e}"));
    }
    ReplayOutcome {
        name: name.to_string(),
        passed: checker.failures.is_empty(),
        failures: checker.failures,
    }
}

fn gauss5_structure(fx: &FixtureSet, ck: &mut Checker) -> Result<()> {
    let a = fx.matrix("gauss5-a")?;
    let p = fx.matrix("gauss5-p")?;
    let qi = FieldTag::GaussianRationals;
    let i = qi.imaginary_unit().expect("Q(i)");
    ck.expect(rank(&a) == 4, "rank A = 4");
    let info = index_info(&a)?;
    ck.expect(info.index == 3, "index of A is 3");

    let given = FittingData::with_basis(&a, &p)?;
    ck.expect(
        fx.matrix("gauss5-p-inv")? == given.p_inv,
        "fixture P^-1 is the inverse of P",
    );
    ck.expect(given.r() == 2, "r = 2");
    ck.expect(given.chain_lengths() == [3], "one chain of length 3");
    let c = Matrix::diagonal(qi, &[i.clone(), qi.from_i64(3)]);
    ck.expect(given.c == c, "C = diag(i, 3)");
    let c_inv = Matrix::diagonal(qi, &[-i.clone(), qi.from_ratio(1, 3)?]);
    ck.expect(inverse(&given.c)? == c_inv, "C^-1 = diag(-i, 1/3)");
    ck.expect(
        nullspace_basis(&given.j) == [Matrix::unit_vector(qi, 5, 4)],
        "N_u(J) is spanned by e5",
    );

    let own = fitting_decomposition(&a)?;
    ck.expect(
        own.r() == 2 && own.chain_lengths() == [3],
        "computed J has r = 2 and one 3-chain",
    );
    let trace = &own.c[(0, 0)] + &own.c[(1, 1)];
    let det = &own.c[(0, 0)] * &own.c[(1, 1)] - &own.c[(0, 1)] * &own.c[(1, 0)];
    ck.expect(
        trace == qi.from_i64(3) + i.clone(),
        "computed C has trace 3 + i",
    );
    ck.expect(det == qi.from_i64(3) * i, "computed C has determinant 3i");
    let cn = own.core_nilpotent();
    ck.expect(
        rank(&cn.a1) == 2 && rank(&cn.a2) == 2,
        "rank A1 = rank A2 = 2",
    );
    ck.expect(nullspace_basis(&a).len() == 1, "dim N(A) = 1");
    Ok(())
}

fn params(names: &[&str]) -> BTreeSet<ParamId> {
    names
        .iter()
        .map(|n| n.parse().expect("valid name"))
        .collect()
}

fn gauss5_family(fx: &FixtureSet, ck: &mut Checker, kind: InverseKind) -> Result<()> {
    let a = fx.matrix("gauss5-a")?;
    let p = fx.matrix("gauss5-p")?;
    let computed = match kind {
        InverseKind::GD1 => gd1_family(&a)?,
        _ => one_gd_family(&a)?,
    };
    let given = family_from_decomposition(kind, &a, FittingData::with_basis(&a, &p)?)?;
    let expected = match kind {
        InverseKind::GD1 => params(&["a13", "a23", "a33", "a43", "a54", "a55"]),
        _ => params(&["a51", "a52", "a54", "a55", "a33", "a43"]),
    };
    for (label, fam) in [("computed basis", &computed), ("fixture basis", &given)] {
        check_family(ck, &a, fam, kind, label, &expected)?;
    }
    Ok(())
}

fn check_family(
    ck: &mut Checker,
    a: &Matrix,
    fam: &InverseFamily,
    kind: InverseKind,
    label: &str,
    expected: &BTreeSet<ParamId>,
) -> Result<()> {
    ck.expect(
        fam.param_count() == 6,
        format!("{label}: 6 free parameters"),
    );
    let got: BTreeSet<ParamId> = fam.params.iter().copied().collect();
    ck.expect(&got == expected, format!("{label}: parameter set {got:?}"));
    let rules = fam.dependent_rules();
    ck.expect(
        rules.len() == 1 && (rules[0].row, rules[0].col) == (4, 2),
        format!("{label}: single dependent entry a53"),
    );
    if let Some(rule) = rules.first() {
        ck.expect(
            rule.to_string() == "a33*a54 + a43*a55",
            format!("{label}: a53 = {rule}"),
        );
    }
    for seed in 0..SEEDED_ASSIGNMENTS {
        let assignment = fam.random_assignment(seed);
        let x = fam.evaluate(&assignment)?;
        let report = membership(kind, a, &x)?;
        ck.expect(
            report.holds(),
            format!("{label}: seed {seed} member fails {:?}", report.failed),
        );
        let by_chain = fam.dependent_by_chain_sums(&assignment)?;
        let xj = fam.evaluate_j(&assignment)?;
        ck.expect(
            by_chain[0] == xj[(4, 2)],
            format!("{label}: seed {seed} chain-sum cross-check"),
        );
    }
    Ok(())
}

fn split2(fx: &FixtureSet, ck: &mut Checker) -> Result<()> {
    let q = FieldTag::Rationals;
    let a = fx.matrix("split2-a")?;
    let b = fx.matrix("split2-b")?;
    let b_inv = fx.matrix("split2-b-inv")?;
    let witness = fx.matrix("split2-witness")?;

    let fam = gd1_family(&a)?;
    ck.expect(fam.param_count() == 1, "A(GD1) has one parameter");
    for v in [0, 1, 7, -3] {
        let x = fam.evaluate(&fam.assignment_from_values(&[q.from_i64(v)])?)?;
        let mut expected = Matrix::zeros(q, 2, 2);
        expected[(0, 0)] = q.from_ratio(1, 2)?;
        expected[(0, 1)] = q.from_i64(v);
        ck.expect(x == expected, format!("a = {v} gives [[1/2, {v}], [0, 0]]"));
    }
    let fam_b = gd1_family(&b)?;
    ck.expect(fam_b.param_count() == 0, "B(GD1) is a single point");
    ck.expect(
        fam_b.evaluate(&fam_b.zero_assignment())? == b_inv,
        "B(GD1) = {B^-1}",
    );
    ck.expect(inverse(&b)? == b_inv, "fixture B^-1 is the inverse of B");

    let order = gd1_order(&a, &b)?;
    ck.expect(order.holds, "A ≤GD1 B");
    if let Some(x) = &order.witness {
        ck.expect(is_gd1(&a, x)?, "reported witness is a GD1 inverse of A");
        ck.expect(
            &(&a * x) * &b == a && &(&b * x) * &a == a,
            "witness: AXB = BXA = A",
        );
    }
    ck.expect(
        is_gd1(&a, &witness)?,
        "fixture witness is a GD1 inverse of A",
    );
    ck.expect(
        &(&a * &witness) * &b == a && &(&b * &witness) * &a == a,
        "fixture witness: AXB = BXA = A",
    );
    ck.expect(!is_gd1(&a, &b_inv)?, "B^-1 is not a GD1 inverse of A");
    Ok(())
}

fn index2(fx: &FixtureSet, ck: &mut Checker) -> Result<()> {
    let a = fx.matrix("index2-a")?;
    let b = fx.matrix("index2-b")?;
    let p = fx.matrix("index2-p")?;
    let a_minus = fx.matrix("index2-a-minus")?;
    let n = 5;

    ck.expect(index_info(&a)?.index == 2, "index of A is 2");
    ck.expect(index_info(&b)?.index == 3, "index of B is 3");

    // The expected subspaces are spanned by columns of P.
    let cols = |r: std::ops::Range<usize>| p.block(0, n, r.start, r.end);
    let (w_a, u_a) = fitting_spaces(&a)?;
    let (w_b, u_b) = fitting_spaces(&b)?;
    ck.expect(same_column_space(&w_a, &cols(0..2)), "W_A = <p1, p2>");
    ck.expect(same_column_space(&u_a, &cols(2..5)), "U_A = <p3, p4, p5>");
    ck.expect(same_column_space(&w_a, &w_b), "W_A = W_B");
    ck.expect(same_column_space(&u_a, &u_b), "U_A = U_B");
    let diff = &b - &a;
    ck.expect(same_column_space(&diff, &cols(3..4)), "Im(B - A) = <p4>");
    ck.expect(
        crate::linalg::columns_within(&u_a, &diff),
        "Im(B - A) ⊆ U_A",
    );
    let p_inv = inverse(&p)?;
    let ja = &(&p_inv * &a) * &p;
    let jb = &(&p_inv * &b) * &p;
    let id2 = Matrix::identity(a.field(), 2);
    let shift = |ones: &[(usize, usize)]| {
        let mut m = Matrix::zeros(a.field(), 3, 3);
        for &(i, j) in ones {
            m[(i, j)] = a.field().one();
        }
        m
    };
    ck.expect(
        ja == Matrix::block_diagonal(&id2, &shift(&[(0, 1)])),
        "P^-1 A P = diag(I2, N_A)",
    );
    ck.expect(
        jb == Matrix::block_diagonal(&id2, &shift(&[(0, 1), (1, 2)])),
        "P^-1 B P = diag(I2, N_B)",
    );

    ck.expect(
        is_one_inverse(&a, &a_minus)?,
        "fixture A^- is a {1}-inverse",
    );
    ck.expect(
        &a * &a_minus == &b * &a_minus && &a_minus * &a == &a_minus * &b,
        "A A^- = B A^- and A^- A = A^- B",
    );
    for relation in [
        Relation::Space,
        Relation::Minus,
        Relation::GD1,
        Relation::OneGD,
        Relation::GD1OneGD,
        Relation::OneGDGD1,
    ] {
        ck.expect(
            check_order(relation, &a, &b)?.holds,
            format!("A ≤ B under {relation}"),
        );
    }
    let one = one_gd_order(&a, &b)?;
    if let Some(x) = &one.witness {
        ck.expect(
            &(&a * x) * &b == a && &(&b * x) * &a == a,
            "1GD witness: AXB = BXA = A",
        );
    }
    Ok(())
}
