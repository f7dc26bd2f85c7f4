//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check here is exact.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use common::{gf2, oracle, Extension};
use geninv::decomp::{core_nilpotent, matrix_index, FittingData};
use geninv::family::{
    enumerate_family, family_from_decomposition, gd1_family, one_gd_family, InverseFamily, ParamId,
};
use geninv::fixtures::FixtureSet;
use geninv::inverses::{
    gamma_bilateral, gamma_bilateral_reversed, gamma_gdrazin, gamma_reflexive, gd1_from_components,
    gdrazin_space, is_1gd, is_gd1, one_gd_from_components, one_inverse_space, sample_member,
    InverseKind,
};
use geninv::linalg::{inverse, rank};
use geninv::orders::{check_order, gd1_order, one_gd_order, Relation};
use geninv::rng::Lcg;
use geninv::{FieldTag, Matrix, Result};

const SEEDS: u64 = 50;
const SHOWN_FAILURES: usize = 5;

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, context: &str, result: Result<()>) {
        if let Err(e) = result {
            self.checks += 1;
            self.failures.push(format!("{context}: error: {e}"));
        }
    }
}

type Criterion = (&'static str, fn(&mut Tally));

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("GD1 family of the 5x5 Q(i) example", gauss5_gd1),
        ("1GD family of the 5x5 Q(i) example", gauss5_1gd),
        ("2x2 pair ordered by GD1 without B^-1 in A(GD1)", split2),
        ("5x5 rational pair of indices 2 and 3", index2),
        ("parameter counts of both families", structure_counts),
        ("exhaustive GF(2) enumeration, n <= 3", exhaustive_gf2),
        ("order-theory property suite", order_properties),
        ("composition laws and power identities", composition_laws),
    ];
    let mut all_pass = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut tally = Tally::default();
        run(&mut tally);
        let secs = start.elapsed().as_secs_f64();
        let pass = tally.failures.is_empty() && tally.checks > 0;
        all_pass &= pass;
        println!(
            "{} criterion {}: {title} ({} checks, {} failed, {secs:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            tally.checks,
            tally.failures.len(),
        );
        for f in tally.failures.iter().take(SHOWN_FAILURES) {
            println!("    {f}");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn params(names: &[&str]) -> BTreeSet<ParamId> {
    names.iter().map(|n| n.parse().unwrap()).collect()
}

/// Families in the fixture basis and in the computed one.
fn gauss5_families(kind: InverseKind) -> Result<(Matrix, Vec<(&'static str, InverseFamily)>)> {
    let fx = FixtureSet::builtin();
    let a = fx.matrix("gauss5-a")?;
    let p = fx.matrix("gauss5-p")?;
    let given = family_from_decomposition(kind, &a, FittingData::with_basis(&a, &p)?)?;
    let computed = match kind {
        InverseKind::GD1 => gd1_family(&a)?,
        _ => one_gd_family(&a)?,
    };
    Ok((
        a,
        vec![("fixture basis", given), ("computed basis", computed)],
    ))
}

fn gauss5_family_check(
    t: &mut Tally,
    kind: InverseKind,
    expected: BTreeSet<ParamId>,
) -> Result<()> {
    let (a, families) = gauss5_families(kind)?;
    for (label, fam) in families {
        t.check(fam.param_count() == 6, || {
            format!("{label}: {} parameters", fam.param_count())
        });
        let got: BTreeSet<ParamId> = fam.params.iter().copied().collect();
        t.check(got == expected, || format!("{label}: parameters {got:?}"));
        let rules = fam.dependent_rules();
        t.check(
            rules.len() == 1 && (rules[0].row, rules[0].col) == (4, 2),
            || format!("{label}: dependent entries {rules:?}"),
        );
        let id = |s: &str| s.parse::<ParamId>().unwrap();
        for seed in 0..SEEDS {
            let asg = fam.random_assignment(seed);
            let xj = fam.evaluate_j(&asg)?;
            // a53 = a33·a54 + a43·a55, evaluated straight from the assignment.
            let expected_a53 =
                &(&asg[&id("a33")] * &asg[&id("a54")]) + &(&asg[&id("a43")] * &asg[&id("a55")]);
            t.check(xj[(4, 2)] == expected_a53, || {
                format!("{label}: seed {seed}: a53 mismatch")
            });
            let x = fam.evaluate(&asg)?;
            let (lib, own) = match kind {
                InverseKind::GD1 => (is_gd1(&a, &x)?, oracle::gd1(&a, &x)),
                _ => (is_1gd(&a, &x)?, oracle::one_gd(&a, &x)),
            };
            t.check(lib && own, || {
                format!("{label}: seed {seed}: library {lib}, oracle {own}")
            });
        }
    }
    Ok(())
}

fn gauss5_gd1(t: &mut Tally) {
    let expected = params(&["a13", "a23", "a33", "a43", "a54", "a55"]);
    let r = gauss5_family_check(t, InverseKind::GD1, expected);
    t.absorb("gauss5 GD1", r);
}

fn gauss5_1gd(t: &mut Tally) {
    let expected = params(&["a51", "a52", "a54", "a55", "a33", "a43"]);
    let r = gauss5_family_check(t, InverseKind::OneGD, expected);
    t.absorb("gauss5 1GD", r);
}

fn split2(t: &mut Tally) {
    let r = (|| -> Result<()> {
        let q = FieldTag::Rationals;
        let fx = FixtureSet::builtin();
        let a = fx.matrix("split2-a")?;
        let b = fx.matrix("split2-b")?;
        let b_inv = inverse(&b)?;
        t.check(b_inv == fx.matrix("split2-b-inv")?, || {
            "fixture B^-1".into()
        });

        let fam = gd1_family(&a)?;
        t.check(fam.param_count() == 1, || {
            format!("A(GD1) has {} parameters", fam.param_count())
        });
        for v in -4..=4 {
            let x = fam.evaluate(&fam.assignment_from_values(&[q.from_i64(v)])?)?;
            let want = Matrix::from_rows(
                q,
                vec![
                    vec![q.from_ratio(1, 2)?, q.from_i64(v)],
                    vec![q.zero(), q.zero()],
                ],
            )?;
            t.check(x == want, || format!("a = {v}: got {x}"));
            t.check(oracle::gd1(&a, &x), || format!("a = {v}: oracle rejects"));
        }

        let fam_b = gd1_family(&b)?;
        t.check(fam_b.param_count() == 0, || "B(GD1) is not a point".into());
        t.check(fam_b.evaluate(&fam_b.zero_assignment())? == b_inv, || {
            "B(GD1) != {B^-1}".into()
        });

        let order = gd1_order(&a, &b)?;
        t.check(order.holds, || "A is not below B".into());
        t.check(oracle::gd1_order(&a, &b), || "rank oracle disagrees".into());
        match &order.witness {
            Some(x) => t.check(oracle::gd1(&a, x) && oracle::cancels(&a, &b, x), || {
                format!("witness {x} fails")
            }),
            None => t.check(false, || "no witness".into()),
        }
        t.check(!is_gd1(&a, &b_inv)?, || "library accepts B^-1".into());
        t.check(!oracle::gd1(&a, &b_inv), || "oracle accepts B^-1".into());
        Ok(())
    })();
    t.absorb("split2", r);
}

fn index2(t: &mut Tally) {
    let r = (|| -> Result<()> {
        let fx = FixtureSet::builtin();
        let a = fx.matrix("index2-a")?;
        let b = fx.matrix("index2-b")?;
        let p = fx.matrix("index2-p")?;
        let a_minus = fx.matrix("index2-a-minus")?;
        t.check(matrix_index(&a)? == 2, || "index of A".into());
        t.check(matrix_index(&b)? == 3, || "index of B".into());

        // e_k in the expected spans is the k-th column of P.
        let span = |cols: &[usize]| p.select_columns(cols);
        let same = |x: &Matrix, y: &Matrix| {
            let d = common::span_dim(x);
            d == common::span_dim(y) && common::span_dim(&common::hcat(&[x, y])) == d
        };
        let am = common::stable_power(&a);
        let w_a = am.clone();
        let u_a = common::kernel_matrix(&am);
        let diff = &b - &a;
        t.check(same(&w_a, &span(&[0, 1])), || "W_A".into());
        t.check(same(&u_a, &span(&[2, 3, 4])), || "U_A".into());
        t.check(same(&diff, &span(&[3])), || "Im(B - A)".into());
        t.check((&am * &diff).is_zero(), || {
            "Im(B - A) not inside U_A".into()
        });

        t.check(oracle::inner(&a, &a_minus), || {
            "A^- is not a {1}-inverse".into()
        });
        t.check(oracle::cancels(&a, &b, &a_minus), || {
            "A^- does not cancel".into()
        });
        let minus = check_order(Relation::Minus, &a, &b)?;
        t.check(minus.holds && oracle::rank_additive(&a, &b), || {
            "minus order".into()
        });
        let gd1 = gd1_order(&a, &b)?;
        let one = one_gd_order(&a, &b)?;
        t.check(gd1.holds && oracle::gd1_order(&a, &b), || {
            "GD1 order".into()
        });
        t.check(one.holds && oracle::one_gd_order(&a, &b), || {
            "1GD order".into()
        });
        for (name, report, own) in [
            ("GD1", &gd1, oracle::gd1 as fn(&Matrix, &Matrix) -> bool),
            ("1GD", &one, oracle::one_gd),
        ] {
            let ok = report
                .witness
                .as_ref()
                .is_some_and(|x| own(&a, x) && oracle::cancels(&a, &b, x));
            t.check(ok, || format!("{name} witness"));
        }
        Ok(())
    })();
    t.absorb("index2", r);
}

fn structure_counts(t: &mut Tally) {
    for field in common::test_fields() {
        let label = common::field_label(field);
        let mut rng = Lcg::new(0x5eed_0005 ^ field.modulus().unwrap_or(0) as u64);
        let mut types = HashSet::new();
        for i in 0..200 {
            let n = 2 + i % 5;
            let a = common::mixed_matrix(field, n, &mut rng, i);
            let r = (|| -> Result<()> {
                // Ranks of A^k stabilise by k = n.
                let rk = rank(&a);
                let stable = common::span_dim(&common::stable_power(&a));
                let s = n - rk;
                let expected = s * (rk + (rk - stable));
                let a2 = core_nilpotent(&a)?.a2;
                t.check(rank(&a2) == rk - stable, || {
                    format!("{label} #{i}: rank A2")
                });
                for kind in [InverseKind::GD1, InverseKind::OneGD] {
                    let fam = match kind {
                        InverseKind::GD1 => gd1_family(&a)?,
                        _ => one_gd_family(&a)?,
                    };
                    t.check(fam.param_count() == expected, || {
                        format!(
                            "{label} #{i} {kind}: {} params, expected {expected}",
                            fam.param_count()
                        )
                    });
                    let x = fam.evaluate(&fam.random_assignment(i as u64))?;
                    let ok = match kind {
                        InverseKind::GD1 => oracle::gd1(&a, &x),
                        _ => oracle::one_gd(&a, &x),
                    };
                    t.check(ok, || {
                        format!("{label} #{i} {kind}: sampled member rejected")
                    });
                }
                types.insert((n, rk, stable));
                Ok(())
            })();
            t.absorb(&format!("{label} #{i}"), r);
        }
        // Guard against a generator that collapses to a few shapes.
        t.check(types.len() >= 15, || {
            format!("{label}: only {} (n, rank, rank A^n) types", types.len())
        });
    }
}

fn exhaustive_gf2(t: &mut Tally) {
    for n in 1..=3 {
        let candidates: Vec<u16> = gf2::all(n).collect();
        for a in gf2::all(n) {
            let an = gf2::power(n, a, n);
            let w = gf2::image(n, an);
            let u = gf2::kernel(n, an);
            let mut want_gd1 = BTreeSet::new();
            let mut want_1gd = BTreeSet::new();
            for &x in &candidates {
                let ax = gf2::mul(n, a, x);
                if gf2::mul(n, ax, a) != a || gf2::mul(n, gf2::mul(n, x, a), x) != x {
                    continue;
                }
                if gf2::preserves(n, x, &w) {
                    want_gd1.insert(x);
                }
                if gf2::preserves(n, x, &u) {
                    want_1gd.insert(x);
                }
            }
            let am = gf2::to_matrix(n, a);
            let r = (|| -> Result<()> {
                for (kind, want) in [
                    (InverseKind::GD1, &want_gd1),
                    (InverseKind::OneGD, &want_1gd),
                ] {
                    let fam = match kind {
                        InverseKind::GD1 => gd1_family(&am)?,
                        _ => one_gd_family(&am)?,
                    };
                    let members = enumerate_family(&fam, 1 << 12)?;
                    let got: BTreeSet<u16> = members.iter().map(gf2::from_matrix).collect();
                    t.check(got.len() == members.len(), || {
                        format!("n={n} A={a:#x} {kind}: parametrization not injective")
                    });
                    t.check(&got == want, || {
                        format!(
                            "n={n} A={a:#x} {kind}: {} enumerated, {} by brute force",
                            got.len(),
                            want.len()
                        )
                    });
                }
                Ok(())
            })();
            t.absorb(&format!("n={n} A={a:#x}"), r);
        }
    }
}

/// Decisions of all relations with the library, keyed by relation.
fn decide(a: &Matrix, b: &Matrix) -> Result<Vec<(Relation, bool)>> {
    Relation::ALL
        .iter()
        .map(|&r| Ok((r, check_order(r, a, b)?.holds)))
        .collect()
}

fn holds(d: &[(Relation, bool)], r: Relation) -> bool {
    d.iter().find(|(x, _)| *x == r).expect("decided").1
}

/// Definition-level decisions over GF(2): some `X` of the required type with
/// `AX = BX` and `XA = XB`.
fn gf2_definitions(a: &Matrix, b: &Matrix) -> [(Relation, bool); 4] {
    let n = a.rows();
    let (a, b) = (gf2::from_matrix(a), gf2::from_matrix(b));
    let an = gf2::power(n, a, n);
    let (w, u) = (gf2::image(n, an), gf2::kernel(n, an));
    let mut found = [false; 4];
    for x in gf2::all(n) {
        let ax = gf2::mul(n, a, x);
        let xa = gf2::mul(n, x, a);
        if gf2::mul(n, ax, a) != a || ax != gf2::mul(n, b, x) || xa != gf2::mul(n, x, b) {
            continue;
        }
        found[0] = true;
        if gf2::mul(n, x, an) == gf2::mul(n, an, x) {
            found[1] = true;
        }
        if gf2::mul(n, xa, x) == x {
            found[2] |= gf2::preserves(n, x, &w);
            found[3] |= gf2::preserves(n, x, &u);
        }
    }
    [
        (Relation::Minus, found[0]),
        (Relation::GDrazin, found[1]),
        (Relation::GD1, found[2]),
        (Relation::OneGD, found[3]),
    ]
}

fn subspace_checks(t: &mut Tally, ctx: &str, a: &Matrix, b: &Matrix, d: &[(Relation, bool)]) {
    let (am, bm) = (common::stable_power(a), common::stable_power(b));
    let (w_a, w_b) = (am.clone(), bm.clone());
    let (u_a, u_b) = (common::kernel_matrix(&am), common::kernel_matrix(&bm));
    let dim = common::span_dim;
    let sum = |x: &Matrix, y: &Matrix| dim(&common::hcat(&[x, y]));
    if holds(d, Relation::GD1) {
        t.check(sum(&w_b, &w_a) == dim(&w_b), || {
            format!("{ctx}: W_A not inside W_B")
        });
        let meet = u_a.cols() + dim(&w_b) - sum(&u_a, &w_b);
        t.check(dim(&w_b) == dim(&w_a) + meet, || {
            format!("{ctx}: W_B != W_A + (U_A ∩ W_B)")
        });
    }
    if holds(d, Relation::OneGD) {
        t.check(sum(&u_a, &u_b) == u_a.cols(), || {
            format!("{ctx}: U_B not inside U_A")
        });
        let meet = dim(&w_b) + u_a.cols() - sum(&w_b, &u_a);
        t.check(u_a.cols() == u_b.cols() + meet, || {
            format!("{ctx}: U_A != U_B + (W_B ∩ U_A)")
        });
    }
}

fn pair_checks(
    t: &mut Tally,
    ctx: &str,
    a: &Matrix,
    b: &Matrix,
    rng: &mut Lcg,
) -> Result<Vec<(Relation, bool)>> {
    let d = decide(a, b)?;
    let h = |r| holds(&d, r);
    t.check(!h(Relation::GD1) || h(Relation::Minus), || {
        format!("{ctx}: GD1 without minus")
    });
    t.check(!h(Relation::OneGD) || h(Relation::Minus), || {
        format!("{ctx}: 1GD without minus")
    });
    t.check(!h(Relation::GDrazin) || h(Relation::Minus), || {
        format!("{ctx}: GD without minus")
    });
    t.check(!h(Relation::Minus) || h(Relation::Space), || {
        format!("{ctx}: minus without space")
    });
    t.check(h(Relation::GD1OneGD) == h(Relation::GDrazin), || {
        format!("{ctx}: gd1-1gd differs from gd")
    });
    t.check(h(Relation::OneGDGD1) == h(Relation::Minus), || {
        format!("{ctx}: 1gd-gd1 differs from minus")
    });

    t.check(h(Relation::Space) == oracle::space(a, b), || {
        format!("{ctx}: space vs rank oracle")
    });
    t.check(h(Relation::Minus) == oracle::rank_additive(a, b), || {
        format!("{ctx}: minus vs rank additivity")
    });
    t.check(h(Relation::GD1) == oracle::gd1_order(a, b), || {
        format!("{ctx}: GD1 vs rank oracle")
    });
    t.check(h(Relation::OneGD) == oracle::one_gd_order(a, b), || {
        format!("{ctx}: 1GD vs rank oracle")
    });
    if a.field().modulus() == Some(2) && a.rows() <= 3 {
        for (r, want) in gf2_definitions(a, b) {
            t.check(h(r) == want, || {
                format!("{ctx}: {r} {} but brute force {want}", h(r))
            });
        }
    }

    let reverse = decide(b, a)?;
    for &(r, forward) in &d {
        if r != Relation::Space && forward && holds(&reverse, r) {
            t.check(a == b, || format!("{ctx}: {r} not antisymmetric"));
        }
    }

    let tm = common::random_unimodular(a.field(), a.rows(), rng);
    let tm_inv = inverse(&tm)?;
    let conj = |m: &Matrix| &(&tm * m) * &tm_inv;
    let dc = decide(&conj(a), &conj(b))?;
    t.check(d == dc, || {
        format!("{ctx}: not invariant under conjugation")
    });

    subspace_checks(t, ctx, a, b, &d);
    Ok(d)
}

fn order_properties(t: &mut Tally) {
    let modes = [Extension::Minus, Extension::GD1, Extension::OneGD];
    for field in common::test_fields() {
        let label = common::field_label(field);
        let mut rng = Lcg::new(0x5eed_0007 ^ field.modulus().unwrap_or(7) as u64);
        let mut positive = [0usize; 7];
        for i in 0..500 {
            let n = common::size_in(2, 4, &mut rng);
            let a = common::mixed_matrix(field, n, &mut rng, i);
            let b = match i % 4 {
                0 => common::mixed_matrix(field, n, &mut rng, i / 4),
                k => common::extend(&a, modes[k - 1], 2, &mut rng),
            };
            let ctx = format!("{label} pair #{i}");
            let r = (|| -> Result<()> {
                for r in Relation::ALL {
                    t.check(check_order(r, &a, &a)?.holds, || {
                        format!("{ctx}: {r} not reflexive")
                    });
                }
                let d = pair_checks(t, &ctx, &a, &b, &mut rng)?;
                for (k, (_, h)) in d.iter().enumerate() {
                    positive[k] += *h as usize;
                }
                if i % 4 == 2 {
                    t.check(holds(&d, Relation::GD1), || {
                        format!("{ctx}: constructed GD1 pair rejected")
                    });
                }
                if i % 4 == 3 {
                    t.check(holds(&d, Relation::OneGD), || {
                        format!("{ctx}: constructed 1GD pair rejected")
                    });
                }
                if i % 4 == 1 {
                    t.check(holds(&d, Relation::Minus), || {
                        format!("{ctx}: constructed minus pair rejected")
                    });
                }
                Ok(())
            })();
            t.absorb(&ctx, r);
        }
        // Each relation must both hold and fail somewhere in the sample.
        for (k, count) in positive.iter().enumerate() {
            let r = Relation::ALL[k];
            t.check(*count > 0 && *count < 500, || {
                format!("{label}: {r} held on {count}/500 pairs")
            });
        }

        for i in 0..100 {
            let n = common::size_in(2, 4, &mut rng);
            let mode = if i % 2 == 0 {
                Extension::GD1
            } else {
                Extension::OneGD
            };
            let relation = if mode == Extension::GD1 {
                Relation::GD1
            } else {
                Relation::OneGD
            };
            let a = common::mixed_matrix(field, n, &mut rng, i);
            let b = common::extend(&a, mode, 2, &mut rng);
            let c = common::extend(&b, mode, 2, &mut rng);
            let ctx = format!("{label} chain #{i} ({relation})");
            let r = (|| -> Result<()> {
                let ab = check_order(relation, &a, &b)?.holds;
                let bc = check_order(relation, &b, &c)?.holds;
                t.check(ab && bc, || format!("{ctx}: constructed links rejected"));
                if ab && bc {
                    t.check(check_order(relation, &a, &c)?.holds, || {
                        format!("{ctx}: not transitive")
                    });
                    t.check(rank(&c) == rank(&a) + rank(&(&c - &a)), || {
                        format!("{ctx}: composite not rank additive")
                    });
                }
                if a != b {
                    t.check(!check_order(relation, &b, &a)?.holds, || {
                        format!("{ctx}: reversed link holds")
                    });
                }
                Ok(())
            })();
            t.absorb(&ctx, r);
        }
    }
}

fn composition_laws(t: &mut Tally) {
    for field in common::test_fields() {
        let label = common::field_label(field);
        let mut rng = Lcg::new(0x5eed_0008 ^ field.modulus().unwrap_or(8) as u64);
        for i in 0..100 {
            let n = common::size_in(2, 4, &mut rng);
            let a = common::mixed_matrix(field, n, &mut rng, i);
            let ctx = format!("{label} tuple #{i}");
            let r = (|| -> Result<()> {
                let ones = one_inverse_space(&a)?;
                let gds = gdrazin_space(&a)?;
                let seed = 1000 * i as u64;
                let x1 = sample_member(&ones, seed)?;
                let x2 = sample_member(&ones, seed + 1)?;
                let g1 = sample_member(&gds, seed + 2)?;
                let g2 = sample_member(&gds, seed + 3)?;
                t.check(oracle::inner(&a, &x1) && oracle::gdrazin(&a, &g1), || {
                    format!("{ctx}: bad components")
                });

                let refl = gamma_reflexive(&a, &x1, &x2)?;
                t.check(oracle::reflexive(&a, &refl), || {
                    format!("{ctx}: X1·A·X2 not reflexive")
                });
                let gd = gamma_gdrazin(&a, &g1, &g2)?;
                t.check(oracle::gdrazin(&a, &gd), || {
                    format!("{ctx}: Xgd·A·Ygd not G-Drazin")
                });
                let x_gd1 = gd1_from_components(&a, &g1, &x1)?;
                t.check(oracle::gd1(&a, &x_gd1), || {
                    format!("{ctx}: Xgd·A·X1 not GD1")
                });
                let x_1gd = one_gd_from_components(&a, &x1, &g1)?;
                t.check(oracle::one_gd(&a, &x_1gd), || {
                    format!("{ctx}: X1·A·Xgd not 1GD")
                });
                let bil = gamma_bilateral(&a, &x_gd1, &x_1gd)?;
                t.check(
                    oracle::gdrazin(&a, &bil) && oracle::reflexive(&a, &bil),
                    || format!("{ctx}: GD1·A·1GD not in GD ∩ {{1,2}}"),
                );
                let rev = gamma_bilateral_reversed(&a, &x_1gd, &x_gd1)?;
                t.check(oracle::reflexive(&a, &rev), || {
                    format!("{ctx}: 1GD·A·GD1 not reflexive")
                });

                let m = matrix_index(&a)?;
                for s in 1..=m {
                    let as_ = a.pow(s as u32)?;
                    t.check(&as_ * &x_gd1 == &as_ * &x1, || {
                        format!("{ctx}: A^{s}·GD1 != A^{s}·X1")
                    });
                    t.check(&x_gd1 * &as_ == &g1 * &as_, || {
                        format!("{ctx}: GD1·A^{s} != Xgd·A^{s}")
                    });
                    t.check(&as_ * &x_1gd == &as_ * &g1, || {
                        format!("{ctx}: A^{s}·1GD != A^{s}·Xgd")
                    });
                    t.check(&x_1gd * &as_ == &x1 * &as_, || {
                        format!("{ctx}: 1GD·A^{s} != X1·A^{s}")
                    });
                }
                let am = a.pow(m as u32)?;
                t.check(&am * &x_1gd == &x_gd1 * &am, || {
                    format!("{ctx}: A^m·1GD != GD1·A^m")
                });
                t.check(&x_gd1 * &am == &am * &g1, || {
                    format!("{ctx}: GD1·A^m != A^m·Xgd")
                });
                Ok(())
            })();
            t.absorb(&ctx, r);
        }
    }
}
