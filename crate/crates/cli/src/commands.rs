use std::fmt::Write;
use std::path::Path;

use geninv::decomp::{fitting_decomposition, index_info};
use geninv::document::parse_matrix_json;
use geninv::family::{
    enumerate_family, family as build_family, Assignment, InverseFamily, ParamId,
};
use geninv::fixtures::FixtureSet;
use geninv::inverses::{is_member, membership, InverseKind};
use geninv::orders::{check_order, Relation};
use geninv::replay::{self, EXAMPLES};
use geninv::Matrix;
use serde_json::{json, Map, Value};

use crate::render;

pub struct Output {
    /// Whether the queried property holds; drives the exit status.
    pub holds: bool,
    pub text: String,
    pub json: Value,
}

pub type CmdResult = Result<Output, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<Matrix, String> {
    parse_matrix_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn decompose(file: &Path) -> CmdResult {
    let a = load(file)?;
    let info = index_info(&a).map_err(|e| e.to_string())?;
    let d = fitting_decomposition(&a).map_err(|e| e.to_string())?;
    let cn = d.core_nilpotent();
    let lengths = d.chain_lengths();

    let mut text = String::new();
    writeln!(text, "size: {}", d.n()).unwrap();
    writeln!(text, "index: {}", info.index).unwrap();
    writeln!(
        text,
        "index (matrix convention): {}",
        info.matrix_convention
    )
    .unwrap();
    writeln!(text, "rank profile: {}", render::list(&info.rank_profile)).unwrap();
    writeln!(text, "r = dim W: {}", d.r()).unwrap();
    writeln!(text, "chain lengths: {}", render::list(&lengths)).unwrap();
    for (label, m) in [
        ("basis W", &d.basis_w),
        ("basis U", &d.basis_u),
        ("C", &d.c),
        ("A1", &cn.a1),
        ("A2", &cn.a2),
        ("P", &d.p),
        ("J", &d.j),
    ] {
        text.push_str(&render::labelled(label, m));
    }

    let json = json!({
        "size": d.n(),
        "index": info.index,
        "matrix_index": info.matrix_convention,
        "rank_profile": info.rank_profile,
        "r": d.r(),
        "chain_lengths": lengths,
        "basis_w": render::doc(&d.basis_w, "basis_w"),
        "basis_u": render::doc(&d.basis_u, "basis_u"),
        "c": render::doc(&d.c, "C"),
        "a1": render::doc(&cn.a1, "A1"),
        "a2": render::doc(&cn.a2, "A2"),
        "p": render::doc(&d.p, "P"),
        "j": render::doc(&d.j, "J"),
    });
    Ok(Output {
        holds: true,
        text,
        json,
    })
}

fn assignment_from_file(fam: &InverseFamily, path: &Path) -> Result<Assignment, String> {
    let value: Value =
        serde_json::from_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let object = value
        .as_object()
        .ok_or_else(|| format!("{}: expected an object of parameter values", path.display()))?;
    let mut assignment = Assignment::new();
    for (name, entry) in object {
        let id: ParamId = name.parse().map_err(|e: geninv::Error| e.to_string())?;
        if !fam.params.contains(&id) {
            return Err(format!("{name} is not a free parameter of this family"));
        }
        let text = entry
            .as_str()
            .ok_or_else(|| format!("value of {name} must be a string"))?;
        let value = fam.field().parse(text).map_err(|e| e.to_string())?;
        assignment.insert(id, value);
    }
    Ok(assignment)
}

fn requested_assignment(fam: &InverseFamily, choice: &str) -> Result<Assignment, String> {
    if choice == "zero" {
        return Ok(fam.zero_assignment());
    }
    if let Some(seed) = choice.strip_prefix("random:") {
        let seed = seed
            .parse::<u64>()
            .map_err(|_| format!("bad seed in {choice:?}"))?;
        return Ok(fam.random_assignment(seed));
    }
    assignment_from_file(fam, Path::new(choice))
}

pub fn family(
    file: &Path,
    kind: InverseKind,
    params: Option<&str>,
    enumerate: bool,
    cap: u128,
) -> CmdResult {
    let a = load(file)?;
    let fam = build_family(kind, &a).map_err(|e| e.to_string())?;

    let mut members: Vec<(Option<Assignment>, Matrix)> = Vec::new();
    if let Some(choice) = params {
        let assignment = requested_assignment(&fam, choice)?;
        let x = fam.evaluate(&assignment).map_err(|e| e.to_string())?;
        members.push((Some(assignment), x));
    }
    if enumerate {
        let all = enumerate_family(&fam, cap).map_err(|e| e.to_string())?;
        members.extend(all.into_iter().map(|x| (None, x)));
    }
    for (_, x) in &members {
        if !is_member(kind, &a, x).map_err(|e| e.to_string())? {
            return Err(format!(
                "internal error: computed member is not a {kind} inverse"
            ));
        }
    }

    let template = fam.template_strings();
    let rules: Vec<(String, String)> = fam
        .dependent_rules()
        .iter()
        .map(|r| (ParamId::new(r.row, r.col).to_string(), r.to_string()))
        .collect();

    let mut text = String::new();
    writeln!(text, "kind: {kind}").unwrap();
    writeln!(text, "param count: {}", fam.param_count()).unwrap();
    writeln!(text, "params: {}", render::list(&fam.params)).unwrap();
    write!(text, "template (J basis):\n{}", render::grid(&template)).unwrap();
    if !rules.is_empty() {
        text.push_str("dependent entries:\n");
        for (entry, rule) in &rules {
            writeln!(text, "  {entry} = {rule}").unwrap();
        }
    }
    text.push_str(&render::labelled("P", &fam.decomposition.p));
    for (k, (assignment, x)) in members.iter().enumerate() {
        match assignment {
            Some(asg) => {
                let parts: Vec<String> = asg.iter().map(|(p, v)| format!("{p} = {v}")).collect();
                writeln!(text, "member {} ({}):", k + 1, parts.join(", ")).unwrap();
            }
            None => writeln!(text, "member {}:", k + 1).unwrap(),
        }
        text.push_str(&render::matrix(x));
    }

    let json = json!({
        "kind": kind,
        "param_count": fam.param_count(),
        "params": fam.params,
        "template": template,
        "dependent": rules
            .iter()
            .map(|(entry, rule)| json!({"entry": entry, "rule": rule}))
            .collect::<Vec<_>>(),
        "p": render::doc(&fam.decomposition.p, "P"),
        "members": members
            .iter()
            .enumerate()
            .map(|(k, (asg, x))| {
                let assignment: Option<Map<String, Value>> = asg.as_ref().map(|asg| {
                    asg.iter()
                        .map(|(p, v)| (p.to_string(), Value::String(v.to_string())))
                        .collect()
                });
                json!({
                    "assignment": assignment,
                    "matrix": render::doc(x, &format!("member {}", k + 1)),
                })
            })
            .collect::<Vec<_>>(),
    });
    Ok(Output {
        holds: true,
        text,
        json,
    })
}

pub fn check(a: &Path, b: &Path, relation: Relation) -> CmdResult {
    let (ma, mb) = (load(a)?, load(b)?);
    let report = check_order(relation, &ma, &mb).map_err(|e| e.to_string())?;

    let mut text = String::new();
    let verdict = if report.holds {
        "holds"
    } else {
        "does not hold"
    };
    writeln!(text, "{relation} order: A <= B {verdict}").unwrap();
    for ev in &report.evidence {
        let mark = if ev.holds { "ok" } else { "FAILS" };
        writeln!(text, "  {}: {mark}", ev.check).unwrap();
    }
    if let Some(w) = &report.witness {
        text.push_str(&render::labelled("witness", w));
    }

    let mut json = serde_json::to_value(&report).expect("reports serialize");
    json["witness"] = report
        .witness
        .as_ref()
        .map_or(Value::Null, |w| render::doc(w, "witness"));
    Ok(Output {
        holds: report.holds,
        text,
        json,
    })
}

pub fn verify(a: &Path, x: &Path, kind: InverseKind) -> CmdResult {
    let (ma, mx) = (load(a)?, load(x)?);
    let result = membership(kind, &ma, &mx).map_err(|e| e.to_string())?;

    let mut text = String::new();
    if result.holds() {
        writeln!(text, "X is a {kind} inverse of A").unwrap();
    } else {
        writeln!(text, "X is not a {kind} inverse of A").unwrap();
        for id in &result.failed {
            writeln!(text, "  fails: {}", id.describe()).unwrap();
        }
    }

    let json = json!({
        "kind": kind,
        "holds": result.holds(),
        "failed": result.failed.iter().map(|id| id.describe()).collect::<Vec<_>>(),
    });
    Ok(Output {
        holds: result.holds(),
        text,
        json,
    })
}

pub fn paper_examples(list: bool, fixture_dir: Option<&Path>) -> CmdResult {
    if list {
        let mut text = String::new();
        for e in EXAMPLES {
            writeln!(text, "{}: {}", e.name, e.description).unwrap();
            writeln!(text, "  fixtures: {}", e.fixtures.join(", ")).unwrap();
        }
        return Ok(Output {
            holds: true,
            text,
            json: serde_json::to_value(EXAMPLES).expect("examples serialize"),
        });
    }

    let fixtures = match fixture_dir {
        Some(dir) => FixtureSet::from_dir(dir).map_err(|e| e.to_string())?,
        None => FixtureSet::builtin(),
    };
    let outcomes = replay::run_all(&fixtures);
    let mut text = String::new();
    let mut reports = Vec::new();
    for o in &outcomes {
        let uses = replay::example(&o.name).map_or(&[][..], |e| e.fixtures);
        if o.passed {
            writeln!(text, "PASS {}", o.name).unwrap();
        } else {
            writeln!(text, "FAIL {} (fixtures: {})", o.name, uses.join(", ")).unwrap();
            for f in &o.failures {
                writeln!(text, "  - {f}").unwrap();
            }
        }
        reports.push(json!({
            "name": o.name,
            "passed": o.passed,
            "fixtures": uses,
            "failures": o.failures,
        }));
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(text, "{passed}/{} examples passed", outcomes.len()).unwrap();
    Ok(Output {
        holds: passed == outcomes.len(),
        text,
        json: json!({ "examples": reports }),
    })
}
