//! Browser bindings for the demo page under `www/`.
//!
//! Every export takes matrix documents as JSON strings and returns a JSON
//! string, or an error message.

use geninv::decomp::{fitting_decomposition, index_info};
use geninv::document::{parse_matrix_json, MatrixDocument};
use geninv::family::{family as build_family, ParamId};
use geninv::inverses::{is_member, InverseKind};
use geninv::orders::{check_order as run_check, Relation};
use geninv::Matrix;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn doc(m: &Matrix) -> Value {
    serde_json::to_value(MatrixDocument::from_matrix(m, None)).expect("documents serialize")
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

#[wasm_bindgen]
pub fn decompose(matrix: &str) -> Result<String, String> {
    let a = parse_matrix_json(matrix).map_err(err)?;
    let info = index_info(&a).map_err(err)?;
    let d = fitting_decomposition(&a).map_err(err)?;
    Ok(json!({
        "index": info.index,
        "matrix_index": info.matrix_convention,
        "rank_profile": info.rank_profile,
        "r": d.r(),
        "chain_lengths": d.chain_lengths(),
        "c": doc(&d.c),
        "p": doc(&d.p),
        "j": doc(&d.j),
    })
    .to_string())
}

/// Family of `kind` (`gd1` or `1gd`) with the member at `values`, a JSON
/// object of parameter names to entries. Missing parameters default to zero.
#[wasm_bindgen]
pub fn family(matrix: &str, kind: &str, values: &str) -> Result<String, String> {
    let kind = match kind {
        "gd1" => InverseKind::GD1,
        "1gd" => InverseKind::OneGD,
        other => return Err(format!("unknown family kind {other:?}")),
    };
    let a = parse_matrix_json(matrix).map_err(err)?;
    let fam = build_family(kind, &a).map_err(err)?;

    let mut assignment = fam.zero_assignment();
    let given: Value = if values.trim().is_empty() {
        json!({})
    } else {
        serde_json::from_str(values).map_err(err)?
    };
    let given = given
        .as_object()
        .ok_or("parameter values must be a JSON object")?;
    for (name, entry) in given {
        let id: ParamId = name.parse().map_err(err)?;
        if !fam.params.contains(&id) {
            return Err(format!("{name} is not a free parameter"));
        }
        let text = entry
            .as_str()
            .ok_or_else(|| format!("value of {name} must be a string"))?;
        let text = if text.trim().is_empty() { "0" } else { text };
        assignment.insert(id, fam.field().parse(text).map_err(err)?);
    }
    let member = fam.evaluate(&assignment).map_err(err)?;
    let verified = is_member(kind, &a, &member).map_err(err)?;

    let rules: Vec<String> = fam
        .dependent_rules()
        .iter()
        .map(|r| format!("{} = {r}", ParamId::new(r.row, r.col)))
        .collect();
    Ok(json!({
        "param_count": fam.param_count(),
        "params": fam.params,
        "template": fam.template_strings(),
        "dependent": rules,
        "member": doc(&member),
        "verified": verified,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn check_order(a: &str, b: &str, relation: &str) -> Result<String, String> {
    let relation: Relation = relation.parse().map_err(err)?;
    let a = parse_matrix_json(a).map_err(err)?;
    let b = parse_matrix_json(b).map_err(err)?;
    let report = run_check(relation, &a, &b).map_err(err)?;
    Ok(json!({
        "relation": relation.name(),
        "holds": report.holds,
        "evidence": report.evidence,
        "witness": report.witness.as_ref().map(doc),
    })
    .to_string())
}
