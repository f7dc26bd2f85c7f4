use std::fmt::Write;

use geninv::document::MatrixDocument;
use geninv::Matrix;
use serde_json::Value;

/// Right-aligned grid, indented two spaces.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        out.push_str("  [");
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let pad = widths[j] - cell.chars().count();
            write!(out, "{}{cell}", " ".repeat(pad)).unwrap();
        }
        out.push_str("]\n");
    }
    if rows.is_empty() || cols == 0 {
        out.push_str("  (empty)\n");
    }
    out
}

pub fn matrix(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    if m.cols() == 0 {
        return format!("  ({} x 0)\n", m.rows());
    }
    grid(&rows)
}

pub fn labelled(label: &str, m: &Matrix) -> String {
    format!("{label}:\n{}", matrix(m))
}

/// A matrix as a document, so structured output can be fed back in.
pub fn doc(m: &Matrix, name: &str) -> Value {
    serde_json::to_value(MatrixDocument::from_matrix(m, Some(name))).expect("documents serialize")
}

pub fn list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
