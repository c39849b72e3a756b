//! CSV and plain-text renderings of reports.

use serde_json::Value;

use super::ReportEnvelope;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

/// Decimal interval `["lo", "hi"]`.
fn as_interval(v: &Value) -> Option<String> {
    match v.as_array()?.as_slice() {
        [Value::String(lo), Value::String(hi)] => Some(format!("[{lo},{hi}]")),
        _ => None,
    }
}

fn is_exact_element(v: &Value) -> bool {
    v.get("coeffs").is_some() && v.get("conductor").is_some()
}

/// Scalar leaves with dotted paths; matrices, lists and exact field elements are skipped.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) if !is_exact_element(v) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Object(_) => {}
        Value::Array(_) => {
            if let Some(s) = as_interval(v) {
                out.push((prefix.to_string(), s));
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV row per scan level, otherwise a single row.
pub fn to_csv(r: &ReportEnvelope) -> String {
    let rows: Vec<&Value> = match r.results.get("rows").and_then(Value::as_array) {
        Some(rows) => rows.iter().collect(),
        None => vec![&r.results],
    };
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|row| {
            let mut out = vec![("command".to_string(), r.command.clone())];
            flatten("", row, &mut out);
            out
        })
        .collect();
    let header: Vec<String> = flat.first().map(|f| f.iter().map(|(k, _)| k.clone()).collect()).unwrap_or_default();
    let mut s = header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",");
    s.push('\n');
    for row in &flat {
        let cells: Vec<String> = header
            .iter()
            .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| csv_field(v)).unwrap_or_default())
            .collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// `key: value` lines for reading at a terminal.
pub fn to_pretty(r: &ReportEnvelope) -> String {
    let mut s = format!("{} (levels {:?})\n", r.command, r.levels);
    let rows: Vec<&Value> = match r.results.get("rows").and_then(Value::as_array) {
        Some(rows) => rows.iter().collect(),
        None => vec![&r.results],
    };
    for row in rows {
        let mut out = Vec::new();
        flatten("", row, &mut out);
        for (k, v) in out {
            s.push_str(&format!("  {k}: {v}\n"));
        }
        s.push('\n');
    }
    s
}
