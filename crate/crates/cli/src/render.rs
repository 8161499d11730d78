//! Plain-text view of the JSON payloads.
//!
//! Objects print as `key: value` lines, arrays of objects as aligned
//! columns, and everything else in compact JSON.

use serde_json::Value;

pub fn table(v: &Value) -> String {
    let mut out = Vec::new();
    block(v, 0, &mut out);
    out.join("\n")
}

fn block(v: &Value, indent: usize, out: &mut Vec<String>) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_nested(x) {
                    out.push(format!("{pad}{k}:"));
                    block(x, indent + 2, out);
                } else {
                    out.push(format!("{pad}{k}: {}", scalar(x)));
                }
            }
        }
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            columns(rows, &pad, out)
        }
        _ => out.push(format!("{pad}{}", scalar(v))),
    }
}

fn is_nested(v: &Value) -> bool {
    match v {
        Value::Object(m) => !m.is_empty(),
        Value::Array(rows) => !rows.is_empty() && rows.iter().all(Value::is_object),
        _ => false,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        _ => v.to_string(),
    }
}

/// Header from the first row's keys; later rows may add keys.
fn columns(rows: &[Value], pad: &str, out: &mut Vec<String>) {
    let mut keys: Vec<&String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("rows are objects").keys() {
            if !keys.contains(&k) {
                keys.push(k);
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k.as_str()).map_or("-".into(), scalar)).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].len()).chain([k.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| {
        let parts: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{pad}{}", parts.join("  ").trim_end())
    };
    out.push(line(keys.iter().map(|k| k.as_str()).collect()));
    for c in &cells {
        out.push(line(c.iter().map(String::as_str).collect()));
    }
}
