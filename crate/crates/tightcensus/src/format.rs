//! Output formats.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Renders a report in the requested format, ending with a newline.
pub fn render(v: &Value, f: Format) -> String {
    match f {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")),
        Format::Table => table(v),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Reports with a `rows` array of objects become a column table; anything
/// else becomes one `key  value` line per leaf, arrays kept inline.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    if let Some(Value::Array(rows)) = v.get("rows") {
        if let Some(Value::Object(first)) = rows.first() {
            let cols: Vec<&String> = first.keys().collect();
            let cells: Vec<Vec<String>> =
                rows.iter().map(|r| cols.iter().map(|c| scalar(&r[c.as_str()])).collect()).collect();
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
                .collect();
            let line = |items: Vec<&str>| {
                items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect::<Vec<_>>().join("  ")
            };
            out.push_str(&line(cols.iter().map(|s| s.as_str()).collect()));
            out.push('\n');
            for r in &cells {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
                out.push('\n');
            }
        }
        let mut rest = v.clone();
        rest.as_object_mut().expect("reports are objects").remove("rows");
        flatten("", &rest, &mut out);
        return out;
    }
    flatten("", v, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str("  ");
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
}
