use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::Value;

use crate::Format;

/// Renders a report. JSON keys are sorted; TSV lists every leaf as
/// `path<TAB>value`, with array positions as path segments.
pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut lines = Vec::new();
            flatten("", value, &mut lines);
            let mut s = String::from("path\tvalue\n");
            for (path, v) in lines {
                s.push_str(&format!("{path}\t{v}\n"));
            }
            s
        }
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) if !map.is_empty() => map.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(items) if !items.is_empty() => {
            items.iter().enumerate().for_each(|(k, v)| flatten(&join(&k.to_string()), v, out))
        }
        Value::String(s) => out.push((prefix.to_string(), s.replace(['\t', '\n'], " "))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub fn emit(value: &Value, format: Format, out: Option<&Path>) -> io::Result<()> {
    let text = render(value, format);
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_lists_leaves_in_key_order() {
        let v = json!({"b": [1, {"c": "x\ty"}], "a": true, "e": []});
        assert_eq!(render(&v, Format::Tsv), "path\tvalue\na\ttrue\nb.0\t1\nb.1.c\tx y\ne\t[]\n");
    }

    #[test]
    fn json_is_pretty_with_sorted_keys() {
        let v = json!({"z": 1, "a": 2});
        assert_eq!(render(&v, Format::Json), "{\n  \"a\": 2,\n  \"z\": 1\n}\n");
    }
}
