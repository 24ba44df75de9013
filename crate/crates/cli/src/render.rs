use std::fmt::Write;

use serde_json::Value;

/// One `path = value` line per scalar leaf, in key order. Arrays of scalars
/// stay on one line.
pub fn flatten(value: &Value) -> String {
    let mut out = String::new();
    walk("", value, &mut out);
    out
}

fn walk(path: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(&p, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                walk(&format!("{path}[{i}]"), v, out);
            }
        }
        _ => writeln!(out, "{path} = {value}").expect("writing to a String"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_values() {
        let v = json!({"a": {"b": 1, "c": [1, 2]}, "d": [{"e": null}], "f": []});
        assert_eq!(flatten(&v), "a.b = 1\na.c = [1,2]\nd[0].e = null\nf = []\n");
    }
}
