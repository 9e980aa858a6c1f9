//! Plain-text rendering of a JSON result: one line per leaf, rationals shown
//! as a 6-place decimal followed by the exact value.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;

fn rational_decimal(s: &str) -> Option<f64> {
    if !s.bytes().all(|c| c.is_ascii_digit() || c == b'/' || c == b'-') || s.is_empty() {
        return None;
    }
    let r = BigRational::from_str(s).ok()?;
    r.to_f64().or_else(|| Some(if r.numer().sign() == num_bigint::Sign::Minus { f64::NEG_INFINITY } else { f64::INFINITY }))
}

fn leaves(v: &Value, path: String, out: &mut Vec<(String, String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                leaves(x, p, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object()) => {
            let exact: Vec<String> = xs.iter().map(scalar).collect();
            let dec: Option<Vec<String>> = xs
                .iter()
                .map(|x| x.as_str().and_then(rational_decimal).map(|d| format!("{d:.6}")))
                .collect();
            let joined = format!("({})", exact.join(", "));
            match dec {
                Some(d) if !d.is_empty() => out.push((path, format!("({})", d.join(", ")), joined)),
                _ => out.push((path, joined, String::new())),
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                leaves(x, format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => match rational_decimal(s) {
            Some(d) => out.push((path, format!("{d:.6}"), s.clone())),
            None => out.push((path, s.clone(), String::new())),
        },
        other => out.push((path, scalar(other), String::new())),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn table(v: &Value) -> String {
    let mut rows = vec![];
    leaves(v, String::new(), &mut rows);
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let w1 = rows.iter().filter(|r| !r.2.is_empty()).map(|r| r.1.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, d, e) in rows {
        let line = format!("{k:<w0$}  {d:<w1$}  {e}");
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}
