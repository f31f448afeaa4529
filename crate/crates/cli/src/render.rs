//! Output helpers. JSON goes through `serde_json::Value`, whose object
//! keys are ordered, so every emission is canonical: parsing and
//! re-serializing a payload reproduces it byte for byte. Numbers ride as
//! decimal strings; nothing is ever a float.

use qcatalan_core::exactnum::{Integer, LaurentPoly};
use serde_json::{json, Value};

pub fn print_json(value: &Value) {
    println!("{}", to_canonical_string(value));
}

pub fn to_canonical_string(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
}

pub fn int_json(v: &Integer) -> Value {
    Value::String(v.to_string())
}

/// Sparse polynomial as ascending (exponent, coefficient) pairs.
pub fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.to_pairs()
            .into_iter()
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect(),
    )
}

/// Exponent -> coefficient object (keys are exponent strings).
pub fn poly_map_json(p: &LaurentPoly) -> Value {
    let mut map = serde_json::Map::new();
    for (e, c) in p.to_pairs() {
        map.insert(e.to_string(), Value::String(c.to_string()));
    }
    Value::Object(map)
}
