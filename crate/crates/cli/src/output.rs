//! Canonical JSON: sorted keys, every number as an exact decimal string.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use spinor_core::arith::{fmt_rat, Rat};

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rat(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

pub fn count(x: usize) -> Value {
    Value::String(x.to_string())
}

pub fn vec(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    let sorted: BTreeMap<&str, Value> = fields.into_iter().collect();
    Value::Object(sorted.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

/// Objects are built in key order, so re-serializing parsed output
/// reproduces it byte for byte.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}
