//! Serialization helpers: big integers render as decimal strings so JSON
//! output stays exact and readable.

use num_bigint::BigInt;
use serde::Serializer;

pub fn bigint_str<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn opt_bigint_str<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}
