//! JSON helpers shared by every report type.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Version stamped into every top-level JSON document.
pub const SCHEMA_VERSION: u32 = 1;

/// Serializes as a JSON number when it fits in `u64`, as a decimal string otherwise.
pub fn big_uint<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => serializer.serialize_u64(v),
        None => serializer.serialize_str(&value.to_string()),
    }
}

pub fn opt_big_uint<S: Serializer>(value: &Option<BigUint>, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => big_uint(v, serializer),
        None => serializer.serialize_none(),
    }
}

pub fn big_int<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => serializer.serialize_i64(v),
        None => serializer.serialize_str(&value.to_string()),
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    report: &'a T,
}

/// Canonical JSON text: keys sorted, pretty-printed, so identical inputs
/// give byte-identical output and the text re-serializes unchanged.
pub fn to_canonical_json<T: Serialize>(command: &str, report: &T) -> serde_json::Result<String> {
    let value = serde_json::to_value(Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        report,
    })?;
    serde_json::to_string_pretty(&value)
}
