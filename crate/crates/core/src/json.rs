//! JSON helpers: integers are emitted as plain JSON numbers at any size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub fn number(v: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(serde_json::Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub struct Big<'a>(pub &'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?.serialize(serializer)
    }
}

pub struct BigList<'a>(pub &'a [BigInt]);

impl Serialize for BigList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(Big))
    }
}
