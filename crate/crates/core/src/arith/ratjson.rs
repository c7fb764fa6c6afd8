//! `serde(with = ...)` adapter writing rationals as canonical strings.

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&super::format_rational(v))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    super::parse_rational(&s).map_err(serde::de::Error::custom)
}
