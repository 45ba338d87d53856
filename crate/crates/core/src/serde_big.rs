//! JSON encoding for exact integers: a plain number when it fits in `u64`,
//! otherwise a decimal string.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serializer;

pub(crate) fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => serializer.serialize_u64(v),
        None => serializer.serialize_str(&value.to_str_radix(10)),
    }
}

pub(crate) mod option {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(
        value: &Option<BigUint>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => super::serialize(v, serializer),
            None => serializer.serialize_none(),
        }
    }
}
