//! Serde for `u128` counts: a JSON number when it fits in 64 bits, a
//! decimal string otherwise. Numbers above 64 bits do not survive serde's
//! buffering of tagged enums, so both forms are accepted on input.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub fn serialize<S: Serializer>(x: &u128, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(*x) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&x.to_string()),
    }
}

struct CountVisitor;

impl Visitor<'_> for CountVisitor {
    type Value = u128;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a non-negative integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<u128, E> {
        Ok(v.into())
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<u128, E> {
        Ok(v)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<u128, E> {
        u128::try_from(v).map_err(|_| E::custom("negative count"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<u128, E> {
        v.parse().map_err(E::custom)
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
    d.deserialize_any(CountVisitor)
}

#[derive(Serialize, Deserialize)]
struct Count(#[serde(with = "self")] u128);

/// The same encoding for optional per-edge count lists.
pub mod edge_counts {
    use super::*;

    type EdgeCount = ((usize, usize), u128);

    pub fn serialize<S: Serializer>(list: &Option<Vec<EdgeCount>>, s: S) -> Result<S::Ok, S::Error> {
        match list {
            None => s.serialize_none(),
            Some(list) => {
                let mut seq = s.serialize_seq(Some(list.len()))?;
                for &(e, c) in list {
                    seq.serialize_element(&(e, Count(c)))?;
                }
                seq.end()
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<EdgeCount>>, D::Error> {
        Ok(Option::<Wrapped>::deserialize(d)?.map(|w| w.0))
    }

    struct Wrapped(Vec<EdgeCount>);

    impl<'de> Deserialize<'de> for Wrapped {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let list: Vec<((usize, usize), Count)> = Vec::deserialize(d)?;
            Ok(Wrapped(list.into_iter().map(|(e, Count(c))| (e, c)).collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::subgraph::{CliqueCount, JointReport};

    #[test]
    fn large_counts_round_trip() {
        let j = JointReport { r: 3, witness_edge: Some((0, 1)), size: u128::MAX, per_edge: Some(vec![((0, 1), 1 << 70), ((0, 2), 5)]) };
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"340282366920938463463374607431768211455\"") && s.contains("[[0,2],5]"));
        assert_eq!(serde_json::from_str::<JointReport>(&s).unwrap(), j);
        let c = CliqueCount { r: 2, count: 7 };
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"r":2,"count":7}"#);
    }
}
