//! Serializes `BigInt` as a JSON number when it fits in `i64`/`u64`, else as a
//! decimal string.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};

pub fn serialize_one<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if let Ok(v) = u64::try_from(x) {
        s.serialize_u64(v)
    } else if let Ok(v) = i64::try_from(x) {
        s.serialize_i64(v)
    } else {
        s.serialize_str(&x.to_string())
    }
}

struct One<'a>(&'a BigInt);

impl serde::Serialize for One<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_one(self.0, s)
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&One(x))?;
        }
        seq.end()
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => serialize_one(v, s),
            None => s.serialize_none(),
        }
    }
}

pub mod single {
    pub use super::serialize_one as serialize;
}
