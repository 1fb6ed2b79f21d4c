// JSON encoding for big integers: plain numbers when they fit in an i64,
// decimal strings otherwise.

use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::Int;

struct One<'a>(&'a Int);

impl Serialize for One<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Row<'a>(&'a [Int]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&One(v))?;
        }
        seq.end()
    }
}

pub fn int<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
    One(v).serialize(s)
}

pub fn vec<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
    Row(v).serialize(s)
}

pub fn rows<S: Serializer>(v: &[Vec<Int>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}
