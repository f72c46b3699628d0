//! `serialize_with` helpers: rationals are written as `"p/q"` strings (plain
//! `"p"` for integers) so no precision is lost in JSON.

use serde::ser::{SerializeSeq, Serializer};

use super::Rat;

pub fn rat<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn rats<S: Serializer>(xs: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn opt_rat<S: Serializer>(x: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

/// `[[root, multiplicity], ...]`.
pub fn roots<S: Serializer>(xs: &[(Rat, usize)], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for (r, m) in xs {
        seq.serialize_element(&(r.to_string(), m))?;
    }
    seq.end()
}
