//! JSON form `{"n": int, "terms": [{"lambda": [ints], "coeff": int}]}`,
//! terms sorted lexicographically descending by `lambda`.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use crate::coeff::Coefficient;
use crate::symfunc::{ExponentVector, SymPoly};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    lambda: ExponentVector,
    coeff: Number,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

/// Renders an exact integer as a JSON number without loss.
pub fn coefficient_to_json<C: Coefficient>(c: &C) -> Number {
    Number::from_str(&c.to_string()).expect("integers are valid JSON numbers")
}

pub fn coefficient_from_json<C: Coefficient>(x: &Number) -> Option<C> {
    C::from_str(&x.to_string()).ok()
}

impl<C: Coefficient> Serialize for SymPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .rev()
            .map(|(k, c)| TermRepr { lambda: k.clone(), coeff: coefficient_to_json(c) })
            .collect();
        PolyRepr { n: self.n(), terms }.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for SymPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut raw = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c = coefficient_from_json::<C>(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("coefficient {} is not an integer", t.coeff)))?;
            raw.push((t.lambda, c));
        }
        SymPoly::canonicalize(repr.n, raw).map_err(D::Error::custom)
    }
}
