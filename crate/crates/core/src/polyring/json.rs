//! `[{"e":[e1,e2,e3],"c":"<decimal>"}, ...]`, sorted by exponent triple.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Exponent, Polynomial};
use crate::scalar::Coefficient;

#[derive(Serialize, Deserialize)]
struct Term {
    e: Exponent,
    c: String,
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.terms().map(|(e, c)| Term { e: *e, c: c.to_string() }).collect();
        terms.serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut out = Polynomial::zero();
        for term in terms {
            let c: C = term.c.parse().map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", term.c)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in polynomial"));
            }
            if out.terms.insert(term.e, c).is_some() {
                return Err(D::Error::custom(format!("repeated exponent {:?}", term.e)));
            }
        }
        Ok(out)
    }
}
