use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural number or the single symbol for "infinite".
///
/// Distinct infinite cardinalities are not distinguished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

impl Cardinality {
    pub fn is_infinite(self) -> bool {
        matches!(self, Cardinality::Infinite)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }
}

impl From<usize> for Cardinality {
    fn from(n: usize) -> Self {
        Cardinality::Finite(n)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => f.write_str("infinite"),
        }
    }
}

/// Serialized as a JSON number, or the string `"infinite"`.
impl Serialize for Cardinality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinality::Finite(n) => s.serialize_u64(*n as u64),
            Cardinality::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Cardinality {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Cardinality::Finite(n as usize)),
            Raw::S(s) if s == "infinite" => Ok(Cardinality::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("not a cardinality: {s}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&Cardinality::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Cardinality::Infinite).unwrap(), "\"infinite\"");
        let back: Cardinality = serde_json::from_str("\"infinite\"").unwrap();
        assert!(back.is_infinite());
        assert!(Cardinality::Finite(10) < Cardinality::Infinite);
    }
}
