//! Serializable certificates shared by the separation searches.

use serde::Serialize;

use crate::cardinality::Cardinality;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparationKind {
    Matroid,
    Tutte,
}

/// How a certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificatePath {
    /// Found by enumerating partitions.
    Search,
    /// Derived from another separation by the component argument.
    Constructive,
    /// The component argument got stuck and a search took over.
    Fallback,
}

/// One side of a partition: explicit ids, or a generator description for
/// infinite sides of periodic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Ids(Vec<String>),
    Described(String),
}

impl Side {
    pub fn ids(&self) -> Option<&[String]> {
        match self {
            Side::Ids(v) => Some(v),
            Side::Described(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub kind: SeparationKind,
    pub ell: usize,
    pub x: Side,
    pub y: Side,
    pub boundary: Option<Cardinality>,
    pub kappa: Option<Cardinality>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_f: Option<Vec<String>>,
    pub path: CertificatePath,
    pub exhaustive: bool,
}

/// Outcome of a search for an ℓ-separation of one kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationSearch {
    pub ell: usize,
    pub found: Option<SeparationReport>,
    /// With `found == None`: every partition up to swapping sides was tried.
    pub exhaustive: bool,
}

/// Connectivity up to a cap. `value == cap` means "at least `cap`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub value: usize,
    pub cap: usize,
    /// False when `value` is only an upper bound from searched families.
    pub exhaustive: bool,
    /// A separation of order `value`, when `value < cap`.
    pub witness: Option<SeparationReport>,
}
