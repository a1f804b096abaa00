//! Lowering of parsed axioms into the reasoner's internal logic.

mod gci;
mod nnf;
mod roles;

use std::fmt;

use thiserror::Error;

pub use gci::{to_gcis, Gci};
pub use nnf::{is_nnf, negate, nnf};
pub use roles::{role_closure, role_closure_with, RoleBox, RoleId};

/// Constructs outside the reasoning tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Feature {
    Nominal,
    Datatype,
    /// Cardinality restriction over a role with a transitive sub-role.
    NonSimpleCardinality,
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feature::Nominal => "nominal",
            Feature::Datatype => "datatype",
            Feature::NonSimpleCardinality => "cardinality on non-simple role",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unsupported feature: {feature}: {detail}")]
pub struct UnsupportedFeature {
    pub feature: Feature,
    pub detail: String,
}
