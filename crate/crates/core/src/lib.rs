//! Ontology toolkit: Manchester-syntax parsing, import resolution, a tableau
//! reasoner for SHIN-style description logics, classification and
//! authoring-discipline linting.

pub mod classify;
pub mod corpus;
pub mod kb;
pub mod lint;
pub mod logic;
pub mod oracle;
pub mod syntax;
pub mod tableau;
