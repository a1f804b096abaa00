//! Frozen expectations shared by the corpus tests and the acceptance suite.

/// Classes made unsatisfiable by `DisjointClasses('Product Capability',
/// 'Seamless Integration')`: the class itself and every class whose
/// definition requires an existential whose filler implies it. Certified by
/// the Horn chase in `corpus_oracle.rs`.
pub const INJECTED_UNSAT: [&str; 6] = [
    "Seamless Digital Engineering Environment",
    "Seamless Digital Engineering Paradigm",
    "Seamless Integration",
    "Seamless Interaction Capability",
    "Seamless Quality Claim",
    "Seamless Quality-in-Use",
];
