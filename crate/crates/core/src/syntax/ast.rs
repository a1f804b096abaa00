//! Abstract syntax for the supported Manchester-syntax fragment.

use std::fmt;

/// Well-known IRIs.
pub mod vocab {
    pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
    pub const DC: &str = "http://purl.org/dc/elements/1.1/";
    pub const DCTERMS: &str = "http://purl.org/dc/terms/";

    pub const OWL_THING: &str = "http://www.w3.org/2002/07/owl#Thing";
    pub const OWL_NOTHING: &str = "http://www.w3.org/2002/07/owl#Nothing";
    pub const RDFS_LITERAL: &str = "http://www.w3.org/2000/01/rdf-schema#Literal";
    pub const SKOS_DEFINITION: &str = "http://www.w3.org/2004/02/skos/core#definition";
    pub const DC_SOURCE: &str = "http://purl.org/dc/elements/1.1/source";
    pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
    pub const RDFS_COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";

    /// Namespace used for synthetic inverse role names. Never shown in reports.
    pub const SYNTHETIC_INVERSE: &str = "urn:sdl:inv#";

    /// Prefixes every prefix environment starts with.
    pub const BUILTIN_PREFIXES: &[(&str, &str)] = &[
        ("owl", OWL),
        ("rdf", RDF),
        ("rdfs", RDFS),
        ("xsd", XSD),
        ("skos", SKOS),
        ("dc", DC),
        ("dcterms", DCTERMS),
    ];
}

/// An object property, possibly inverted.
///
/// `inverse(inverse(r))` collapses back to `r`; the struct only carries a flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoleExpr {
    pub name: String,
    pub inverted: bool,
}

impl RoleExpr {
    pub fn named(name: impl Into<String>) -> Self {
        RoleExpr { name: name.into(), inverted: false }
    }

    pub fn inverse_of(name: impl Into<String>) -> Self {
        RoleExpr { name: name.into(), inverted: true }
    }

    pub fn inverse(&self) -> Self {
        RoleExpr { name: self.name.clone(), inverted: !self.inverted }
    }
}

/// A class expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConceptExpr {
    Top,
    Bottom,
    Named(String),
    /// Conjunction; at least two operands, in source order.
    And(Vec<ConceptExpr>),
    /// Disjunction; at least two operands, in source order.
    Or(Vec<ConceptExpr>),
    Not(Box<ConceptExpr>),
    Some(RoleExpr, Box<ConceptExpr>),
    Only(RoleExpr, Box<ConceptExpr>),
    /// Unqualified at-least restriction.
    Min(u32, RoleExpr),
    /// Unqualified at-most restriction.
    Max(u32, RoleExpr),
    Exact(u32, RoleExpr),
    OneOf(Vec<String>),
    HasValue(RoleExpr, String),
}

impl ConceptExpr {
    pub fn named(name: impl Into<String>) -> Self {
        ConceptExpr::Named(name.into())
    }

    /// Builds a conjunction, collapsing the degenerate zero/one operand cases.
    pub fn and(mut parts: Vec<ConceptExpr>) -> Self {
        match parts.len() {
            0 => ConceptExpr::Top,
            1 => parts.pop().unwrap(),
            _ => ConceptExpr::And(parts),
        }
    }

    /// Builds a disjunction, collapsing the degenerate zero/one operand cases.
    pub fn or(mut parts: Vec<ConceptExpr>) -> Self {
        match parts.len() {
            0 => ConceptExpr::Bottom,
            1 => parts.pop().unwrap(),
            _ => ConceptExpr::Or(parts),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: ConceptExpr) -> Self {
        ConceptExpr::Not(Box::new(c))
    }

    pub fn some(role: RoleExpr, filler: ConceptExpr) -> Self {
        ConceptExpr::Some(role, Box::new(filler))
    }

    pub fn only(role: RoleExpr, filler: ConceptExpr) -> Self {
        ConceptExpr::Only(role, Box::new(filler))
    }

    /// Nesting depth of constructors; names and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            ConceptExpr::Top
            | ConceptExpr::Bottom
            | ConceptExpr::Named(_)
            | ConceptExpr::OneOf(_) => 0,
            ConceptExpr::Min(..)
            | ConceptExpr::Max(..)
            | ConceptExpr::Exact(..)
            | ConceptExpr::HasValue(..) => 1,
            ConceptExpr::And(cs) | ConceptExpr::Or(cs) => {
                1 + cs.iter().map(ConceptExpr::depth).max().unwrap_or(0)
            }
            ConceptExpr::Not(c) | ConceptExpr::Some(_, c) | ConceptExpr::Only(_, c) => {
                1 + c.depth()
            }
        }
    }

    /// Calls `f` on every class name occurring in the expression.
    pub fn visit_names(&self, f: &mut impl FnMut(NameUse<'_>)) {
        match self {
            ConceptExpr::Top | ConceptExpr::Bottom => {}
            ConceptExpr::Named(n) => f(NameUse::Class(n)),
            ConceptExpr::And(cs) | ConceptExpr::Or(cs) => {
                for c in cs {
                    c.visit_names(f);
                }
            }
            ConceptExpr::Not(c) => c.visit_names(f),
            ConceptExpr::Some(r, c) | ConceptExpr::Only(r, c) => {
                f(NameUse::Role(&r.name));
                c.visit_names(f);
            }
            ConceptExpr::Min(_, r) | ConceptExpr::Max(_, r) | ConceptExpr::Exact(_, r) => {
                f(NameUse::Role(&r.name))
            }
            ConceptExpr::OneOf(inds) => {
                for i in inds {
                    f(NameUse::Individual(i));
                }
            }
            ConceptExpr::HasValue(r, i) => {
                f(NameUse::Role(&r.name));
                f(NameUse::Individual(i));
            }
        }
    }

    /// True when the expression mentions a nominal (`{..}` or `value`).
    pub fn has_nominal(&self) -> bool {
        match self {
            ConceptExpr::OneOf(_) | ConceptExpr::HasValue(..) => true,
            ConceptExpr::And(cs) | ConceptExpr::Or(cs) => cs.iter().any(ConceptExpr::has_nominal),
            ConceptExpr::Not(c) | ConceptExpr::Some(_, c) | ConceptExpr::Only(_, c) => {
                c.has_nominal()
            }
            _ => false,
        }
    }
}

/// A name occurrence together with the position it occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameUse<'a> {
    Class(&'a str),
    Role(&'a str),
    Individual(&'a str),
    AnnotationProperty(&'a str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    AnnotationProperty,
    NamedIndividual,
    DataProperty,
    Datatype,
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EntityKind::Class => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::AnnotationProperty => "AnnotationProperty",
            EntityKind::NamedIndividual => "Individual",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::Datatype => "Datatype",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub value: String,
    pub lang: Option<String>,
    pub datatype: Option<String>,
}

impl Literal {
    pub fn plain(value: impl Into<String>) -> Self {
        Literal { value: value.into(), lang: None, datatype: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnnotationValue {
    Literal(Literal),
    Iri(String),
}

impl AnnotationValue {
    /// The text of a literal, or the IRI itself.
    pub fn text(&self) -> &str {
        match self {
            AnnotationValue::Literal(l) => &l.value,
            AnnotationValue::Iri(i) => i,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Annotation {
    pub property: String,
    pub value: AnnotationValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Axiom {
    Declaration(EntityKind, String),
    SubClassOf(ConceptExpr, ConceptExpr),
    EquivalentClasses(Vec<ConceptExpr>),
    DisjointClasses(Vec<ConceptExpr>),
    SubPropertyOf(RoleExpr, RoleExpr),
    EquivalentProperties(Vec<RoleExpr>),
    InverseProperties(String, String),
    TransitiveProperty(String),
    Domain(String, ConceptExpr),
    Range(String, ConceptExpr),
    ClassAssertion(String, ConceptExpr),
    PropertyAssertion(String, RoleExpr, String),
    AnnotationAssertion(String, Annotation),
    Import(String),
    /// Data-property and datatype frame content. Kept for completeness of the
    /// AST; never reasoned over.
    Opaque { subject: String, clause: String, text: String },
}

impl Axiom {
    /// Calls `f` on every name occurrence inside the axiom.
    pub fn visit_names(&self, f: &mut impl FnMut(NameUse<'_>)) {
        match self {
            Axiom::Declaration(kind, n) => match kind {
                EntityKind::Class => f(NameUse::Class(n)),
                EntityKind::ObjectProperty => f(NameUse::Role(n)),
                EntityKind::AnnotationProperty => f(NameUse::AnnotationProperty(n)),
                EntityKind::NamedIndividual => f(NameUse::Individual(n)),
                EntityKind::DataProperty | EntityKind::Datatype => {}
            },
            Axiom::SubClassOf(a, b) => {
                a.visit_names(f);
                b.visit_names(f);
            }
            Axiom::EquivalentClasses(cs) | Axiom::DisjointClasses(cs) => {
                for c in cs {
                    c.visit_names(f);
                }
            }
            Axiom::SubPropertyOf(a, b) => {
                f(NameUse::Role(&a.name));
                f(NameUse::Role(&b.name));
            }
            Axiom::EquivalentProperties(rs) => {
                for r in rs {
                    f(NameUse::Role(&r.name));
                }
            }
            Axiom::InverseProperties(a, b) => {
                f(NameUse::Role(a));
                f(NameUse::Role(b));
            }
            Axiom::TransitiveProperty(r) => f(NameUse::Role(r)),
            Axiom::Domain(r, c) | Axiom::Range(r, c) => {
                f(NameUse::Role(r));
                c.visit_names(f);
            }
            Axiom::ClassAssertion(i, c) => {
                f(NameUse::Individual(i));
                c.visit_names(f);
            }
            Axiom::PropertyAssertion(a, r, b) => {
                f(NameUse::Individual(a));
                f(NameUse::Role(&r.name));
                f(NameUse::Individual(b));
            }
            Axiom::AnnotationAssertion(_, ann) => f(NameUse::AnnotationProperty(&ann.property)),
            Axiom::Import(_) | Axiom::Opaque { .. } => {}
        }
    }

    pub fn is_class_axiom(&self) -> bool {
        matches!(
            self,
            Axiom::SubClassOf(..)
                | Axiom::EquivalentClasses(_)
                | Axiom::DisjointClasses(_)
                | Axiom::Domain(..)
                | Axiom::Range(..)
        )
    }

    pub fn is_role_axiom(&self) -> bool {
        matches!(
            self,
            Axiom::SubPropertyOf(..)
                | Axiom::EquivalentProperties(_)
                | Axiom::InverseProperties(..)
                | Axiom::TransitiveProperty(_)
        )
    }
}

/// An axiom plus the 1-based source line of the clause it was lowered from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourcedAxiom {
    pub axiom: Axiom,
    pub line: u32,
}

/// A parsed `.omn` document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ontology {
    pub iri: Option<String>,
    pub version_iri: Option<String>,
    /// Prefixes declared in the document, in declaration order.
    pub prefixes: Vec<(String, String)>,
    pub axioms: Vec<SourcedAxiom>,
    /// Ontology-level annotations.
    pub annotations: Vec<Annotation>,
}

impl Ontology {
    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> + '_ {
        self.axioms.iter().map(|s| &s.axiom)
    }

    /// IRIs named by `Import:` clauses, in source order.
    pub fn imports(&self) -> impl Iterator<Item = &str> + '_ {
        self.axioms().filter_map(|a| match a {
            Axiom::Import(iri) => Some(iri.as_str()),
            _ => None,
        })
    }

    /// Structural view with source lines dropped, used for round-trip comparisons.
    pub fn structure(&self) -> (Option<&str>, Vec<&Axiom>, &[Annotation]) {
        (self.iri.as_deref(), self.axioms().collect(), &self.annotations)
    }
}
