use std::fmt::Write as _;

use super::ast::{vocab, *};
use super::lexer::CONCEPT_KEYWORDS;
use super::PrefixEnv;

/// Pretty-printer producing Manchester syntax that the parser reads back
/// into the same AST.
#[derive(Debug, Clone)]
pub struct Renderer {
    /// `(prefix, namespace)` pairs, longest namespace first.
    namespaces: Vec<(String, String)>,
}

impl Default for Renderer {
    fn default() -> Self {
        Renderer::new(&PrefixEnv::default())
    }
}

fn is_simple_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-')
        && !CONCEPT_KEYWORDS.contains(&s)
}

fn is_local_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-')
}

impl Renderer {
    pub fn new(env: &PrefixEnv) -> Self {
        let mut namespaces: Vec<(String, String)> =
            env.iter().map(|(p, i)| (p.to_string(), i.to_string())).collect();
        namespaces.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
        Renderer { namespaces }
    }

    pub fn name(&self, name: &str) -> String {
        for (prefix, ns) in &self.namespaces {
            if let Some(local) = name.strip_prefix(ns.as_str()) {
                if is_local_name(local) {
                    return format!("{prefix}:{local}");
                }
            }
        }
        let iri_like = (name.contains("://") || name.starts_with("urn:"))
            && !name.chars().any(|c| c.is_whitespace() || c == '>');
        if is_simple_name(name) {
            name.to_string()
        } else if iri_like || name.contains('\'') {
            format!("<{name}>")
        } else {
            format!("'{name}'")
        }
    }

    pub fn role(&self, r: &RoleExpr) -> String {
        if r.inverted {
            format!("inverse {}", self.name(&r.name))
        } else {
            self.name(&r.name)
        }
    }

    /// Operand position: atoms bare, everything else parenthesised.
    fn operand(&self, c: &ConceptExpr) -> String {
        match c {
            ConceptExpr::Top | ConceptExpr::Bottom | ConceptExpr::Named(_) | ConceptExpr::OneOf(_) => {
                self.concept(c)
            }
            _ => format!("({})", self.concept(c)),
        }
    }

    pub fn concept(&self, c: &ConceptExpr) -> String {
        match c {
            ConceptExpr::Top => "owl:Thing".to_string(),
            ConceptExpr::Bottom => "owl:Nothing".to_string(),
            ConceptExpr::Named(n) => self.name(n),
            ConceptExpr::And(cs) => join(cs.iter().map(|c| self.operand(c)), " and "),
            ConceptExpr::Or(cs) => join(cs.iter().map(|c| self.operand(c)), " or "),
            ConceptExpr::Not(c) => format!("not {}", self.operand(c)),
            ConceptExpr::Some(r, c) => format!("{} some {}", self.role(r), self.operand(c)),
            ConceptExpr::Only(r, c) => format!("{} only {}", self.role(r), self.operand(c)),
            ConceptExpr::Min(n, r) => format!("{} min {n}", self.role(r)),
            ConceptExpr::Max(n, r) => format!("{} max {n}", self.role(r)),
            ConceptExpr::Exact(n, r) => format!("{} exactly {n}", self.role(r)),
            ConceptExpr::OneOf(inds) => {
                format!("{{{}}}", join(inds.iter().map(|i| self.name(i)), ", "))
            }
            ConceptExpr::HasValue(r, i) => format!("{} value {}", self.role(r), self.name(i)),
        }
    }

    fn literal(&self, l: &Literal) -> String {
        let mut s = String::from("\"");
        for ch in l.value.chars() {
            match ch {
                '"' => s.push_str("\\\""),
                '\\' => s.push_str("\\\\"),
                '\n' => s.push_str("\\n"),
                '\t' => s.push_str("\\t"),
                c => s.push(c),
            }
        }
        s.push('"');
        if let Some(lang) = &l.lang {
            let _ = write!(s, "@{lang}");
        } else if let Some(dt) = &l.datatype {
            if dt == &format!("{}integer", vocab::XSD) && l.value.chars().all(|c| c.is_ascii_digit()) && !l.value.is_empty() {
                return l.value.clone();
            }
            let _ = write!(s, "^^{}", self.name(dt));
        }
        s
    }

    pub fn annotation(&self, a: &Annotation) -> String {
        let value = match &a.value {
            AnnotationValue::Literal(l) => self.literal(l),
            AnnotationValue::Iri(i) => self.name(i),
        };
        format!("{} {}", self.name(&a.property), value)
    }

    /// Renders one axiom in the standalone `C SubClassOf D` form used by
    /// entailment manifests, or as a one-frame snippet for other axioms.
    pub fn axiom(&self, axiom: &Axiom) -> String {
        match axiom {
            Axiom::SubClassOf(a, b) => format!("{} SubClassOf {}", self.operand(a), self.operand(b)),
            Axiom::EquivalentClasses(cs) if cs.len() == 2 => {
                format!("{} EquivalentTo {}", self.operand(&cs[0]), self.operand(&cs[1]))
            }
            Axiom::DisjointClasses(cs) if cs.len() == 2 => {
                format!("{} DisjointWith {}", self.operand(&cs[0]), self.operand(&cs[1]))
            }
            other => {
                let mut out = String::new();
                self.loose_axiom(&mut out, other);
                out.trim_end().to_string()
            }
        }
    }

    /// Axioms that do not continue the current frame.
    fn loose_axiom(&self, out: &mut String, axiom: &Axiom) {
        let _ = match axiom {
            Axiom::Declaration(kind, n) => writeln!(out, "{}: {}", kind, self.name(n)),
            Axiom::Import(iri) => writeln!(out, "Import: <{iri}>"),
            Axiom::SubClassOf(ConceptExpr::Named(a), b) => {
                writeln!(out, "Class: {}\n    SubClassOf: {}", self.name(a), self.concept(b))
            }
            Axiom::EquivalentClasses(cs) => writeln!(
                out,
                "EquivalentClasses: {}",
                join(cs.iter().map(|c| self.concept(c)), ", ")
            ),
            Axiom::DisjointClasses(cs) => writeln!(
                out,
                "DisjointClasses: {}",
                join(cs.iter().map(|c| self.concept(c)), ", ")
            ),
            Axiom::EquivalentProperties(rs) => writeln!(
                out,
                "EquivalentProperties: {}",
                join(rs.iter().map(|r| self.role(r)), ", ")
            ),
            other => {
                // Everything else needs a subject frame.
                match frame_of(other) {
                    Some((kind, subject)) => {
                        let _ = writeln!(out, "{}: {}", kind, self.name(subject));
                        self.section(out, other).map(|_| ())
                            .unwrap_or_else(|| {
                                let _ = writeln!(out, "    # cannot render axiom");
                            });
                        Ok(())
                    }
                    None => match other {
                        Axiom::AnnotationAssertion(subject, _) | Axiom::Opaque { subject, .. } => {
                            let _ = writeln!(out, "Class: {}", self.name(subject));
                            self.section(out, other);
                            Ok(())
                        }
                        _ => writeln!(out, "# cannot render axiom: {other:?}"),
                    },
                }
            }
        };
    }

    /// Writes `axiom` as a section of the open frame; `None` if it does not
    /// belong to a frame.
    fn section(&self, out: &mut String, axiom: &Axiom) -> Option<()> {
        let line = match axiom {
            Axiom::SubClassOf(ConceptExpr::Named(_), b) => format!("SubClassOf: {}", self.concept(b)),
            Axiom::SubClassOf(ConceptExpr::Top, ConceptExpr::Max(1, r)) => {
                if r.inverted {
                    "Characteristics: InverseFunctional".to_string()
                } else {
                    "Characteristics: Functional".to_string()
                }
            }
            Axiom::EquivalentClasses(cs) if cs.len() == 2 => format!("EquivalentTo: {}", self.concept(&cs[1])),
            Axiom::DisjointClasses(cs) if cs.len() == 2 => format!("DisjointWith: {}", self.concept(&cs[1])),
            Axiom::SubPropertyOf(_, r) => format!("SubPropertyOf: {}", self.role(r)),
            Axiom::EquivalentProperties(rs) if rs.len() == 2 && !rs[0].inverted => {
                format!("EquivalentTo: {}", self.role(&rs[1]))
            }
            Axiom::InverseProperties(_, b) => format!("InverseOf: {}", self.name(b)),
            Axiom::TransitiveProperty(_) => "Characteristics: Transitive".to_string(),
            Axiom::Domain(_, c) => format!("Domain: {}", self.concept(c)),
            Axiom::Range(_, c) => format!("Range: {}", self.concept(c)),
            Axiom::ClassAssertion(_, c) => format!("Types: {}", self.concept(c)),
            Axiom::PropertyAssertion(_, r, b) => format!("Facts: {} {}", self.role(r), self.name(b)),
            Axiom::AnnotationAssertion(_, a) => format!("Annotations: {}", self.annotation(a)),
            Axiom::Opaque { clause, text, .. } => format!("{clause}: {text}"),
            _ => return None,
        };
        let _ = writeln!(out, "    {line}");
        Some(())
    }

    pub fn ontology(&self, ont: &Ontology) -> String {
        let mut out = String::new();
        for (p, iri) in &ont.prefixes {
            let _ = writeln!(out, "Prefix: {p}: <{iri}>");
        }
        if ont.iri.is_some() || !ont.annotations.is_empty() {
            out.push_str("Ontology:");
            if let Some(iri) = &ont.iri {
                let _ = write!(out, " <{iri}>");
            }
            if let Some(v) = &ont.version_iri {
                let _ = write!(out, " <{v}>");
            }
            out.push('\n');
            if !ont.annotations.is_empty() {
                let _ = writeln!(
                    out,
                    "Annotations: {}",
                    join(ont.annotations.iter().map(|a| self.annotation(a)), ",\n    ")
                );
            }
        }
        out.push('\n');

        // Current open frame: (kind, subject).
        let mut open: Option<(EntityKind, String)> = None;
        for axiom in ont.axioms() {
            if let Axiom::Declaration(kind, name) = axiom {
                out.push('\n');
                let _ = writeln!(out, "{}: {}", kind, self.name(name));
                open = Some((*kind, name.clone()));
                continue;
            }
            let continues = match (&open, axiom) {
                (Some((_, s)), Axiom::AnnotationAssertion(subject, _))
                | (Some((_, s)), Axiom::Opaque { subject, .. }) => s == subject,
                (Some((k, s)), _) => frame_of(axiom) == Some((*k, s.as_str())),
                (None, _) => false,
            };
            if continues && self.section(&mut out, axiom).is_some() {
                continue;
            }
            open = None;
            out.push('\n');
            self.loose_axiom(&mut out, axiom);
        }
        out
    }
}

/// The frame an axiom is written in when it continues a frame.
fn frame_of(axiom: &Axiom) -> Option<(EntityKind, &str)> {
    use EntityKind::*;
    match axiom {
        Axiom::SubClassOf(ConceptExpr::Named(a), _) => Some((Class, a)),
        Axiom::SubClassOf(ConceptExpr::Top, ConceptExpr::Max(1, r)) => Some((ObjectProperty, &r.name)),
        Axiom::EquivalentClasses(cs) | Axiom::DisjointClasses(cs) if cs.len() == 2 => match &cs[0] {
            ConceptExpr::Named(a) => Some((Class, a)),
            _ => None,
        },
        Axiom::SubPropertyOf(a, _) if !a.inverted => Some((ObjectProperty, &a.name)),
        Axiom::EquivalentProperties(rs) if rs.len() == 2 && !rs[0].inverted => {
            Some((ObjectProperty, &rs[0].name))
        }
        Axiom::InverseProperties(a, _) | Axiom::TransitiveProperty(a) => Some((ObjectProperty, a)),
        Axiom::Domain(a, _) | Axiom::Range(a, _) => Some((ObjectProperty, a)),
        Axiom::ClassAssertion(i, _) | Axiom::PropertyAssertion(i, _, _) => Some((NamedIndividual, i)),
        Axiom::AnnotationAssertion(..) | Axiom::Opaque { .. } => None,
        _ => None,
    }
}

fn join(parts: impl Iterator<Item = String>, sep: &str) -> String {
    parts.collect::<Vec<_>>().join(sep)
}

/// Renders a class expression with builtin prefixes only.
pub fn render_concept(c: &ConceptExpr) -> String {
    Renderer::default().concept(c)
}

pub fn render_axiom(a: &Axiom) -> String {
    Renderer::default().axiom(a)
}

/// Renders a full ontology using its own prefix declarations.
pub fn render_ontology(ont: &Ontology) -> String {
    Renderer::new(&PrefixEnv::for_ontology(ont)).ontology(ont)
}
