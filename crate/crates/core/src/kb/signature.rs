use std::collections::BTreeSet;

use super::KnowledgeBase;
use crate::syntax::{vocab, Axiom, EntityKind, NameUse};

/// Names of the knowledge base, split by the position they occupy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub class_names: BTreeSet<String>,
    pub role_names: BTreeSet<String>,
    pub annotation_property_names: BTreeSet<String>,
    pub individual_names: BTreeSet<String>,
    /// Names used in some position without a matching declaration anywhere
    /// in the imports closure.
    pub undeclared_uses: BTreeSet<(EntityKind, String)>,
}

impl Signature {
    pub fn is_empty(&self) -> bool {
        self.class_names.is_empty()
            && self.role_names.is_empty()
            && self.annotation_property_names.is_empty()
            && self.individual_names.is_empty()
    }

    pub fn is_undeclared(&self, kind: EntityKind, name: &str) -> bool {
        self.undeclared_uses.contains(&(kind, name.to_string()))
    }
}

/// Annotation properties from the OWL/RDFS vocabularies need no declaration.
fn builtin_annotation_property(name: &str) -> bool {
    name.starts_with(vocab::RDFS) || name.starts_with(vocab::OWL)
}

pub fn signature(kb: &KnowledgeBase) -> Signature {
    let mut sig = Signature::default();
    let mut declared: BTreeSet<(EntityKind, String)> = BTreeSet::new();
    let mut used: Vec<(EntityKind, String)> = Vec::new();

    for axiom in &kb.axioms {
        if let Axiom::Declaration(kind, name) = axiom {
            declared.insert((*kind, name.clone()));
        }
        axiom.visit_names(&mut |u| {
            let entry = match u {
                NameUse::Class(n) => (EntityKind::Class, n),
                NameUse::Role(n) => (EntityKind::ObjectProperty, n),
                NameUse::Individual(n) => (EntityKind::NamedIndividual, n),
                NameUse::AnnotationProperty(n) => (EntityKind::AnnotationProperty, n),
            };
            used.push((entry.0, entry.1.to_string()));
        });
    }

    for (kind, name) in used {
        let set = match kind {
            EntityKind::Class => &mut sig.class_names,
            EntityKind::ObjectProperty => &mut sig.role_names,
            EntityKind::NamedIndividual => &mut sig.individual_names,
            EntityKind::AnnotationProperty => &mut sig.annotation_property_names,
            EntityKind::DataProperty | EntityKind::Datatype => continue,
        };
        set.insert(name.clone());
        let exempt = kind == EntityKind::AnnotationProperty && builtin_annotation_property(&name);
        if !exempt && !declared.contains(&(kind, name.clone())) {
            sig.undeclared_uses.insert((kind, name));
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_kb_has_empty_signature() {
        let sig = signature(&KnowledgeBase::empty());
        assert!(sig.is_empty());
        assert!(sig.undeclared_uses.is_empty());
    }

    #[test]
    fn undeclared_role_is_flagged() {
        let kb = KnowledgeBase::from_text(
            "Class: A SubClassOf: prescribes some B\nClass: B",
            "t.omn",
        )
        .unwrap();
        let sig = signature(&kb);
        assert!(sig.role_names.contains("prescribes"));
        assert!(sig.is_undeclared(EntityKind::ObjectProperty, "prescribes"));
        assert!(!sig.is_undeclared(EntityKind::Class, "B"));
    }

    #[test]
    fn rdfs_label_needs_no_declaration() {
        let kb = KnowledgeBase::from_text(
            "Class: A Annotations: rdfs:label \"a\", skos:definition \"x\"",
            "t.omn",
        )
        .unwrap();
        let sig = signature(&kb);
        assert!(!sig.is_undeclared(EntityKind::AnnotationProperty, vocab::RDFS_LABEL));
        assert!(sig.is_undeclared(EntityKind::AnnotationProperty, vocab::SKOS_DEFINITION));
    }
}
