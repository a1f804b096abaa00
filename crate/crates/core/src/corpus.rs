//! The bundled Seamless Digital Engineering ontology: a three-layer imports
//! closure (BFO stub, CCO stub, SDE) and its entailment manifest.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{class_names, entails_with, unsatisfiable_classes, ClassifyError, UnsatClass};
use crate::kb::{resolve_with, signature, Document, FetchError, KbError, KnowledgeBase, OntologySource};
use crate::lint::{lint, LintConfig, LintFinding, Severity};
use crate::syntax::{parse_class_axiom, Axiom, NameUse, PrefixEnv};
use crate::tableau::{Reasoner, ReasonerError, TableauConfig};

pub const BFO_STUB: &str = include_str!("../../../corpus/bfo-stub.omn");
pub const CCO_STUB: &str = include_str!("../../../corpus/cco-stub.omn");
pub const SDE: &str = include_str!("../../../corpus/sde.omn");
pub const CATALOG: &str = include_str!("../../../corpus/catalog.json");
pub const MANIFEST: &str = include_str!("../../../corpus/manifest.json");

pub const BFO_IRI: &str = "urn:sdl:corpus:bfo-stub";
pub const CCO_IRI: &str = "urn:sdl:corpus:cco-stub";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus is corrupt: {0}")]
    CorpusCorrupt(String),
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    /// Manchester class axiom, e.g. `'Seamless Interface' SubClassOf Interface`.
    pub axiom: String,
    pub expected: bool,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntailmentManifest {
    pub entries: Vec<ManifestEntry>,
}

impl EntailmentManifest {
    pub fn from_json(text: &str) -> Result<Self, CorpusError> {
        serde_json::from_str(text).map_err(|e| CorpusError::CorpusCorrupt(format!("manifest.json: {e}")))
    }

    /// Parses every entry and checks that it only uses names of `kb`.
    pub fn parse(&self, kb: &KnowledgeBase) -> Result<Vec<Axiom>, CorpusError> {
        let sig = signature(kb);
        let env = PrefixEnv::for_ontology(&kb.root_ontology().ast);
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let axiom = parse_class_axiom(&e.axiom, &env)
                    .map_err(|err| CorpusError::CorpusCorrupt(format!("manifest entry {i}: {err}")))?;
                let mut unknown = Vec::new();
                axiom.visit_names(&mut |u| match u {
                    NameUse::Class(n) if !sig.class_names.contains(n) => unknown.push(n.to_string()),
                    NameUse::Role(n) if !sig.role_names.contains(n) => unknown.push(n.to_string()),
                    _ => {}
                });
                if let Some(n) = unknown.first() {
                    return Err(CorpusError::CorpusCorrupt(format!("manifest entry {i} uses unknown name '{n}'")));
                }
                Ok(axiom)
            })
            .collect()
    }
}

/// Serves the embedded stub ontologies by IRI.
struct Embedded;

impl OntologySource for Embedded {
    fn fetch(&self, iri: &str) -> Result<Document, FetchError> {
        let (name, text) = match iri {
            BFO_IRI => ("corpus/bfo-stub.omn", BFO_STUB),
            CCO_IRI => ("corpus/cco-stub.omn", CCO_STUB),
            _ => return Err(FetchError::NotFound),
        };
        Ok(Document { name: name.into(), text: text.into() })
    }
}

/// Loads the embedded corpus and its manifest.
pub fn load_corpus() -> Result<(KnowledgeBase, EntailmentManifest), CorpusError> {
    let root = Document { name: "corpus/sde.omn".into(), text: SDE.into() };
    let kb = resolve_with(root, &Embedded).map_err(|e: KbError| CorpusError::CorpusCorrupt(e.to_string()))?;
    let manifest = EntailmentManifest::from_json(MANIFEST)?;
    manifest.parse(&kb)?;
    Ok((kb, manifest))
}

/// Outcome of one manifest entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryOutcome {
    #[serde(flatten)]
    pub entry: ManifestEntry,
    pub actual: bool,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.entry.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub consistent: bool,
    pub class_count: usize,
    pub unsatisfiable: Vec<UnsatClass>,
    pub entries: Vec<EntryOutcome>,
    pub lint_errors: Vec<LintFinding>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.consistent
            && self.unsatisfiable.is_empty()
            && self.entries.iter().all(EntryOutcome::passed)
            && self.lint_errors.is_empty()
    }
}

/// Consistency, unsatisfiable classes, every manifest entry, and lint.
pub fn verify(kb: &KnowledgeBase, manifest: &EntailmentManifest) -> Result<VerifyReport, CorpusError> {
    let reasoner = Reasoner::new(kb, TableauConfig::default())?;
    let consistent = reasoner.is_consistent()?.is_satisfiable();
    let unsatisfiable = unsatisfiable_classes(kb)?;
    let axioms = manifest.parse(kb)?;
    let entries = manifest
        .entries
        .iter()
        .zip(&axioms)
        .map(|(e, a)| Ok(EntryOutcome { entry: e.clone(), actual: entails_with(&reasoner, a)? }))
        .collect::<Result<_, CorpusError>>()?;
    let lint_errors = lint(kb, &LintConfig::default())
        .into_iter()
        .filter(|f| f.severity == Severity::Error)
        .collect();
    Ok(VerifyReport { consistent, class_count: class_names(kb).len(), unsatisfiable, entries, lint_errors })
}

/// Class names declared in the root ontology.
pub fn root_classes(kb: &KnowledgeBase) -> BTreeSet<String> {
    kb.sourced_axioms()
        .filter(|(_, _, src)| src.ontology == kb.root)
        .filter_map(|(_, a, _)| match a {
            Axiom::Declaration(crate::syntax::EntityKind::Class, n) => Some(n.clone()),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_catalog_matches_files() {
        let cat: std::collections::BTreeMap<String, String> = serde_json::from_str(CATALOG).unwrap();
        assert_eq!(cat[BFO_IRI], "bfo-stub.omn");
        assert_eq!(cat[CCO_IRI], "cco-stub.omn");
    }

    #[test]
    fn corpus_loads_three_layers() {
        let (kb, manifest) = load_corpus().unwrap();
        assert_eq!(kb.ontologies.len(), 3);
        assert_eq!(kb.root_ontology().file, "corpus/sde.omn");
        assert!(manifest.entries.len() >= 25);
    }

    #[test]
    fn manifest_with_unknown_name_is_corrupt() {
        let (kb, _) = load_corpus().unwrap();
        let bad = EntailmentManifest {
            entries: vec![ManifestEntry { axiom: "Nonexistent SubClassOf Paradigm".into(), expected: true, source: "x".into() }],
        };
        assert!(matches!(bad.parse(&kb), Err(CorpusError::CorpusCorrupt(_))));
    }
}
