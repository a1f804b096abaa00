//! Knowledge-base assembly: import-closure resolution through a local
//! catalog, the merged axiom list with source locations, the signature and
//! the asserted (told) class hierarchy.

mod catalog;
mod signature;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::path::Path;

use thiserror::Error;

use crate::syntax::{parse_ontology, Axiom, ConceptExpr, Ontology, SyntaxError};

pub use catalog::{Catalog, Document, OntologySource};
pub use signature::{signature, Signature};

#[derive(Debug, Error)]
pub enum KbError {
    #[error("{file}:1:1: cannot read file: {source}")]
    Io {
        file: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{error}")]
    Syntax { file: String, error: SyntaxError },
    #[error("{file}:{line}:1: no catalog entry for imported ontology <{iri}>")]
    MissingImport { iri: String, file: String, line: u32 },
    #[error("{file}:{line}:1: import cycle: {}", .path.join(" -> "))]
    ImportCycle { path: Vec<String>, file: String, line: u32 },
    #[error("{file}:1:1: invalid catalog: {message}")]
    Catalog { file: String, message: String },
}

/// One ontology document of the imports closure.
#[derive(Debug, Clone)]
pub struct LoadedOntology {
    /// IRI the ontology was requested under (or declared, for the root).
    pub iri: Option<String>,
    /// File path or other display name of the document.
    pub file: String,
    pub ast: Ontology,
}

impl LoadedOntology {
    /// Label used in import paths and reports.
    pub fn label(&self) -> &str {
        self.iri.as_deref().unwrap_or(&self.file)
    }
}

/// Where an axiom came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceRef {
    /// Index into [`KnowledgeBase::ontologies`].
    pub ontology: usize,
    pub line: u32,
}

/// The merged imports closure. Immutable once built.
#[derive(Debug, Clone)]
pub struct KnowledgeBase {
    /// Loaded ontologies in dependency order: every ontology precedes its
    /// importers, so the root is last.
    pub ontologies: Vec<LoadedOntology>,
    /// All axioms, ordered by (ontology order, source line).
    pub axioms: Vec<Axiom>,
    /// `source_index[i]` locates `axioms[i]`.
    pub source_index: Vec<SourceRef>,
    /// Index of the root ontology in `ontologies`.
    pub root: usize,
}

impl KnowledgeBase {
    /// A knowledge base made of a single ontology with no import handling.
    pub fn from_ontology(ast: Ontology, file: impl Into<String>) -> Self {
        let loaded = LoadedOntology { iri: ast.iri.clone(), file: file.into(), ast };
        Self::assemble(vec![loaded], 0)
    }

    /// Parses `text` and wraps it as a single-ontology knowledge base.
    pub fn from_text(text: &str, file: impl Into<String>) -> Result<Self, KbError> {
        let file = file.into();
        let ast = parse_ontology(text).map_err(|error| KbError::Syntax { file: file.clone(), error })?;
        Ok(Self::from_ontology(ast, file))
    }

    pub fn empty() -> Self {
        Self::from_ontology(Ontology::default(), "<empty>")
    }

    fn assemble(ontologies: Vec<LoadedOntology>, root: usize) -> Self {
        let mut axioms = Vec::new();
        let mut source_index = Vec::new();
        for (idx, ont) in ontologies.iter().enumerate() {
            let mut entries: Vec<_> = ont.ast.axioms.iter().collect();
            entries.sort_by_key(|s| s.line);
            for s in entries {
                axioms.push(s.axiom.clone());
                source_index.push(SourceRef { ontology: idx, line: s.line });
            }
        }
        KnowledgeBase { ontologies, axioms, source_index, root }
    }

    pub fn root_ontology(&self) -> &LoadedOntology {
        &self.ontologies[self.root]
    }

    /// `(file, line)` of axiom `index`.
    pub fn location(&self, index: usize) -> (&str, u32) {
        let src = self.source_index[index];
        (&self.ontologies[src.ontology].file, src.line)
    }

    /// Axioms together with their source references.
    pub fn sourced_axioms(&self) -> impl Iterator<Item = (usize, &Axiom, SourceRef)> + '_ {
        self.axioms
            .iter()
            .enumerate()
            .map(|(i, a)| (i, a, self.source_index[i]))
    }

    /// Returns a copy with `extra` appended to the root ontology.
    pub fn with_axioms(&self, extra: impl IntoIterator<Item = Axiom>) -> Self {
        let mut ontologies = self.ontologies.clone();
        let root = &mut ontologies[self.root].ast;
        let last = root.axioms.iter().map(|s| s.line).max().unwrap_or(0);
        for (line, axiom) in (last + 1..).zip(extra) {
            root.axioms.push(crate::syntax::SourcedAxiom { axiom, line });
        }
        Self::assemble(ontologies, self.root)
    }
}

/// Loads `root_file` and everything it transitively imports, looking
/// imported IRIs up in `catalog`.
pub fn resolve_imports(root_file: &Path, catalog: &Catalog) -> Result<KnowledgeBase, KbError> {
    let root = Document::read(root_file)?;
    resolve_with(root, catalog)
}

/// Resolves the imports closure of an already-read root document against any
/// ontology source.
pub fn resolve_with(root: Document, source: &dyn OntologySource) -> Result<KnowledgeBase, KbError> {
    let parse = |doc: &Document| {
        parse_ontology(&doc.text).map_err(|error| KbError::Syntax { file: doc.name.clone(), error })
    };

    let root_ast = parse(&root)?;
    let mut loaded = vec![LoadedOntology { iri: root_ast.iri.clone(), file: root.name.clone(), ast: root_ast }];
    let mut by_iri: HashMap<String, usize> = HashMap::new();
    if let Some(iri) = &loaded[0].iri {
        by_iri.insert(iri.clone(), 0);
    }

    // Breadth-first load; each IRI is fetched once.
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let imports: Vec<(String, u32)> = loaded[idx]
            .ast
            .axioms
            .iter()
            .filter_map(|s| match &s.axiom {
                Axiom::Import(iri) => Some((iri.clone(), s.line)),
                _ => None,
            })
            .collect();
        for (iri, line) in imports {
            if by_iri.contains_key(&iri) {
                continue;
            }
            let doc = source.fetch(&iri).map_err(|e| match e {
                FetchError::NotFound => KbError::MissingImport {
                    iri: iri.clone(),
                    file: loaded[idx].file.clone(),
                    line,
                },
                FetchError::Failed(err) => err,
            })?;
            let ast = parse(&doc)?;
            by_iri.insert(iri.clone(), loaded.len());
            queue.push_back(loaded.len());
            loaded.push(LoadedOntology { iri: Some(iri), file: doc.name, ast });
        }
    }

    let edges: Vec<Vec<(usize, u32)>> = loaded
        .iter()
        .map(|o| {
            o.ast
                .axioms
                .iter()
                .filter_map(|s| match &s.axiom {
                    Axiom::Import(iri) => by_iri.get(iri).map(|&t| (t, s.line)),
                    _ => None,
                })
                .collect()
        })
        .collect();

    let order = dependency_order(&loaded, &edges)?;
    let mut position = vec![0; loaded.len()];
    for (pos, &idx) in order.iter().enumerate() {
        position[idx] = pos;
    }
    let mut slots: Vec<Option<LoadedOntology>> = loaded.into_iter().map(Some).collect();
    let ordered: Vec<LoadedOntology> = order.iter().map(|&i| slots[i].take().unwrap()).collect();
    Ok(KnowledgeBase::assemble(ordered, position[0]))
}

/// Failure modes of [`OntologySource::fetch`].
#[derive(Debug)]
pub enum FetchError {
    NotFound,
    Failed(KbError),
}

/// Post-order DFS from the root: imports before importers. Reports the first
/// cycle met as a path that starts and ends at the same ontology.
fn dependency_order(
    loaded: &[LoadedOntology],
    edges: &[Vec<(usize, u32)>],
) -> Result<Vec<usize>, KbError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let mut marks = vec![Mark::New; loaded.len()];
    let mut order = Vec::with_capacity(loaded.len());
    let mut stack: Vec<usize> = Vec::new();

    fn visit(
        node: usize,
        loaded: &[LoadedOntology],
        edges: &[Vec<(usize, u32)>],
        marks: &mut Vec<Mark>,
        stack: &mut Vec<usize>,
        order: &mut Vec<usize>,
    ) -> Result<(), KbError> {
        marks[node] = Mark::Active;
        stack.push(node);
        for &(next, line) in &edges[node] {
            match marks[next] {
                Mark::Done => {}
                Mark::Active => {
                    let start = stack.iter().position(|&n| n == next).unwrap();
                    let mut path: Vec<String> =
                        stack[start..].iter().map(|&n| loaded[n].label().to_string()).collect();
                    path.push(loaded[next].label().to_string());
                    return Err(KbError::ImportCycle {
                        path,
                        file: loaded[node].file.clone(),
                        line,
                    });
                }
                Mark::New => visit(next, loaded, edges, marks, stack, order)?,
            }
        }
        stack.pop();
        marks[node] = Mark::Done;
        order.push(node);
        Ok(())
    }

    visit(0, loaded, edges, &mut marks, &mut stack, &mut order)?;
    Ok(order)
}

/// Asserted subsumptions between named classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ToldHierarchy {
    pub edges: BTreeMap<String, BTreeSet<String>>,
}

impl ToldHierarchy {
    pub fn direct_supers(&self, class: &str) -> impl Iterator<Item = &str> + '_ {
        self.edges.get(class).into_iter().flatten().map(String::as_str)
    }

    pub fn has_edge(&self, sub: &str, sup: &str) -> bool {
        self.edges.get(sub).is_some_and(|s| s.contains(sup))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    /// Reflexive-transitive closure of the told edges from `class`.
    pub fn ancestors(&self, class: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::from([class.to_string()]);
        let mut todo = vec![class.to_string()];
        while let Some(c) = todo.pop() {
            for s in self.direct_supers(&c) {
                if seen.insert(s.to_string()) {
                    todo.push(s.to_string());
                }
            }
        }
        seen
    }
}

/// Edge `A -> B` for every `SubClassOf(A, B)` between named classes and both
/// directions for every pair of named members of an equivalence.
pub fn told_hierarchy(kb: &KnowledgeBase) -> ToldHierarchy {
    let mut h = ToldHierarchy::default();
    let mut add = |a: &str, b: &str| {
        h.edges.entry(a.to_string()).or_default().insert(b.to_string());
    };
    for axiom in &kb.axioms {
        match axiom {
            Axiom::SubClassOf(ConceptExpr::Named(a), ConceptExpr::Named(b)) => add(a, b),
            Axiom::EquivalentClasses(cs) => {
                let named: Vec<&str> = cs
                    .iter()
                    .filter_map(|c| match c {
                        ConceptExpr::Named(n) => Some(n.as_str()),
                        _ => None,
                    })
                    .collect();
                for a in &named {
                    for b in &named {
                        if a != b {
                            add(a, b);
                        }
                    }
                }
            }
            _ => {}
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    struct Mem(BTreeMap<&'static str, &'static str>);

    impl OntologySource for Mem {
        fn fetch(&self, iri: &str) -> Result<Document, FetchError> {
            self.0
                .get(iri)
                .map(|t| Document { name: format!("{iri}.omn"), text: t.to_string() })
                .ok_or(FetchError::NotFound)
        }
    }

    fn root(text: &str) -> Document {
        Document { name: "root.omn".into(), text: text.into() }
    }

    #[test]
    fn diamond_imports_load_once() {
        let src = Mem(BTreeMap::from([
            ("urn:bfo", "Ontology: <urn:bfo>\nClass: entity\n"),
            ("urn:cco", "Ontology: <urn:cco>\nImport: <urn:bfo>\nClass: Agent SubClassOf: entity\n"),
        ]));
        let kb = resolve_with(
            root("Ontology: <urn:sde>\nImport: <urn:bfo>\nImport: <urn:cco>\nClass: X SubClassOf: Agent\n"),
            &src,
        )
        .unwrap();
        let labels: Vec<_> = kb.ontologies.iter().map(|o| o.label().to_string()).collect();
        assert_eq!(labels, vec!["urn:bfo", "urn:cco", "urn:sde"]);
        assert_eq!(kb.root, 2);
        let total: usize = kb.ontologies.iter().map(|o| o.ast.axioms.len()).sum();
        assert_eq!(kb.axioms.len(), total);
        assert_eq!(kb.source_index.len(), kb.axioms.len());
    }

    #[test]
    fn no_imports_single_ontology() {
        let kb = resolve_with(root("Class: A"), &Mem(BTreeMap::new())).unwrap();
        assert_eq!(kb.ontologies.len(), 1);
    }

    #[test]
    fn import_cycle_is_reported() {
        let src = Mem(BTreeMap::from([("urn:B", "Ontology: <urn:B>\nImport: <urn:A>\n")]));
        let err = resolve_with(root("Ontology: <urn:A>\nImport: <urn:B>\n"), &src).unwrap_err();
        match err {
            KbError::ImportCycle { path, .. } => assert_eq!(path, vec!["urn:A", "urn:B", "urn:A"]),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn missing_import_names_the_iri() {
        let err = resolve_with(root("Ontology: <urn:A>\n\nImport: <urn:nowhere>\n"), &Mem(BTreeMap::new()))
            .unwrap_err();
        assert!(matches!(&err, KbError::MissingImport { iri, line: 3, .. } if iri == "urn:nowhere"));
        assert!(err.to_string().starts_with("root.omn:3:1:"));
    }

    #[test]
    fn told_edges() {
        let kb = KnowledgeBase::from_text(
            "Class: A SubClassOf: B, r some C\nClass: C EquivalentTo: D, E and F",
            "t.omn",
        )
        .unwrap();
        let h = told_hierarchy(&kb);
        assert!(h.has_edge("A", "B"));
        assert!(h.has_edge("C", "D") && h.has_edge("D", "C"));
        assert_eq!(h.edge_count(), 3);
        assert!(told_hierarchy(&KnowledgeBase::empty()).edges.is_empty());
    }
}
