//! Authoring-discipline checks: definitions, source provenance, no new
//! object properties, and declaration before use.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kb::KnowledgeBase;
use crate::syntax::{vocab, AnnotationValue, Axiom, EntityKind, NameUse, Renderer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    L1,
    L2,
    L3,
    L4,
    L5,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LintFinding {
    pub rule_id: RuleId,
    pub severity: Severity,
    pub subject: String,
    pub message: String,
    pub file: String,
    pub line: u32,
}

impl fmt::Display for LintFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:1: {}[{}] {}: {}", self.file, self.line, self.severity, self.rule_id, self.subject, self.message)
    }
}

/// Kind of source a definition was taken from, highest priority first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SourceCategory {
    IsoStandard,
    OtherCanonical,
    DictionaryOrWikipedia,
    Unknown,
}

impl SourceCategory {
    pub const ALL: [SourceCategory; 4] = [
        SourceCategory::IsoStandard,
        SourceCategory::OtherCanonical,
        SourceCategory::DictionaryOrWikipedia,
        SourceCategory::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SourceCategory::IsoStandard => "isoStandard",
            SourceCategory::OtherCanonical => "otherCanonical",
            SourceCategory::DictionaryOrWikipedia => "dictionaryOrWikipedia",
            SourceCategory::Unknown => "unknown",
        }
    }
}

/// A source annotation and its category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceClassification {
    pub category: SourceCategory,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default, deny_unknown_fields)]
pub struct LintConfig {
    pub definition_property: String,
    pub source_property: String,
    /// Case-insensitive substrings marking a canonical non-ISO source.
    pub canonical_patterns: Vec<String>,
    pub include_imports: bool,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            definition_property: vocab::SKOS_DEFINITION.to_string(),
            source_property: vocab::DC_SOURCE.to_string(),
            canonical_patterns: [
                "INCOSE",
                "Systems Engineering Body of Knowledge",
                "SEBoK",
                "NASA Systems Engineering Handbook",
                "Defense Acquisition University",
                "DAU Glossary",
                "Academic literature",
            ]
            .map(String::from)
            .to_vec(),
            include_imports: false,
        }
    }
}

impl LintConfig {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

const DICTIONARY_PATTERNS: [&str; 5] = ["wikipedia", "dictionary", "wordnet", "wiktionary", "merriam-webster"];

/// Categorizes a citation: an `ISO`, `IEC` or `IEEE` prefix makes an
/// international standard; then the configured canonical patterns; then
/// encyclopedias and dictionaries.
pub fn classify_source(citation: &str, config: &LintConfig) -> SourceCategory {
    let text = citation.trim();
    let standard = ["ISO", "IEC", "IEEE"].iter().any(|p| {
        text.strip_prefix(p)
            .is_some_and(|rest| rest.chars().next().is_none_or(|c| !c.is_alphabetic()))
    });
    let lower = text.to_lowercase();
    if standard {
        SourceCategory::IsoStandard
    } else if config.canonical_patterns.iter().any(|p| lower.contains(&p.to_lowercase())) {
        SourceCategory::OtherCanonical
    } else if DICTIONARY_PATTERNS.iter().any(|p| lower.contains(p)) {
        SourceCategory::DictionaryOrWikipedia
    } else {
        SourceCategory::Unknown
    }
}

fn annotation_text(value: &AnnotationValue) -> String {
    match value {
        AnnotationValue::Literal(l) => l.value.clone(),
        AnnotationValue::Iri(i) => i.clone(),
    }
}

/// Annotation values of `property` on each subject, over the whole closure.
fn annotations<'a>(kb: &'a KnowledgeBase, property: &str) -> BTreeMap<&'a str, Vec<String>> {
    let mut out: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for axiom in &kb.axioms {
        if let Axiom::AnnotationAssertion(subject, a) = axiom {
            if a.property == property {
                out.entry(subject.as_str()).or_default().push(annotation_text(&a.value));
            }
        }
    }
    out
}

/// Classes declared in the linted ontologies, with their declaration site.
fn linted_classes<'a>(kb: &'a KnowledgeBase, config: &LintConfig) -> Vec<(&'a str, usize)> {
    let mut seen = BTreeSet::new();
    kb.sourced_axioms()
        .filter(|(_, _, src)| config.include_imports || src.ontology == kb.root)
        .filter_map(|(i, a, _)| match a {
            Axiom::Declaration(EntityKind::Class, name) if name != vocab::OWL_THING && name != vocab::OWL_NOTHING => {
                Some((name.as_str(), i))
            }
            _ => None,
        })
        .filter(|(name, _)| seen.insert(*name))
        .collect()
}

fn best_category(sources: &[String], config: &LintConfig) -> Option<SourceCategory> {
    sources.iter().map(|s| classify_source(s, config)).min()
}

pub fn lint(kb: &KnowledgeBase, config: &LintConfig) -> Vec<LintFinding> {
    let renderer = Renderer::new(&crate::syntax::PrefixEnv::for_ontology(&kb.root_ontology().ast));
    let show = |n: &str| renderer.name(n);
    let mut findings = Vec::new();
    let mut push = |rule_id, severity, subject: String, message: String, axiom: usize| {
        let (file, line) = kb.location(axiom);
        findings.push(LintFinding { rule_id, severity, subject, message, file: file.to_string(), line });
    };

    let definitions = annotations(kb, &config.definition_property);
    let sources = annotations(kb, &config.source_property);
    let classes = linted_classes(kb, config);
    for &(class, at) in &classes {
        let n = definitions.get(class).map_or(0, Vec::len);
        if n != 1 {
            let message = if n == 0 {
                format!("no {} annotation", show(&config.definition_property))
            } else {
                format!("{n} {} annotations, expected exactly one", show(&config.definition_property))
            };
            push(RuleId::L1, Severity::Error, show(class), message, at);
        }
        match sources.get(class).and_then(|s| best_category(s, config)) {
            None => push(
                RuleId::L2,
                Severity::Error,
                show(class),
                format!("no {} annotation", show(&config.source_property)),
                at,
            ),
            Some(SourceCategory::Unknown) => push(
                RuleId::L2,
                Severity::Warning,
                show(class),
                format!("source of unknown category: {}", sources[class].join("; ")),
                at,
            ),
            Some(_) => {}
        }
    }

    // Object properties declared in the imports, as opposed to the root.
    let imported_roles: BTreeSet<&str> = kb
        .sourced_axioms()
        .filter(|(_, _, src)| src.ontology != kb.root)
        .filter_map(|(_, a, _)| match a {
            Axiom::Declaration(EntityKind::ObjectProperty, name) => Some(name.as_str()),
            _ => None,
        })
        .collect();
    let mut flagged = BTreeSet::new();
    for (i, a, src) in kb.sourced_axioms() {
        if let Axiom::Declaration(EntityKind::ObjectProperty, name) = a {
            if src.ontology == kb.root && !imported_roles.contains(name.as_str()) && flagged.insert(name) {
                push(
                    RuleId::L3,
                    Severity::Error,
                    show(name),
                    "new object property declared in the root ontology; reuse an imported one".into(),
                    i,
                );
            }
        }
    }

    let declared: BTreeSet<(EntityKind, &str)> = kb
        .axioms
        .iter()
        .filter_map(|a| match a {
            Axiom::Declaration(kind, name) => Some((*kind, name.as_str())),
            _ => None,
        })
        .collect();
    let mut reported = BTreeSet::new();
    for (i, a, src) in kb.sourced_axioms() {
        if !(config.include_imports || src.ontology == kb.root) {
            continue;
        }
        let mut missing = Vec::new();
        a.visit_names(&mut |u| {
            let (kind, name) = match u {
                NameUse::Class(n) => (EntityKind::Class, n),
                NameUse::Role(n) => (EntityKind::ObjectProperty, n),
                NameUse::Individual(n) => (EntityKind::NamedIndividual, n),
                NameUse::AnnotationProperty(n) => {
                    let builtin = n.starts_with(vocab::RDFS) || n.starts_with(vocab::OWL);
                    if builtin || n == config.definition_property || n == config.source_property {
                        return;
                    }
                    (EntityKind::AnnotationProperty, n)
                }
            };
            if !declared.contains(&(kind, name)) {
                missing.push((kind, name.to_string()));
            }
        });
        for (kind, name) in missing {
            if reported.insert((kind, name.clone())) {
                push(RuleId::L4, Severity::Error, show(&name), format!("{kind} used without a declaration"), i);
            }
        }
    }

    let summary = provenance_summary(kb, config);
    let root_decl = kb
        .sourced_axioms()
        .find(|(_, _, src)| src.ontology == kb.root)
        .map(|(_, _, src)| src.line)
        .unwrap_or(1);
    findings.push(LintFinding {
        rule_id: RuleId::L5,
        severity: Severity::Info,
        subject: kb.root_ontology().label().to_string(),
        message: format!(
            "definition sources: {}",
            SourceCategory::ALL.map(|c| format!("{} {}", c.as_str(), summary[&c])).join(", ")
        ),
        file: kb.root_ontology().file.clone(),
        line: root_decl,
    });

    findings.sort_by(|a, b| (&a.file, a.line, a.rule_id).cmp(&(&b.file, b.line, b.rule_id)));
    findings
}

/// Number of linted classes per best source category. Classes without any
/// source count as `unknown`, so the counts partition the class set.
pub fn provenance_summary(kb: &KnowledgeBase, config: &LintConfig) -> BTreeMap<SourceCategory, usize> {
    let sources = annotations(kb, &config.source_property);
    let mut counts: BTreeMap<SourceCategory, usize> = SourceCategory::ALL.iter().map(|&c| (c, 0)).collect();
    for (class, _) in linted_classes(kb, config) {
        let best = sources
            .get(class)
            .and_then(|s| best_category(s, config))
            .unwrap_or(SourceCategory::Unknown);
        *counts.get_mut(&best).unwrap() += 1;
    }
    counts
}

/// Whether any finding is an error.
pub fn has_errors(findings: &[LintFinding]) -> bool {
    findings.iter().any(|f| f.severity == Severity::Error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Vec<LintFinding> {
        lint(&KnowledgeBase::from_text(text, "t.omn").unwrap(), &LintConfig::default())
    }

    fn rules(f: &[LintFinding]) -> Vec<(RuleId, Severity)> {
        f.iter().filter(|f| f.rule_id != RuleId::L5).map(|f| (f.rule_id, f.severity)).collect()
    }

    #[test]
    fn source_categories() {
        let c = LintConfig::default();
        assert_eq!(classify_source("ISO/IEC 25010", &c), SourceCategory::IsoStandard);
        assert_eq!(classify_source("IEEE 1012", &c), SourceCategory::IsoStandard);
        assert_eq!(classify_source("ISOTOPE handbook", &c), SourceCategory::Unknown);
        assert_eq!(classify_source("INCOSE Needs and Requirements Manual", &c), SourceCategory::OtherCanonical);
        assert_eq!(classify_source("Wikipedia: Principle", &c), SourceCategory::DictionaryOrWikipedia);
        assert_eq!(classify_source("a conversation", &c), SourceCategory::Unknown);
    }

    #[test]
    fn bare_class_gets_l1_and_l2() {
        let f = run("Ontology:\nClass: A\n");
        assert_eq!(rules(&f), [(RuleId::L1, Severity::Error), (RuleId::L2, Severity::Error)]);
        assert_eq!(f[0].line, 2);
    }

    #[test]
    fn annotated_class_is_clean() {
        let f = run("Ontology:\nClass: A\n Annotations: skos:definition \"x\", dc:source \"ISO 9000\"\n");
        assert!(rules(&f).is_empty());
        assert!(f.last().unwrap().message.contains("isoStandard 1"));
    }

    #[test]
    fn unknown_source_warns() {
        let f = run("Ontology:\nClass: A\n Annotations: skos:definition \"x\", dc:source \"my notes\"\n");
        assert_eq!(rules(&f), [(RuleId::L2, Severity::Warning)]);
    }

    #[test]
    fn new_object_property_and_undeclared_use() {
        let f = run("Ontology:\nObjectProperty: mySpecialRelation\n");
        assert_eq!(rules(&f), [(RuleId::L3, Severity::Error)]);
        let f = run("Ontology:\nClass: A\n Annotations: skos:definition \"x\", dc:source \"ISO 9000\"\n SubClassOf: r some B\n");
        assert_eq!(rules(&f), [(RuleId::L4, Severity::Error), (RuleId::L4, Severity::Error)]);
    }

    #[test]
    fn iso_wins_over_wikipedia() {
        let kb = KnowledgeBase::from_text(
            "Ontology:\nClass: A\n Annotations: dc:source \"Wikipedia\", dc:source \"ISO 5127\"\nClass: B\n",
            "t.omn",
        )
        .unwrap();
        let s = provenance_summary(&kb, &LintConfig::default());
        assert_eq!(s[&SourceCategory::IsoStandard], 1);
        assert_eq!(s[&SourceCategory::Unknown], 1);
        assert_eq!(s.values().sum::<usize>(), 2);
    }

    #[test]
    fn config_round_trips_through_json() {
        let c = LintConfig::from_json(r#"{"sourceProperty": "urn:src", "includeImports": true}"#).unwrap();
        assert_eq!(c.source_property, "urn:src");
        assert!(c.include_imports);
        assert_eq!(c.definition_property, vocab::SKOS_DEFINITION);
        assert!(LintConfig::from_json(r#"{"bogus": 1}"#).is_err());
    }
}
