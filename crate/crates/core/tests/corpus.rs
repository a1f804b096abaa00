//! The bundled corpus: consistency, manifest entailments, lint cleanliness.

use sdl_core::classify::{classify, unsatisfiable_classes};
use sdl_core::corpus::{load_corpus, root_classes, verify};
use sdl_core::lint::{lint, provenance_summary, LintConfig, RuleId, Severity, SourceCategory};

#[test]
fn corpus_verifies() {
    let (kb, manifest) = load_corpus().unwrap();
    let report = verify(&kb, &manifest).unwrap();
    assert!(report.consistent);
    assert!(report.unsatisfiable.is_empty(), "{:?}", report.unsatisfiable);
    let failed: Vec<_> = report.entries.iter().filter(|e| !e.passed()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(report.lint_errors.is_empty(), "{:#?}", report.lint_errors);
}

#[test]
fn manifest_shape() {
    let (_, manifest) = load_corpus().unwrap();
    let e = &manifest.entries;
    assert!(e.len() >= 25);
    assert!(e.iter().filter(|x| x.source.ends_with("caption")).count() >= 9);
    assert!(e.iter().filter(|x| x.expected && x.axiom.contains(" some ")).count() >= 5);
    assert!(e.iter().filter(|x| !x.expected).count() >= 5);
    assert!(e.iter().all(|x| x.source.contains("Listing")));
}

#[test]
fn lint_has_no_errors_and_iso_dominates() {
    let (kb, _) = load_corpus().unwrap();
    let config = LintConfig::default();
    let findings = lint(&kb, &config);
    assert!(findings.iter().all(|f| f.severity != Severity::Error), "{findings:#?}");
    let summary = provenance_summary(&kb, &config);
    assert_eq!(summary.values().sum::<usize>(), root_classes(&kb).len());
    assert!(summary[&SourceCategory::IsoStandard] >= summary[&SourceCategory::OtherCanonical]);
    assert_eq!(findings.iter().filter(|f| f.rule_id == RuleId::L5).count(), 1);
}

#[test]
fn no_unsatisfiable_classes() {
    let (kb, _) = load_corpus().unwrap();
    assert!(unsatisfiable_classes(&kb).unwrap().is_empty());
}

#[test]
fn listing_taxonomy_examples() {
    let (kb, _) = load_corpus().unwrap();
    let t = classify(&kb).unwrap();
    let sic = t.group_of("Seamless Interaction Capability").unwrap();
    let pic = t.group_of("Product Interaction Capability").unwrap();
    assert!(t.parents(sic).any(|g| g == pic));
    let sdee = t.group_of("Seamless Digital Engineering Environment").unwrap();
    let parents: Vec<_> = t.parents(sdee).flat_map(|g| t.groups[g].clone()).collect();
    assert!(parents.contains(&"Digital Engineering Environment".to_string()), "{parents:?}");
    assert!(parents.contains(&"Engineered System".to_string()), "{parents:?}");
}
