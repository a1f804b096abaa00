//! The corpus's derived facts, certified by a Horn chase that shares no code
//! with the tableau, and the tableau checked against them.

mod common;

use common::chase::{assert_model, Chase, Outcome};
use common::fixtures::INJECTED_UNSAT;
use sdl_core::classify::{class_names, classify, unsatisfiable_classes};
use sdl_core::corpus::load_corpus;
use sdl_core::syntax::{Axiom, ConceptExpr as C};

#[test]
fn every_manifest_entry_is_certified() {
    let (kb, manifest) = load_corpus().unwrap();
    let chase = Chase::new(&kb);
    for (entry, axiom) in manifest.entries.iter().zip(manifest.parse(&kb).unwrap()) {
        let actual = match &axiom {
            Axiom::SubClassOf(c, d) => chase.entails(&kb, c, d),
            Axiom::EquivalentClasses(cs) => cs
                .iter()
                .all(|c| cs.iter().all(|d| c == d || chase.entails(&kb, c, d))),
            other => panic!("unexpected manifest axiom {other:?}"),
        };
        assert_eq!(actual, entry.expected, "{} ({})", entry.axiom, entry.source);
    }
}

#[test]
fn corpus_has_a_finite_model() {
    let (kb, _) = load_corpus().unwrap();
    let chase = Chase::new(&kb);
    let Outcome::Model(m, _) = chase.run(None) else { panic!("corpus ABox clashes") };
    assert_model(&kb, &m);
    for name in class_names(&kb) {
        assert!(chase.satisfiable(&kb, &C::named(name.as_str())), "{name}");
    }
}

#[test]
fn taxonomy_equals_chase_subsumption() {
    let (kb, _) = load_corpus().unwrap();
    let taxonomy = classify(&kb).unwrap();
    let chase = Chase::new(&kb);
    let names = class_names(&kb);
    for a in &names {
        let Outcome::Model(m, Some(root)) = chase.run(Some(&C::named(a.as_str()))) else {
            panic!("{a} is unsatisfiable in the chase");
        };
        assert_model(&kb, &m);
        for b in &names {
            let entailed = m.satisfies(&C::named(b.as_str()), root);
            assert_eq!(taxonomy.subsumes(a, b), Some(entailed), "{a} ⊑ {b}");
        }
    }
}

#[test]
fn injected_disjointness_fixture() {
    let (kb, _) = load_corpus().unwrap();
    let kb = kb.with_axioms([Axiom::DisjointClasses(vec![
        C::named("Product Capability"),
        C::named("Seamless Integration"),
    ])]);
    let chase = Chase::new(&kb);
    let certified: Vec<String> = class_names(&kb)
        .into_iter()
        .filter(|n| !chase.satisfiable(&kb, &C::named(n.as_str())))
        .collect();
    assert_eq!(certified, INJECTED_UNSAT);
    let found: Vec<String> = unsatisfiable_classes(&kb).unwrap().into_iter().map(|u| u.name).collect();
    assert_eq!(found, INJECTED_UNSAT);
}

#[test]
fn chase_self_check() {
    let kb = sdl_core::kb::KnowledgeBase::from_text(
        "ObjectProperty: r\n Range: D\nObjectProperty: s\n InverseOf: r\n\
         Class: A\n SubClassOf: r some B\nClass: B\n SubClassOf: C\n\
         Class: E\n EquivalentTo: s some A\nClass: F\n DisjointWith: C\n",
        "t.omn",
    )
    .unwrap();
    let c = |s: &str| sdl_core::syntax::parse_concept(s, &Default::default()).unwrap();
    let chase = Chase::new(&kb);
    // The r-successor of an A has an s-edge back to it, so it is an E.
    assert!(chase.entails(&kb, &c("A"), &c("r some (B and C and D and E)")));
    assert!(!chase.entails(&kb, &c("A"), &c("r some F")));
    assert!(!chase.entails(&kb, &c("A"), &c("B")));
    assert!(!chase.satisfiable(&kb, &c("B and F")));
    assert!(chase.satisfiable(&kb, &c("A and F")));
}
