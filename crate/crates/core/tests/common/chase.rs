//! Restricted chase for Horn knowledge bases (conjunction, existentials,
//! disjointness, domains, ranges, role inclusions, inverses, transitivity).
//!
//! A chase started from a fresh element of `c` derives only facts that hold
//! in every model of `c`, so a clash proves `c` unsatisfiable. A chase that
//! finishes builds a finite universal model: `c ⊑ d` is entailed for an
//! existential-conjunctive `d` iff the start element satisfies `d` there.
//! The model is returned as an [`Interpretation`] so callers can check it
//! against every axiom with the model oracle's evaluator.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use sdl_core::kb::KnowledgeBase;
use sdl_core::oracle::Interpretation;
use sdl_core::syntax::{render_axiom, Axiom, ConceptExpr as C, RoleExpr};

const MAX_ELEMENTS: usize = 5_000;

pub struct Chase {
    gcis: Vec<(C, C)>,
    ranges: Vec<(String, C)>,
    role_incl: Vec<(RoleExpr, RoleExpr)>,
    transitive: BTreeSet<String>,
    assertions: Vec<(String, C)>,
    facts: Vec<(String, RoleExpr, String)>,
    individuals: Vec<String>,
}

#[derive(Debug)]
pub enum Outcome {
    Clash,
    /// Universal model and the element standing for the start concept.
    Model(Interpretation, Option<usize>),
}

#[derive(Default)]
struct State {
    labels: Vec<BTreeSet<String>>,
    /// `(x, role name, y)`.
    edges: BTreeSet<(usize, String, usize)>,
    clash: bool,
}

impl State {
    fn fresh(&mut self) -> usize {
        self.labels.push(BTreeSet::new());
        self.labels.len() - 1
    }

    fn holds(&self, r: &RoleExpr, x: usize, y: usize) -> bool {
        let (a, b) = if r.inverted { (y, x) } else { (x, y) };
        self.edges.contains(&(a, r.name.clone(), b))
    }

    fn add_edge(&mut self, r: &RoleExpr, x: usize, y: usize) -> bool {
        let (a, b) = if r.inverted { (y, x) } else { (x, y) };
        self.edges.insert((a, r.name.clone(), b))
    }

    fn successors(&self, r: &RoleExpr, x: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|(a, n, b)| *n == r.name && if r.inverted { *b == x } else { *a == x })
            .map(|(a, _, b)| if r.inverted { *a } else { *b })
            .collect()
    }

    fn sat(&self, c: &C, x: usize) -> bool {
        match c {
            C::Top => true,
            C::Bottom => false,
            C::Named(a) => self.labels[x].contains(a),
            C::And(cs) => cs.iter().all(|c| self.sat(c, x)),
            C::Some(r, f) => self.successors(r, x).into_iter().any(|y| self.sat(f, y)),
            other => panic!("outside the Horn fragment: {other:?}"),
        }
    }

    /// Makes `c` true at `x`; returns whether anything changed.
    fn apply(&mut self, c: &C, x: usize) -> bool {
        match c {
            C::Top => false,
            C::Bottom => {
                self.clash = true;
                true
            }
            C::Named(a) => self.labels[x].insert(a.clone()),
            C::And(cs) => cs.iter().fold(false, |ch, c| self.apply(c, x) | ch),
            C::Some(r, f) => {
                if self.sat(c, x) {
                    return false;
                }
                let y = self.fresh();
                self.add_edge(r, x, y);
                self.apply(f, y);
                true
            }
            other => panic!("outside the Horn fragment: {other:?}"),
        }
    }
}

impl Chase {
    pub fn new(kb: &KnowledgeBase) -> Self {
        let mut ch = Chase {
            gcis: Vec::new(),
            ranges: Vec::new(),
            role_incl: Vec::new(),
            transitive: BTreeSet::new(),
            assertions: Vec::new(),
            facts: Vec::new(),
            individuals: Vec::new(),
        };
        let mut inds = BTreeSet::new();
        for axiom in &kb.axioms {
            match axiom {
                Axiom::SubClassOf(a, b) => ch.gcis.push((a.clone(), b.clone())),
                Axiom::EquivalentClasses(cs) => {
                    for a in cs {
                        for b in cs {
                            if a != b {
                                ch.gcis.push((a.clone(), b.clone()));
                            }
                        }
                    }
                }
                Axiom::DisjointClasses(cs) => {
                    for (i, a) in cs.iter().enumerate() {
                        for b in &cs[i + 1..] {
                            ch.gcis.push((C::And(vec![a.clone(), b.clone()]), C::Bottom));
                        }
                    }
                }
                Axiom::Domain(r, c) => ch.gcis.push((C::some(RoleExpr::named(r.as_str()), C::Top), c.clone())),
                Axiom::Range(r, c) => ch.ranges.push((r.clone(), c.clone())),
                Axiom::SubPropertyOf(r, s) => ch.role_incl.push((r.clone(), s.clone())),
                Axiom::EquivalentProperties(rs) => {
                    for r in rs {
                        for s in rs {
                            ch.role_incl.push((r.clone(), s.clone()));
                        }
                    }
                }
                Axiom::InverseProperties(p, q) => {
                    let (p, q) = (RoleExpr::named(p.as_str()), RoleExpr::named(q.as_str()));
                    ch.role_incl.push((p.clone(), q.inverse()));
                    ch.role_incl.push((q.inverse(), p));
                }
                Axiom::TransitiveProperty(r) => {
                    ch.transitive.insert(r.clone());
                }
                Axiom::ClassAssertion(i, c) => {
                    inds.insert(i.clone());
                    ch.assertions.push((i.clone(), c.clone()));
                }
                Axiom::PropertyAssertion(a, r, b) => {
                    inds.insert(a.clone());
                    inds.insert(b.clone());
                    ch.facts.push((a.clone(), r.clone(), b.clone()));
                }
                Axiom::Declaration(sdl_core::syntax::EntityKind::NamedIndividual, i) => {
                    inds.insert(i.clone());
                }
                Axiom::Declaration(..) | Axiom::AnnotationAssertion(..) | Axiom::Import(_) => {}
                other => panic!("chase does not support {}", render_axiom(other)),
            }
        }
        ch.individuals = inds.into_iter().collect();
        ch
    }

    pub fn run(&self, start: Option<&C>) -> Outcome {
        let mut s = State::default();
        let index: BTreeMap<&str, usize> =
            self.individuals.iter().map(|i| (i.as_str(), s.fresh())).collect();
        for (i, c) in &self.assertions {
            s.apply(c, index[i.as_str()]);
        }
        for (a, r, b) in &self.facts {
            s.add_edge(r, index[a.as_str()], index[b.as_str()]);
        }
        let root = start.map(|c| {
            let x = s.fresh();
            s.apply(c, x);
            x
        });

        loop {
            if s.clash {
                return Outcome::Clash;
            }
            assert!(s.labels.len() <= MAX_ELEMENTS, "chase did not terminate within {MAX_ELEMENTS} elements");
            let mut changed = false;
            for (r, sup) in &self.role_incl {
                let pairs: Vec<(usize, usize)> = s
                    .edges
                    .iter()
                    .filter(|(_, n, _)| *n == r.name)
                    .map(|&(a, _, b)| if r.inverted { (b, a) } else { (a, b) })
                    .collect();
                for (x, y) in pairs {
                    changed |= s.add_edge(sup, x, y);
                }
            }
            for t in &self.transitive {
                let pairs: Vec<(usize, usize)> =
                    s.edges.iter().filter(|(_, n, _)| n == t).map(|&(a, _, b)| (a, b)).collect();
                for &(x, y) in &pairs {
                    for &(y2, z) in &pairs {
                        if y == y2 {
                            changed |= s.edges.insert((x, t.clone(), z));
                        }
                    }
                }
            }
            for (r, c) in &self.ranges {
                let targets: Vec<usize> =
                    s.edges.iter().filter(|(_, n, _)| n == r).map(|&(_, _, b)| b).collect();
                for y in targets {
                    changed |= s.apply(c, y);
                }
            }
            for x in 0..s.labels.len() {
                for (lhs, rhs) in &self.gcis {
                    if s.sat(lhs, x) && !s.sat(rhs, x) {
                        changed |= s.apply(rhs, x);
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut classes: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
        for (x, l) in s.labels.iter().enumerate() {
            for a in l {
                classes.entry(a.clone()).or_default().insert(x);
            }
        }
        let mut roles: BTreeMap<String, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for (a, r, b) in &s.edges {
            roles.entry(r.clone()).or_default().insert((*a, *b));
        }
        let individuals = index.into_iter().map(|(i, x)| (i.to_string(), x)).collect();
        Outcome::Model(Interpretation { domain: s.labels.len(), classes, roles, individuals }, root)
    }

    /// `Some(true)` if `sub ⊑ sup` is entailed, `Some(false)` if a verified
    /// finite counter-model exists. `sup` must be existential-conjunctive.
    pub fn entails(&self, kb: &KnowledgeBase, sub: &C, sup: &C) -> bool {
        match self.run(Some(sub)) {
            Outcome::Clash => true,
            Outcome::Model(m, root) => {
                let root = root.unwrap();
                assert_model(kb, &m);
                m.satisfies(sup, root)
            }
        }
    }

    /// Whether `c` is satisfiable, with the model checked against `kb`.
    pub fn satisfiable(&self, kb: &KnowledgeBase, c: &C) -> bool {
        match self.run(Some(c)) {
            Outcome::Clash => false,
            Outcome::Model(m, root) => {
                assert_model(kb, &m);
                assert!(m.satisfies(c, root.unwrap()));
                true
            }
        }
    }
}

/// Panics unless `m` satisfies every axiom of `kb`.
pub fn assert_model(kb: &KnowledgeBase, m: &Interpretation) {
    for a in &kb.axioms {
        assert!(m.satisfies_axiom(a), "chase model violates {}", render_axiom(a));
    }
}
