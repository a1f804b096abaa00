//! Tableau decision procedure for concept satisfiability, knowledge-base
//! consistency and subsumption over ALC with role hierarchies, transitive
//! and inverse roles and unqualified number restrictions.

mod dep;
mod engine;
mod intern;
mod tbox;

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::kb::KnowledgeBase;
use crate::logic::{nnf, RoleBox, UnsupportedFeature};
use crate::syntax::{ConceptExpr, RoleExpr};
use engine::{Blocked, Engine, NodeId, Outcome};
use intern::{CId, Concept};
use tbox::{role_names, TBox};

pub use engine::NodeKind;

pub const DEFAULT_MAX_NODES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauConfig {
    /// Upper bound on completion-graph nodes per test.
    pub max_nodes: usize,
    /// Apply GCIs with named or domain left-hand sides by lazy unfolding
    /// instead of adding them to every node.
    pub absorption: bool,
    /// Jump back to the most recent branch point involved in a clash rather
    /// than the most recent one overall.
    pub backjumping: bool,
    /// Let any earlier unblocked node block a node, not only its ancestors.
    pub anywhere_blocking: bool,
}

impl Default for TableauConfig {
    fn default() -> Self {
        TableauConfig { max_nodes: DEFAULT_MAX_NODES, absorption: true, backjumping: true, anywhere_blocking: true }
    }
}

impl TableauConfig {
    /// Plain internalization, chronological backtracking and ancestor
    /// blocking.
    pub fn unoptimized() -> Self {
        TableauConfig { absorption: false, backjumping: false, anywhere_blocking: false, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReasonerError {
    #[error(transparent)]
    Unsupported(#[from] UnsupportedFeature),
    #[error("resource limit: completion graph exceeded {max_nodes} nodes")]
    ResourceLimit { max_nodes: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ClashKind {
    /// A concept and its negation in one label.
    Complement,
    /// `owl:Nothing` in a label.
    Bottom,
    /// More pairwise-distinct neighbours than an at-most restriction allows.
    Cardinality,
}

impl fmt::Display for ClashKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClashKind::Complement => "complement pair",
            ClashKind::Bottom => "⊥ in label",
            ClashKind::Cardinality => "cardinality conflict",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clash {
    pub kind: ClashKind,
    /// Indices into `KnowledgeBase::axioms` the clash depends on.
    pub axioms: Vec<usize>,
    /// The concept whose addition (or restriction whose check) failed.
    pub concept: Option<ConceptExpr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    Satisfiable,
    Unsatisfiable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessNode {
    pub id: usize,
    pub kind: NodeKind,
    pub parent: Option<usize>,
    pub label: BTreeSet<ConceptExpr>,
    /// Set when the node is directly blocked by the given node.
    pub blocked_by: Option<usize>,
    pub indirectly_blocked: bool,
    pub individual: Option<String>,
}

/// A complete, clash-free completion graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Surviving (unpruned) nodes in id order.
    pub nodes: Vec<WitnessNode>,
    pub edges: Vec<(usize, usize, Vec<RoleExpr>)>,
    /// Node standing for the queried concept.
    pub query_node: Option<usize>,
    /// Merged-away node ids and the node each ended up in.
    pub merged: BTreeMap<usize, usize>,
}

impl Witness {
    pub fn node(&self, id: usize) -> Option<&WitnessNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn has_blocked_nodes(&self) -> bool {
        self.nodes.iter().any(|n| n.blocked_by.is_some() || n.indirectly_blocked)
    }

    /// Class names in the label of node `id`.
    pub fn atoms(&self, id: usize) -> BTreeSet<String> {
        self.node(id)
            .map(|n| {
                n.label
                    .iter()
                    .filter_map(|c| match c {
                        ConceptExpr::Named(a) => Some(a.clone()),
                        _ => None,
                    })
                    .collect()
            })
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub clash: Option<Clash>,
}

impl SatResult {
    pub fn is_satisfiable(&self) -> bool {
        self.verdict == Verdict::Satisfiable
    }
}

/// Preprocessed knowledge base ready for repeated tests. Immutable; tests
/// may run concurrently.
#[derive(Debug, Clone)]
pub struct Reasoner<'kb> {
    kb: &'kb KnowledgeBase,
    config: TableauConfig,
    tbox: TBox,
}

enum Finished<'e, 't> {
    Sat(&'e Engine<'t>),
    Unsat(engine::Clash, &'e Engine<'t>),
}

impl<'kb> Reasoner<'kb> {
    pub fn new(kb: &'kb KnowledgeBase, config: TableauConfig) -> Result<Self, ReasonerError> {
        let tbox = TBox::build(kb, config.absorption, &[])?;
        Ok(Reasoner { kb, config, tbox })
    }

    pub fn kb(&self) -> &'kb KnowledgeBase {
        self.kb
    }

    pub fn config(&self) -> &TableauConfig {
        &self.config
    }

    pub fn role_box(&self) -> &RoleBox {
        &self.tbox.rbox
    }

    /// The prepared terminology, rebuilt only when `c` uses role names the
    /// knowledge base does not know.
    fn tbox_for(&self, c: Option<&ConceptExpr>) -> Result<Cow<'_, TBox>, ReasonerError> {
        let unknown: Vec<String> = c
            .map(role_names)
            .unwrap_or_default()
            .into_iter()
            .filter(|r| self.tbox.rbox.id(&RoleExpr::named(r.clone())).is_none())
            .collect();
        if unknown.is_empty() {
            Ok(Cow::Borrowed(&self.tbox))
        } else {
            Ok(Cow::Owned(TBox::build(self.kb, self.config.absorption, &unknown)?))
        }
    }

    fn solve<T>(
        &self,
        query: Option<&ConceptExpr>,
        finish: impl FnOnce(Finished<'_, '_>, NodeId) -> T,
    ) -> Result<T, ReasonerError> {
        let tbox = self.tbox_for(query)?;
        let mut interner = tbox.interner.clone();
        let q = match query {
            Some(c) => interner.intern(&nnf(c), &tbox.rbox)?,
            None => CId::TOP,
        };
        let mut engine = Engine::new(&tbox, &interner, &self.config);
        let query_node = tbox.individuals.len() as NodeId;
        let limit = ReasonerError::ResourceLimit { max_nodes: self.config.max_nodes };
        let seeded = engine
            .seed(|e| {
                for _ in &tbox.individuals {
                    e.new_node(NodeKind::Root, None, &dep::Dep::none())?;
                }
                for (i, c, d) in &tbox.class_assertions {
                    e.add(*i as NodeId, *c, d)?;
                }
                for (a, r, b, d) in &tbox.role_assertions {
                    e.add_edge(*a as NodeId, *b as NodeId, *r, d);
                }
                let n = e.new_node(NodeKind::Root, None, &dep::Dep::none())?;
                e.add(n, q, &dep::Dep::none())
            })
            .map_err(|_| limit.clone())?;
        let outcome = match seeded {
            Some(clash) => Outcome::Unsat(clash),
            None => engine.run().map_err(|_| limit)?,
        };
        Ok(match outcome {
            Outcome::Sat => finish(Finished::Sat(&engine), query_node),
            Outcome::Unsat(c) => finish(Finished::Unsat(c, &engine), query_node),
        })
    }

    fn result(&self, f: Finished<'_, '_>, query_node: NodeId, with_query: bool) -> SatResult {
        match f {
            Finished::Sat(e) => SatResult {
                verdict: Verdict::Satisfiable,
                witness: Some(self.witness(e, with_query.then_some(query_node))),
                clash: None,
            },
            Finished::Unsat(c, e) => SatResult {
                verdict: Verdict::Unsatisfiable,
                witness: None,
                clash: Some(Clash {
                    kind: c.kind,
                    axioms: c.dep.axioms().iter().map(|&a| a as usize).collect(),
                    concept: c.concept.map(|id| e.interner.decode(id, e.rbox())),
                }),
            },
        }
    }

    fn witness(&self, e: &Engine<'_>, query_node: Option<NodeId>) -> Witness {
        let rbox = e.rbox();
        let blocked = e.blocking();
        let individuals = &self.tbox.individuals;
        let mut nodes = Vec::new();
        let mut merged = BTreeMap::new();
        for (i, n) in e.state.nodes.iter().enumerate() {
            if n.merged_into.is_some() {
                merged.insert(i, e.find(i as NodeId) as usize);
            }
            if n.pruned {
                continue;
            }
            let label = n
                .label
                .keys()
                .filter(|&&c| c != CId::TOP)
                .map(|&c| e.interner.decode(c, rbox))
                .collect();
            nodes.push(WitnessNode {
                id: i,
                kind: n.kind,
                parent: n.parent.map(|p| p as usize),
                label,
                blocked_by: match blocked[i] {
                    Some(Blocked::Direct(b)) => Some(b as usize),
                    _ => None,
                },
                indirectly_blocked: blocked[i] == Some(Blocked::Indirect),
                individual: individuals.get(i).cloned(),
            });
        }
        let edges = e
            .state
            .edges()
            .map(|(a, b, roles)| (a as usize, b as usize, roles.keys().map(|&r| rbox.expr(r)).collect()))
            .collect();
        Witness { nodes, edges, query_node: query_node.map(|q| e.find(q) as usize), merged }
    }

    /// Satisfiability of `c` with respect to the whole knowledge base.
    pub fn is_satisfiable(&self, c: &ConceptExpr) -> Result<SatResult, ReasonerError> {
        self.solve(Some(c), |f, q| self.result(f, q, true))
    }

    /// Consistency of TBox and ABox together.
    pub fn is_consistent(&self) -> Result<SatResult, ReasonerError> {
        self.solve(None, |f, q| self.result(f, q, false))
    }

    /// `sub ⊑ sup`, decided by refuting `sub ⊓ ¬sup`.
    pub fn subsumes(&self, sub: &ConceptExpr, sup: &ConceptExpr) -> Result<bool, ReasonerError> {
        let test = ConceptExpr::And(vec![sub.clone(), ConceptExpr::not(sup.clone())]);
        self.solve(Some(&test), |f, _| matches!(f, Finished::Unsat(..)))
    }

    /// Satisfiability only; on success also the class names in the label of
    /// the query node, each of which subsumes `c` in that model.
    pub fn sat_atoms(&self, c: &ConceptExpr) -> Result<Option<BTreeSet<String>>, ReasonerError> {
        self.solve(Some(c), |f, q| match f {
            Finished::Unsat(..) => None,
            Finished::Sat(e) => {
                let node = &e.state.nodes[e.find(q) as usize];
                Some(
                    node.label
                        .keys()
                        .filter_map(|&k| match e.interner.get(k) {
                            Concept::Atom(a) => Some(e.interner.atom_name(*a).to_string()),
                            _ => None,
                        })
                        .collect(),
                )
            }
        })
    }

    /// Satisfiability verdict plus clash, without building a witness.
    pub fn check(&self, c: &ConceptExpr) -> Result<Option<Clash>, ReasonerError> {
        self.solve(Some(c), |f, _| self.result_light(f))
    }

    fn result_light(&self, f: Finished<'_, '_>) -> Option<Clash> {
        match f {
            Finished::Sat(_) => None,
            Finished::Unsat(c, e) => Some(Clash {
                kind: c.kind,
                axioms: c.dep.axioms().iter().map(|&a| a as usize).collect(),
                concept: c.concept.map(|id| e.interner.decode(id, e.rbox())),
            }),
        }
    }
}

/// One-shot satisfiability test with default settings.
pub fn is_satisfiable(kb: &KnowledgeBase, c: &ConceptExpr) -> Result<SatResult, ReasonerError> {
    Reasoner::new(kb, TableauConfig::default())?.is_satisfiable(c)
}

/// One-shot consistency test with default settings.
pub fn is_consistent(kb: &KnowledgeBase) -> Result<SatResult, ReasonerError> {
    Reasoner::new(kb, TableauConfig::default())?.is_consistent()
}

/// One-shot subsumption test with default settings.
pub fn subsumes(kb: &KnowledgeBase, sub: &ConceptExpr, sup: &ConceptExpr) -> Result<bool, ReasonerError> {
    Reasoner::new(kb, TableauConfig::default())?.subsumes(sub, sup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_concept, PrefixEnv};

    fn kb(text: &str) -> KnowledgeBase {
        KnowledgeBase::from_text(text, "t.omn").unwrap()
    }

    fn c(s: &str) -> ConceptExpr {
        parse_concept(s, &PrefixEnv::default()).unwrap()
    }

    fn configs() -> [TableauConfig; 2] {
        [TableauConfig::default(), TableauConfig::unoptimized()]
    }

    fn sat(k: &KnowledgeBase, s: &str) -> bool {
        let mut verdicts = configs()
            .into_iter()
            .map(|cfg| Reasoner::new(k, cfg).unwrap().is_satisfiable(&c(s)).unwrap().is_satisfiable());
        let first = verdicts.next().unwrap();
        assert!(verdicts.all(|v| v == first), "configurations disagree on {s}");
        first
    }

    #[test]
    fn nothing_and_complement() {
        let k = KnowledgeBase::empty();
        let r = is_satisfiable(&k, &c("owl:Nothing")).unwrap();
        assert_eq!(r.clash.unwrap().kind, ClashKind::Bottom);
        let r = is_satisfiable(&k, &c("A and not A")).unwrap();
        assert_eq!(r.verdict, Verdict::Unsatisfiable);
        assert_eq!(r.clash.unwrap().kind, ClashKind::Complement);
        assert!(r.witness.is_none());
    }

    #[test]
    fn cardinality_conflict() {
        let k = kb("ObjectProperty: r");
        let r = is_satisfiable(&k, &c("r min 3 and r max 2 and r only A")).unwrap();
        assert_eq!(r.clash.unwrap().kind, ClashKind::Cardinality);
        assert!(sat(&k, "r min 2 and r max 2"));
        assert!(!sat(&k, "r some A and r max 0"));
    }

    #[test]
    fn cyclic_tbox_terminates_by_blocking() {
        let k = kb("Class: Person SubClassOf: hasParent some Person");
        for cfg in configs() {
            let r = Reasoner::new(&k, cfg).unwrap().is_satisfiable(&c("Person")).unwrap();
            assert!(r.is_satisfiable());
            assert!(r.witness.unwrap().nodes.iter().any(|n| n.blocked_by.is_some()));
        }
    }

    #[test]
    fn transitive_inverse_and_hierarchy() {
        let k = kb("ObjectProperty: r Characteristics: Transitive\n\
                    ObjectProperty: p SubPropertyOf: s\nObjectProperty: s");
        assert!(!sat(&k, "r some (r some A) and r only (not A)"));
        assert!(sat(&k, "r some (r some A) and r only B"));
        assert!(!sat(&k, "A and r some (inverse r only not A)"));
        assert!(!sat(&k, "p some A and s only not A"));
        assert!(sat(&k, "s some A and p only not A"));
    }

    #[test]
    fn merging() {
        let k = kb("ObjectProperty: r");
        assert!(sat(&k, "r max 1 and r some A and r some B"));
        assert!(!sat(&k, "r max 1 and r some A and r some B and r only (not A or not B)"));
        // Merge of a successor into the predecessor through an inverse.
        assert!(!sat(&k, "not A and r some (inverse r max 1 and inverse r some A)"));
        assert!(sat(&k, "A and r some (inverse r max 1 and inverse r some A)"));
    }

    #[test]
    fn domain_range_and_abox() {
        let k = kb("ObjectProperty: r Domain: B Range: C\nClass: D DisjointWith: C");
        assert!(!sat(&k, "r some owl:Thing and not B"));
        assert!(!sat(&k, "r some D"));
        assert!(sat(&k, "r some owl:Thing"));
        let abox = kb("Class: A DisjointWith: B\nIndividual: a Types: A\nIndividual: b Types: B\nIndividual: c Facts: r a");
        assert!(is_consistent(&abox).unwrap().is_satisfiable());
        let bad = kb("Class: A DisjointWith: B\nIndividual: a Types: A, B");
        let r = is_consistent(&bad).unwrap();
        assert!(!r.is_satisfiable());
        assert_eq!(r.clash.unwrap().axioms.len(), 3);
    }

    #[test]
    fn subsumption() {
        let k = kb("Class: A EquivalentTo: B and r some C\nClass: B\nObjectProperty: r");
        for cfg in configs() {
            let rs = Reasoner::new(&k, cfg).unwrap();
            assert!(rs.subsumes(&c("A"), &c("B")).unwrap());
            assert!(rs.subsumes(&c("B and r some (C and D)"), &c("A")).unwrap());
            assert!(!rs.subsumes(&c("B"), &c("A")).unwrap());
            assert!(rs.subsumes(&c("A"), &ConceptExpr::Top).unwrap());
        }
    }

    #[test]
    fn unsupported_inputs() {
        let k = kb("ObjectProperty: r Characteristics: Transitive");
        let err = is_satisfiable(&k, &c("r max 1")).unwrap_err();
        assert!(matches!(err, ReasonerError::Unsupported(u) if u.feature == crate::logic::Feature::NonSimpleCardinality));
        let err = is_satisfiable(&k, &c("{a}")).unwrap_err();
        assert!(matches!(err, ReasonerError::Unsupported(_)));
    }

    #[test]
    fn node_limit() {
        let k = kb("Class: A SubClassOf: r some A, s some A\nObjectProperty: r\nObjectProperty: s");
        let cfg = TableauConfig { max_nodes: 2, ..TableauConfig::default() };
        let err = Reasoner::new(&k, cfg).unwrap().is_satisfiable(&c("A")).unwrap_err();
        assert_eq!(err, ReasonerError::ResourceLimit { max_nodes: 2 });
    }

    #[test]
    fn unknown_query_roles() {
        assert!(!sat(&KnowledgeBase::empty(), "q some A and q only not A"));
    }
}
