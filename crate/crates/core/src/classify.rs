//! Taxonomy computation and unsatisfiable-class detection.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::kb::{signature, told_hierarchy, KnowledgeBase};
use crate::syntax::{render_axiom, vocab, Axiom, ConceptExpr};
use crate::tableau::{Clash, ClashKind, Reasoner, ReasonerError, TableauConfig};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("knowledge base is inconsistent{}", describe(.clash))]
    InconsistentKB { clash: Option<Clash> },
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
    #[error("entailment check supports SubClassOf and EquivalentClasses only, got: {0}")]
    UnsupportedAxiom(String),
}

fn describe(clash: &Option<Clash>) -> String {
    match clash {
        Some(c) => format!(" ({}, axioms {:?})", c.kind, c.axioms),
        None => String::new(),
    }
}

/// Inferred class hierarchy over equivalence groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Taxonomy {
    /// Groups of mutually equivalent names, each sorted, ordered by least member.
    pub groups: Vec<Vec<String>>,
    /// Direct subsumption edges `[sub, sup]` between group indices, sorted.
    pub edges: Vec<[usize; 2]>,
    pub top: usize,
    pub bottom: usize,
}

impl Taxonomy {
    /// Index of the group containing `name`.
    pub fn group_of(&self, name: &str) -> Option<usize> {
        self.groups.iter().position(|g| g.iter().any(|n| n == name))
    }

    /// Direct super-groups of group `g`.
    pub fn parents(&self, g: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e[0] == g).map(|e| e[1])
    }

    /// Direct sub-groups of group `g`.
    pub fn children(&self, g: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e[1] == g).map(|e| e[0])
    }

    /// Whether group `sub` is reachable from group `sup` downward (reflexive).
    pub fn is_below(&self, sub: usize, sup: usize) -> bool {
        let mut seen = BTreeSet::new();
        let mut stack = vec![sub];
        while let Some(g) = stack.pop() {
            if g == sup {
                return true;
            }
            if seen.insert(g) {
                stack.extend(self.parents(g));
            }
        }
        false
    }

    /// Whether `sub ⊑ sup` holds according to the taxonomy.
    pub fn subsumes(&self, sub: &str, sup: &str) -> Option<bool> {
        Some(self.is_below(self.group_of(sub)?, self.group_of(sup)?))
    }

    /// Same structure with every name passed through `f`.
    pub fn map_names(&self, f: impl Fn(&str) -> String) -> Taxonomy {
        Taxonomy {
            groups: self.groups.iter().map(|g| g.iter().map(|n| f(n)).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("taxonomy serializes")
    }

    /// Indented tree from Top down. Groups with several parents appear under
    /// each of them. Unsatisfiable names are listed at the end.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_tree(&mut out, self.top, 0);
        let unsat: Vec<&String> = self.groups[self.bottom]
            .iter()
            .filter(|n| n.as_str() != vocab::OWL_NOTHING && n.as_str() != "owl:Nothing")
            .collect();
        if !unsat.is_empty() {
            out.push_str("unsatisfiable:\n");
            for n in unsat {
                let _ = writeln!(out, "  {n}");
            }
        }
        out
    }

    fn write_tree(&self, out: &mut String, g: usize, depth: usize) {
        let _ = writeln!(out, "{}{}", "  ".repeat(depth), self.groups[g].join(" ≡ "));
        let mut kids: Vec<usize> = self.children(g).filter(|&k| k != self.bottom).collect();
        kids.sort_unstable();
        for k in kids {
            self.write_tree(out, k, depth + 1);
        }
    }
}

/// Class names to classify: the signature minus the built-in Top and Bottom.
pub fn class_names(kb: &KnowledgeBase) -> Vec<String> {
    signature(kb)
        .class_names
        .into_iter()
        .filter(|n| n != vocab::OWL_THING && n != vocab::OWL_NOTHING)
        .collect()
}

pub fn classify(kb: &KnowledgeBase) -> Result<Taxonomy, ClassifyError> {
    classify_with(kb, TableauConfig::default())
}

pub fn classify_with(kb: &KnowledgeBase, config: TableauConfig) -> Result<Taxonomy, ClassifyError> {
    let reasoner = Reasoner::new(kb, config)?;
    let consistency = reasoner.is_consistent()?;
    if !consistency.is_satisfiable() {
        return Err(ClassifyError::InconsistentKB { clash: consistency.clash });
    }
    let Some(top_atoms) = reasoner.sat_atoms(&ConceptExpr::Top)? else {
        let clash = reasoner.check(&ConceptExpr::Top)?;
        return Err(ClassifyError::InconsistentKB { clash });
    };

    let names = class_names(kb);
    let known: BTreeSet<&str> = names.iter().map(String::as_str).collect();
    let told = told_hierarchy(kb);

    let top_names: BTreeSet<String> = top_atoms
        .into_iter()
        .filter(|b| known.contains(b.as_str()))
        .map(|b| reasoner.subsumes(&ConceptExpr::Top, &ConceptExpr::named(b.as_str())).map(|s| (b, s)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter_map(|(b, s)| s.then_some(b))
        .collect();

    // For each name: None when unsatisfiable, else its named subsumers.
    let supers: Vec<Option<BTreeSet<String>>> = names
        .par_iter()
        .map(|a| -> Result<_, ReasonerError> {
            let Some(atoms) = reasoner.sat_atoms(&ConceptExpr::named(a.as_str()))? else {
                return Ok(None);
            };
            let told_supers = told.ancestors(a);
            let mut sup = BTreeSet::new();
            for b in atoms {
                if &b == a || !known.contains(b.as_str()) {
                    continue;
                }
                let holds = told_supers.contains(&b)
                    || top_names.contains(&b)
                    || reasoner.subsumes(&ConceptExpr::named(a.as_str()), &ConceptExpr::named(b.as_str()))?;
                if holds {
                    sup.insert(b);
                }
            }
            Ok(Some(sup))
        })
        .collect::<Result<_, _>>()?;

    Ok(assemble(&names, &supers, &top_names))
}

fn assemble(names: &[String], supers: &[Option<BTreeSet<String>>], top_names: &BTreeSet<String>) -> Taxonomy {
    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let sup_of = |i: usize, j: usize| supers[i].as_ref().is_some_and(|s| s.contains(&names[j]));

    // Group ids per name; the Top and Bottom groups absorb their members.
    let mut top_group: Vec<String> = vec![vocab::OWL_THING.to_string()];
    let mut bottom_group: Vec<String> = vec![vocab::OWL_NOTHING.to_string()];
    let mut middle: Vec<Vec<usize>> = Vec::new();
    let mut assigned: Vec<Option<usize>> = vec![None; names.len()];
    for i in 0..names.len() {
        if supers[i].is_none() {
            bottom_group.push(names[i].clone());
        } else if top_names.contains(&names[i]) {
            top_group.push(names[i].clone());
        } else if assigned[i].is_none() {
            let members: Vec<usize> =
                (i..names.len()).filter(|&j| j == i || (sup_of(i, j) && sup_of(j, i))).collect();
            for &j in &members {
                assigned[j] = Some(middle.len());
            }
            middle.push(members);
        }
    }

    // Strict super-groups of each middle group.
    let strict: Vec<BTreeSet<usize>> = middle
        .iter()
        .enumerate()
        .map(|(g, members)| {
            supers[members[0]]
                .iter()
                .flatten()
                .filter_map(|b| assigned[index[b.as_str()]])
                .filter(|&h| h != g)
                .collect()
        })
        .collect();

    top_group.sort();
    bottom_group.sort();
    let mut groups: Vec<Vec<String>> = middle
        .iter()
        .map(|m| {
            let mut g: Vec<String> = m.iter().map(|&i| names[i].clone()).collect();
            g.sort();
            g
        })
        .collect();
    let top_raw = groups.len();
    groups.push(top_group);
    let bottom_raw = groups.len();
    groups.push(bottom_group);

    let mut edges: BTreeSet<[usize; 2]> = BTreeSet::new();
    let mut has_child = vec![false; middle.len()];
    for (g, sups) in strict.iter().enumerate() {
        let direct: Vec<usize> = sups
            .iter()
            .copied()
            .filter(|&h| !sups.iter().any(|&k| k != h && strict[k].contains(&h)))
            .collect();
        if direct.is_empty() {
            edges.insert([g, top_raw]);
        }
        for h in direct {
            edges.insert([g, h]);
            has_child[h] = true;
        }
    }
    let minimal: Vec<usize> = (0..middle.len()).filter(|&g| !has_child[g]).collect();
    if minimal.is_empty() {
        edges.insert([bottom_raw, top_raw]);
    }
    for g in minimal {
        edges.insert([bottom_raw, g]);
    }

    // Renumber groups by least member.
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by(|&a, &b| groups[a][0].cmp(&groups[b][0]));
    let mut new_id = vec![0; groups.len()];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }
    let mut edges: Vec<[usize; 2]> = edges.into_iter().map(|[a, b]| [new_id[a], new_id[b]]).collect();
    edges.sort_unstable();
    Taxonomy {
        groups: order.iter().map(|&old| groups[old].clone()).collect(),
        edges,
        top: new_id[top_raw],
        bottom: new_id[bottom_raw],
    }
}

/// An axiom taking part in a clash, with its source location.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomRef {
    pub index: usize,
    pub file: String,
    pub line: u32,
    pub axiom: String,
}

/// An unsatisfiable class and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnsatClass {
    pub name: String,
    pub clash: ClashKind,
    pub axioms: Vec<AxiomRef>,
}

pub fn unsatisfiable_classes(kb: &KnowledgeBase) -> Result<Vec<UnsatClass>, ReasonerError> {
    unsatisfiable_classes_with(kb, TableauConfig::default())
}

pub fn unsatisfiable_classes_with(
    kb: &KnowledgeBase,
    config: TableauConfig,
) -> Result<Vec<UnsatClass>, ReasonerError> {
    let reasoner = Reasoner::new(kb, config)?;
    let found: Vec<Option<UnsatClass>> = class_names(kb)
        .into_par_iter()
        .map(|name| {
            let clash = reasoner.check(&ConceptExpr::named(name.as_str()))?;
            Ok(clash.map(|c| UnsatClass {
                axioms: c
                    .axioms
                    .iter()
                    .map(|&index| {
                        let (file, line) = kb.location(index);
                        AxiomRef { index, file: file.to_string(), line, axiom: render_axiom(&kb.axioms[index]) }
                    })
                    .collect(),
                clash: c.kind,
                name,
            }))
        })
        .collect::<Result<_, ReasonerError>>()?;
    Ok(found.into_iter().flatten().collect())
}

pub fn entails(kb: &KnowledgeBase, axiom: &Axiom) -> Result<bool, ClassifyError> {
    let reasoner = Reasoner::new(kb, TableauConfig::default())?;
    entails_with(&reasoner, axiom)
}

/// Entailment against a prepared reasoner, for checking many axioms.
pub fn entails_with(reasoner: &Reasoner<'_>, axiom: &Axiom) -> Result<bool, ClassifyError> {
    match axiom {
        Axiom::SubClassOf(c, d) => Ok(reasoner.subsumes(c, d)?),
        Axiom::EquivalentClasses(cs) => {
            for c in cs {
                for d in cs {
                    if c != d && !reasoner.subsumes(c, d)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        other => Err(ClassifyError::UnsupportedAxiom(render_axiom(other))),
    }
}
