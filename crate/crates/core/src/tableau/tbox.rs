//! Preprocessed terminology: interned GCIs, either absorbed into lazy
//! unfolding rules or internalized as global concepts, plus the ABox.

use std::collections::{BTreeMap, HashMap};

use super::dep::Dep;
use super::intern::{CId, Interner};
use crate::kb::KnowledgeBase;
use crate::logic::{nnf, role_closure_with, to_gcis, Gci, RoleBox, RoleId, UnsupportedFeature};
use crate::syntax::{Axiom, ConceptExpr as C, NameUse};

#[derive(Debug, Clone)]
pub struct TBox {
    pub interner: Interner,
    pub rbox: RoleBox,
    /// Concepts added to every node.
    pub globals: Vec<(CId, Dep)>,
    /// Per atom: concepts implied by membership in the atom.
    pub unfold: HashMap<u32, Vec<(CId, Dep)>>,
    /// Per role id: concepts implied by having a neighbour over that role,
    /// already closed over super-roles.
    pub domains: Vec<Vec<(CId, Dep)>>,
    pub individuals: Vec<String>,
    pub class_assertions: Vec<(usize, CId, Dep)>,
    pub role_assertions: Vec<(usize, RoleId, usize, Dep)>,
}

/// Role names mentioned anywhere in `c`.
pub fn role_names(c: &C) -> Vec<String> {
    let mut out = Vec::new();
    c.visit_names(&mut |u| {
        if let NameUse::Role(r) = u {
            out.push(r.to_string());
        }
    });
    out
}

impl TBox {
    pub fn build(
        kb: &KnowledgeBase,
        absorption: bool,
        extra_roles: &[String],
    ) -> Result<TBox, UnsupportedFeature> {
        let rbox = role_closure_with(&kb.axioms, extra_roles.iter().cloned());
        let gcis = to_gcis(&kb.axioms)?;
        let mut interner = Interner::new();
        let mut globals: Vec<(CId, Dep)> = Vec::new();
        let mut unfold: HashMap<u32, Vec<(CId, Dep)>> = HashMap::new();
        let mut direct_domains: Vec<Vec<(CId, Dep)>> = vec![Vec::new(); rbox.len()];

        for gci in &gcis {
            let dep = Dep::axiom(gci.source);
            if !absorption {
                let id = interner.intern(&gci.internal, &rbox)?;
                push_global(&mut globals, id, dep);
                continue;
            }
            match absorb(gci) {
                Absorbed::Trivial => {}
                Absorbed::Global(c) => {
                    let id = interner.intern(&c, &rbox)?;
                    push_global(&mut globals, id, dep);
                }
                Absorbed::Unfold(name, c) => {
                    let a = interner.atom(&name);
                    let id = interner.intern(&c, &rbox)?;
                    if id != CId::TOP {
                        unfold.entry(a).or_default().push((id, dep));
                    }
                }
                Absorbed::Domain(role, c) => {
                    let id = interner.intern(&c, &rbox)?;
                    let r = rbox.id(&role).expect("role registered");
                    if id != CId::TOP {
                        direct_domains[r.index()].push((id, dep));
                    }
                }
            }
        }

        let mut domains = vec![Vec::new(); rbox.len()];
        for r in rbox.ids() {
            for s in rbox.supers(r) {
                domains[r.index()].extend(direct_domains[s.index()].iter().cloned());
            }
        }

        let mut ind_index: BTreeMap<String, usize> = BTreeMap::new();
        for axiom in &kb.axioms {
            axiom.visit_names(&mut |u| {
                if let NameUse::Individual(i) = u {
                    ind_index.entry(i.to_string()).or_insert(0);
                }
            });
        }
        let individuals: Vec<String> = ind_index.keys().cloned().collect();
        for (k, name) in individuals.iter().enumerate() {
            ind_index.insert(name.clone(), k);
        }
        let mut class_assertions = Vec::new();
        let mut role_assertions = Vec::new();
        for (i, axiom) in kb.axioms.iter().enumerate() {
            match axiom {
                Axiom::ClassAssertion(ind, c) => {
                    if c.has_nominal() {
                        return Err(UnsupportedFeature {
                            feature: crate::logic::Feature::Nominal,
                            detail: format!("class assertion on {ind}"),
                        });
                    }
                    let id = interner.intern(&nnf(c), &rbox)?;
                    class_assertions.push((ind_index[ind], id, Dep::axiom(i)));
                }
                Axiom::PropertyAssertion(a, r, b) => {
                    let r = rbox.id(r).expect("role registered");
                    role_assertions.push((ind_index[a], r, ind_index[b], Dep::axiom(i)));
                }
                _ => {}
            }
        }

        Ok(TBox {
            interner,
            rbox,
            globals,
            unfold,
            domains,
            individuals,
            class_assertions,
            role_assertions,
        })
    }
}

fn push_global(globals: &mut Vec<(CId, Dep)>, id: CId, dep: Dep) {
    if id != CId::TOP {
        globals.push((id, dep));
    }
}

enum Absorbed {
    Trivial,
    Global(C),
    Unfold(String, C),
    Domain(crate::syntax::RoleExpr, C),
}

fn flatten_and(c: C, out: &mut Vec<C>) {
    match c {
        C::And(cs) => {
            for x in cs {
                flatten_and(x, out);
            }
        }
        C::Top => {}
        other => out.push(other),
    }
}

/// Chooses how a GCI is applied.
///
/// `A ⊑ D` unfolds on `A`; `A ⊓ R ⊑ D` unfolds `¬R ⊔ D` on `A`;
/// `∃r.⊤ ⊑ D` fires on any `r`-neighbour; everything else is internalized.
fn absorb(gci: &Gci) -> Absorbed {
    let lhs = nnf(&gci.lhs);
    let rhs = nnf(&gci.rhs);
    match lhs {
        C::Bottom => Absorbed::Trivial,
        C::Top => Absorbed::Global(rhs),
        C::Named(a) => Absorbed::Unfold(a, rhs),
        C::Some(r, f) if *f == C::Top => Absorbed::Domain(r, rhs),
        C::And(_) => {
            let mut parts = Vec::new();
            flatten_and(lhs.clone(), &mut parts);
            match parts.iter().position(|p| matches!(p, C::Named(_))) {
                Some(k) => {
                    let C::Named(a) = parts.remove(k) else { unreachable!() };
                    let rest = C::and(parts);
                    let body = nnf(&C::Or(vec![C::not(rest), rhs]));
                    Absorbed::Unfold(a, body)
                }
                None => Absorbed::Global(gci.internal.clone()),
            }
        }
        _ => Absorbed::Global(gci.internal.clone()),
    }
}
