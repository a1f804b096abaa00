//! Hash-consed NNF concepts, closed under negation.

use std::collections::HashMap;

use crate::logic::{Feature, RoleBox, RoleId, UnsupportedFeature};
use crate::syntax::ConceptExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CId(pub u32);

impl CId {
    pub const TOP: CId = CId(0);
    pub const BOTTOM: CId = CId(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Concept {
    Top,
    Bottom,
    Atom(u32),
    NotAtom(u32),
    And(Box<[CId]>),
    Or(Box<[CId]>),
    Some(RoleId, CId),
    All(RoleId, CId),
    Min(u32, RoleId),
    Max(u32, RoleId),
}

#[derive(Debug, Clone)]
pub struct Interner {
    concepts: Vec<Concept>,
    neg: Vec<CId>,
    hashes: Vec<u64>,
    map: HashMap<Concept, CId>,
    atoms: Vec<String>,
    atom_index: HashMap<String, u32>,
}

fn mix(x: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Default for Interner {
    fn default() -> Self {
        Self::new()
    }
}

impl Interner {
    pub fn new() -> Self {
        let mut i = Interner {
            concepts: Vec::new(),
            neg: Vec::new(),
            hashes: Vec::new(),
            map: HashMap::new(),
            atoms: Vec::new(),
            atom_index: HashMap::new(),
        };
        i.push(Concept::Top);
        i.push(Concept::Bottom);
        i.neg[0] = CId::BOTTOM;
        i.neg[1] = CId::TOP;
        i
    }

    fn push(&mut self, c: Concept) -> CId {
        let id = CId(self.concepts.len() as u32);
        self.map.insert(c.clone(), id);
        self.concepts.push(c);
        self.neg.push(id);
        self.hashes.push(mix(u64::from(id.0)));
        id
    }

    pub fn get(&self, id: CId) -> &Concept {
        &self.concepts[id.index()]
    }

    pub fn lookup(&self, c: &Concept) -> Option<CId> {
        self.map.get(c).copied()
    }

    pub fn neg(&self, id: CId) -> CId {
        self.neg[id.index()]
    }

    pub fn hash(&self, id: CId) -> u64 {
        self.hashes[id.index()]
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn atom(&mut self, name: &str) -> u32 {
        if let Some(&a) = self.atom_index.get(name) {
            return a;
        }
        let a = self.atoms.len() as u32;
        self.atoms.push(name.to_string());
        self.atom_index.insert(name.to_string(), a);
        a
    }

    pub fn atom_name(&self, a: u32) -> &str {
        &self.atoms[a as usize]
    }

    /// Interns `c` together with its negation, assuming the children are
    /// already closed under negation.
    fn add(&mut self, c: Concept) -> CId {
        debug_assert!(!matches!(c, Concept::Min(0, _)), "≥0 r is interned as ⊤");
        if let Some(&id) = self.map.get(&c) {
            return id;
        }
        let negated = match &c {
            Concept::Top => Concept::Bottom,
            Concept::Bottom => Concept::Top,
            Concept::Atom(a) => Concept::NotAtom(*a),
            Concept::NotAtom(a) => Concept::Atom(*a),
            Concept::And(xs) => Concept::Or(xs.iter().map(|&x| self.neg(x)).collect()),
            Concept::Or(xs) => Concept::And(xs.iter().map(|&x| self.neg(x)).collect()),
            Concept::Some(r, x) => Concept::All(*r, self.neg(*x)),
            Concept::All(r, x) => Concept::Some(*r, self.neg(*x)),
            Concept::Min(n, r) => Concept::Max(n - 1, *r),
            Concept::Max(n, r) => Concept::Min(n + 1, *r),
        };
        let id = self.push(c);
        let nid = match self.map.get(&negated) {
            Some(&nid) => nid,
            None => self.push(negated),
        };
        self.neg[id.index()] = nid;
        self.neg[nid.index()] = id;
        id
    }

    /// Interns an NNF expression. Nominals and cardinality over non-simple
    /// roles are rejected; role names must be known to `rbox`.
    pub fn intern(&mut self, c: &ConceptExpr, rbox: &RoleBox) -> Result<CId, UnsupportedFeature> {
        use ConceptExpr as E;
        let role = |r: &crate::syntax::RoleExpr| {
            rbox.id(r).unwrap_or_else(|| panic!("role {} missing from role box", r.name))
        };
        Ok(match c {
            E::Top => CId::TOP,
            E::Bottom => CId::BOTTOM,
            E::Named(n) => {
                let a = self.atom(n);
                self.add(Concept::Atom(a))
            }
            E::Not(inner) => match &**inner {
                E::Named(n) => {
                    let a = self.atom(n);
                    self.add(Concept::NotAtom(a))
                }
                E::OneOf(_) | E::HasValue(..) => return Err(nominal()),
                other => {
                    let nnf = crate::logic::negate(other);
                    return self.intern(&nnf, rbox);
                }
            },
            E::And(cs) | E::Or(cs) => {
                let mut ids = Vec::with_capacity(cs.len());
                for x in cs {
                    let id = self.intern(x, rbox)?;
                    if !ids.contains(&id) {
                        ids.push(id);
                    }
                }
                let is_and = matches!(c, E::And(_));
                let (unit, zero) = if is_and { (CId::TOP, CId::BOTTOM) } else { (CId::BOTTOM, CId::TOP) };
                if ids.contains(&zero) {
                    return Ok(zero);
                }
                ids.retain(|&x| x != unit);
                match ids.len() {
                    0 => unit,
                    1 => ids[0],
                    _ if is_and => self.add(Concept::And(ids.into())),
                    _ => self.add(Concept::Or(ids.into())),
                }
            }
            E::Some(r, f) => {
                let f = self.intern(f, rbox)?;
                if f == CId::BOTTOM {
                    return Ok(CId::BOTTOM);
                }
                self.add(Concept::Some(role(r), f))
            }
            E::Only(r, f) => {
                let f = self.intern(f, rbox)?;
                if f == CId::TOP {
                    return Ok(CId::TOP);
                }
                let s = role(r);
                let id = self.add(Concept::All(s, f));
                // ∀+ needs ∀t.C for every transitive t below s.
                let trans: Vec<RoleId> = rbox.subs(s).filter(|&t| t != s && rbox.is_transitive(t)).collect();
                for t in trans {
                    self.add(Concept::All(t, f));
                }
                id
            }
            E::Min(n, r) | E::Max(n, r) => {
                let id = role(r);
                if !rbox.is_simple(id) {
                    return Err(UnsupportedFeature {
                        feature: Feature::NonSimpleCardinality,
                        detail: format!("role {} has a transitive sub-role", r.name),
                    });
                }
                match c {
                    E::Min(0, _) => CId::TOP,
                    E::Min(n, _) => self.add(Concept::Min(*n, id)),
                    _ => self.add(Concept::Max(*n, id)),
                }
            }
            E::Exact(n, r) => {
                let both = E::And(vec![E::Min(*n, r.clone()), E::Max(*n, r.clone())]);
                return self.intern(&both, rbox);
            }
            E::OneOf(_) | E::HasValue(..) => return Err(nominal()),
        })
    }

    /// Converts an interned concept back to an expression.
    pub fn decode(&self, id: CId, rbox: &RoleBox) -> ConceptExpr {
        use ConceptExpr as E;
        match self.get(id) {
            Concept::Top => E::Top,
            Concept::Bottom => E::Bottom,
            Concept::Atom(a) => E::Named(self.atom_name(*a).to_string()),
            Concept::NotAtom(a) => E::not(E::Named(self.atom_name(*a).to_string())),
            Concept::And(xs) => E::And(xs.iter().map(|&x| self.decode(x, rbox)).collect()),
            Concept::Or(xs) => E::Or(xs.iter().map(|&x| self.decode(x, rbox)).collect()),
            Concept::Some(r, x) => E::some(rbox.expr(*r), self.decode(*x, rbox)),
            Concept::All(r, x) => E::only(rbox.expr(*r), self.decode(*x, rbox)),
            Concept::Min(n, r) => E::Min(*n, rbox.expr(*r)),
            Concept::Max(n, r) => E::Max(*n, rbox.expr(*r)),
        }
    }
}

fn nominal() -> UnsupportedFeature {
    UnsupportedFeature { feature: Feature::Nominal, detail: "nominals are parse-only".into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::role_closure_with;
    use crate::syntax::{parse_concept, PrefixEnv};

    #[test]
    fn negation_closure() {
        let rb = role_closure_with(&[], ["r"]);
        let mut i = Interner::new();
        let c = parse_concept("A and (r some (B or not C)) and r max 2", &PrefixEnv::default()).unwrap();
        let id = i.intern(&c, &rb).unwrap();
        for k in 0..i.len() {
            let k = CId(k as u32);
            assert_eq!(i.neg(i.neg(k)), k);
        }
        assert!(matches!(i.get(i.neg(id)), Concept::Or(_)));
        assert_eq!(i.decode(id, &rb), c);
    }

    #[test]
    fn simplification() {
        let rb = role_closure_with(&[], ["r"]);
        let mut i = Interner::new();
        let env = PrefixEnv::default();
        let mut p = |s: &str| i.intern(&parse_concept(s, &env).unwrap(), &rb).unwrap();
        assert_eq!(p("A and owl:Nothing"), CId::BOTTOM);
        assert_eq!(p("A or owl:Thing"), CId::TOP);
        assert_eq!(p("r some owl:Nothing"), CId::BOTTOM);
        assert_eq!(p("A and A"), p("A"));
    }
}
