use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::syntax::{vocab, Axiom, NameUse, RoleExpr};

/// Dense role-expression id: `2k` is the k-th role name, `2k + 1` its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoleId(pub u32);

impl RoleId {
    pub fn inverse(self) -> RoleId {
        RoleId(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Role hierarchy with inverses and transitivity, closed under the
/// sub-role relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleBox {
    names: Vec<String>,
    index: HashMap<String, u32>,
    /// `sup[a][b]` iff `a ⊑* b`.
    sup: Vec<Vec<bool>>,
    transitive: Vec<bool>,
    /// Asserted inverse name per role name, else a synthetic name.
    inverse_names: BTreeMap<String, String>,
}

impl RoleBox {
    pub fn len(&self) -> usize {
        self.names.len() * 2
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.names.iter().map(String::as_str)
    }

    pub fn id(&self, r: &RoleExpr) -> Option<RoleId> {
        self.index.get(&r.name).map(|k| RoleId(k * 2 + u32::from(r.inverted)))
    }

    pub fn expr(&self, id: RoleId) -> RoleExpr {
        RoleExpr { name: self.names[id.index() / 2].clone(), inverted: id.0 & 1 == 1 }
    }

    pub fn ids(&self) -> impl Iterator<Item = RoleId> {
        (0..self.len() as u32).map(RoleId)
    }

    pub fn is_sub(&self, a: RoleId, b: RoleId) -> bool {
        self.sup[a.index()][b.index()]
    }

    pub fn is_sub_role(&self, a: &RoleExpr, b: &RoleExpr) -> bool {
        match (self.id(a), self.id(b)) {
            (Some(a), Some(b)) => self.is_sub(a, b),
            _ => a == b,
        }
    }

    /// All `s` with `r ⊑* s`, including `r`.
    pub fn supers(&self, r: RoleId) -> impl Iterator<Item = RoleId> + '_ {
        self.sup[r.index()]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| RoleId(i as u32))
    }

    /// All `s` with `s ⊑* r`, including `r`.
    pub fn subs(&self, r: RoleId) -> impl Iterator<Item = RoleId> + '_ {
        self.ids().filter(move |&s| self.is_sub(s, r))
    }

    pub fn is_transitive(&self, r: RoleId) -> bool {
        self.transitive[r.index()]
    }

    /// A role is simple when none of its sub-roles is transitive.
    pub fn is_simple(&self, r: RoleId) -> bool {
        self.subs(r).all(|s| !self.is_transitive(s))
    }

    /// Name of the inverse of role name `name`: the asserted one if any,
    /// else a synthetic name in the reserved namespace.
    pub fn inverse_name(&self, name: &str) -> Option<&str> {
        self.inverse_names.get(name).map(String::as_str)
    }

    /// The closure as a set of pairs of role expressions.
    pub fn closure_pairs(&self) -> BTreeSet<(RoleExpr, RoleExpr)> {
        let mut out = BTreeSet::new();
        for a in self.ids() {
            for b in self.supers(a) {
                out.insert((self.expr(a), self.expr(b)));
            }
        }
        out
    }

    pub fn transitive_roles(&self) -> BTreeSet<RoleExpr> {
        self.ids().filter(|&r| self.is_transitive(r)).map(|r| self.expr(r)).collect()
    }

    /// Role axioms whose closure is this box: every closure pair and every
    /// transitive role.
    pub fn to_axioms(&self) -> Vec<Axiom> {
        let mut out: Vec<Axiom> = self
            .closure_pairs()
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| Axiom::SubPropertyOf(a, b))
            .collect();
        for r in self.ids().filter(|r| r.0 & 1 == 0 && self.is_transitive(*r)) {
            out.push(Axiom::TransitiveProperty(self.names[r.index() / 2].clone()));
        }
        for name in &self.names {
            out.push(Axiom::Declaration(crate::syntax::EntityKind::ObjectProperty, name.clone()));
        }
        out
    }

    /// Human-readable form; synthetic inverse names never surface.
    pub fn display(r: &RoleExpr) -> String {
        if r.inverted {
            format!("inverse {}", r.name)
        } else {
            r.name.clone()
        }
    }
}

/// Builds the role box from `axioms`. Role names are collected from every
/// axiom; sub-role pairs from the role axioms.
pub fn role_closure(axioms: &[Axiom]) -> RoleBox {
    role_closure_with(axioms, std::iter::empty::<String>())
}

/// As [`role_closure`], additionally registering `extra` role names.
pub fn role_closure_with<I, S>(axioms: &[Axiom], extra: I) -> RoleBox
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut names: BTreeSet<String> = extra.into_iter().map(Into::into).collect();
    for a in axioms {
        a.visit_names(&mut |u| {
            if let NameUse::Role(r) = u {
                names.insert(r.to_string());
            }
        });
        if let Axiom::Declaration(crate::syntax::EntityKind::ObjectProperty, r) = a {
            names.insert(r.clone());
        }
    }
    let names: Vec<String> = names.into_iter().collect();
    let index: HashMap<String, u32> =
        names.iter().enumerate().map(|(i, n)| (n.clone(), i as u32)).collect();
    let n = names.len() * 2;
    let id = |r: &RoleExpr| RoleId(index[&r.name] * 2 + u32::from(r.inverted));

    let mut sup = vec![vec![false; n]; n];
    let mut add = |a: RoleId, b: RoleId| {
        sup[a.index()][b.index()] = true;
        sup[a.inverse().index()][b.inverse().index()] = true;
    };
    let mut transitive = vec![false; n];
    let mut inverse_names = BTreeMap::new();
    for a in axioms {
        match a {
            Axiom::SubPropertyOf(x, y) => add(id(x), id(y)),
            Axiom::EquivalentProperties(rs) => {
                for x in rs {
                    for y in rs {
                        add(id(x), id(y));
                    }
                }
            }
            Axiom::InverseProperties(x, y) => {
                let x = RoleId(index[x] * 2);
                let y = RoleId(index[y] * 2);
                add(y, x.inverse());
                add(x.inverse(), y);
            }
            Axiom::TransitiveProperty(r) => {
                let r = RoleId(index[r] * 2);
                transitive[r.index()] = true;
                transitive[r.inverse().index()] = true;
            }
            _ => {}
        }
        if let Axiom::InverseProperties(x, y) = a {
            inverse_names.entry(x.clone()).or_insert_with(|| y.clone());
            inverse_names.entry(y.clone()).or_insert_with(|| x.clone());
        }
    }
    for name in &names {
        inverse_names
            .entry(name.clone())
            .or_insert_with(|| format!("{}{}", vocab::SYNTHETIC_INVERSE, name));
    }

    for (i, row) in sup.iter_mut().enumerate() {
        row[i] = true;
    }
    // Warshall closure; role sets are small.
    for k in 0..n {
        for i in 0..n {
            if sup[i][k] {
                for j in 0..n {
                    if sup[k][j] {
                        sup[i][j] = true;
                    }
                }
            }
        }
    }
    // A role equivalent to a transitive role is itself transitive.
    let asserted = transitive.clone();
    for s in 0..n {
        if (0..n).any(|t| asserted[t] && sup[s][t] && sup[t][s]) {
            transitive[s] = true;
        }
    }

    RoleBox { names, index, sup, transitive, inverse_names }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: &str) -> RoleExpr {
        RoleExpr::named(n)
    }

    #[test]
    fn transitive_sub_roles() {
        let rb = role_closure(&[
            Axiom::SubPropertyOf(r("r"), r("s")),
            Axiom::SubPropertyOf(r("s"), r("t")),
        ]);
        assert!(rb.is_sub_role(&r("r"), &r("t")));
        assert!(rb.is_sub_role(&r("r").inverse(), &r("t").inverse()));
        assert!(!rb.is_sub_role(&r("t"), &r("r")));
    }

    #[test]
    fn inverse_properties_interact_with_hierarchy() {
        let rb = role_closure(&[
            Axiom::InverseProperties("r".into(), "s".into()),
            Axiom::SubPropertyOf(r("r"), r("t")),
        ]);
        assert!(rb.is_sub_role(&r("s"), &r("t").inverse()));
        assert!(rb.is_sub_role(&r("s").inverse(), &r("t")));
        assert_eq!(rb.inverse_name("r"), Some("s"));
        assert_eq!(rb.inverse_name("t"), Some("urn:sdl:inv#t"));
    }

    #[test]
    fn identity_without_axioms() {
        let rb = role_closure_with(&[], ["p", "q"]);
        let pairs = rb.closure_pairs();
        assert_eq!(pairs.len(), 4);
        assert!(pairs.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn simplicity_and_transitivity() {
        let rb = role_closure(&[
            Axiom::TransitiveProperty("part".into()),
            Axiom::SubPropertyOf(r("part"), r("rel")),
            Axiom::SubPropertyOf(r("member"), r("part")),
        ]);
        let id = |e: &RoleExpr| rb.id(e).unwrap();
        assert!(rb.is_transitive(id(&r("part").inverse())));
        assert!(!rb.is_simple(id(&r("rel"))));
        assert!(rb.is_simple(id(&r("member"))));
    }
}
