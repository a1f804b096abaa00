//! Bounded finite-model search, used as a reference for the tableau.
//!
//! Interpretations over domains `{0..n}` are searched exhaustively with
//! three-valued evaluation for pruning: a partial assignment is abandoned as
//! soon as some constraint is false under every completion, and accepted as
//! soon as all constraints are true under every completion. The search
//! evaluates the original expressions directly and shares no code with the
//! reasoner's normalization or expansion rules.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::kb::KnowledgeBase;
use crate::syntax::{Axiom, ConceptExpr as C, NameUse, RoleExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("unsupported in the model oracle: {0}")]
    Unsupported(String),
}

/// A finite interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub domain: usize,
    pub classes: BTreeMap<String, BTreeSet<usize>>,
    pub roles: BTreeMap<String, BTreeSet<(usize, usize)>>,
    pub individuals: BTreeMap<String, usize>,
}

impl Interpretation {
    pub fn holds(&self, r: &RoleExpr, x: usize, y: usize) -> bool {
        let pair = if r.inverted { (y, x) } else { (x, y) };
        self.roles.get(&r.name).is_some_and(|s| s.contains(&pair))
    }

    fn count(&self, r: &RoleExpr, x: usize) -> usize {
        (0..self.domain).filter(|&y| self.holds(r, x, y)).count()
    }

    /// Two-valued membership of element `x` in `c`.
    pub fn satisfies(&self, c: &C, x: usize) -> bool {
        match c {
            C::Top => true,
            C::Bottom => false,
            C::Named(a) => self.classes.get(a).is_some_and(|s| s.contains(&x)),
            C::And(cs) => cs.iter().all(|c| self.satisfies(c, x)),
            C::Or(cs) => cs.iter().any(|c| self.satisfies(c, x)),
            C::Not(c) => !self.satisfies(c, x),
            C::Some(r, f) => (0..self.domain).any(|y| self.holds(r, x, y) && self.satisfies(f, y)),
            C::Only(r, f) => (0..self.domain).all(|y| !self.holds(r, x, y) || self.satisfies(f, y)),
            C::Min(n, r) => self.count(r, x) >= *n as usize,
            C::Max(n, r) => self.count(r, x) <= *n as usize,
            C::Exact(n, r) => self.count(r, x) == *n as usize,
            C::OneOf(is) => is.iter().any(|i| self.individuals.get(i) == Some(&x)),
            C::HasValue(r, i) => self.individuals.get(i).is_some_and(|&y| self.holds(r, x, y)),
        }
    }

    pub fn extension(&self, c: &C) -> BTreeSet<usize> {
        (0..self.domain).filter(|&x| self.satisfies(c, x)).collect()
    }

    /// Whether the interpretation is a model of `axiom`. Annotations,
    /// declarations, imports and opaque content hold trivially.
    pub fn satisfies_axiom(&self, axiom: &Axiom) -> bool {
        let all = |c: &C| (0..self.domain).all(|x| self.satisfies(c, x));
        let pairs = || (0..self.domain).flat_map(|x| (0..self.domain).map(move |y| (x, y)));
        match axiom {
            Axiom::SubClassOf(a, b) => all(&C::Or(vec![C::not(a.clone()), b.clone()])),
            Axiom::EquivalentClasses(cs) => cs.windows(2).all(|w| self.extension(&w[0]) == self.extension(&w[1])),
            Axiom::DisjointClasses(cs) => cs.iter().enumerate().all(|(i, a)| {
                cs[i + 1..].iter().all(|b| self.extension(a).is_disjoint(&self.extension(b)))
            }),
            Axiom::Domain(r, c) => {
                all(&C::Or(vec![C::not(C::some(RoleExpr::named(r.clone()), C::Top)), c.clone()]))
            }
            Axiom::Range(r, c) => all(&C::only(RoleExpr::named(r.clone()), c.clone())),
            Axiom::SubPropertyOf(r, s) => pairs().all(|(x, y)| !self.holds(r, x, y) || self.holds(s, x, y)),
            Axiom::EquivalentProperties(rs) => {
                pairs().all(|(x, y)| rs.iter().all(|r| self.holds(r, x, y) == self.holds(&rs[0], x, y)))
            }
            Axiom::InverseProperties(a, b) => pairs().all(|(x, y)| {
                self.holds(&RoleExpr::named(a.clone()), x, y) == self.holds(&RoleExpr::named(b.clone()), y, x)
            }),
            Axiom::TransitiveProperty(r) => {
                let r = RoleExpr::named(r.clone());
                pairs().all(|(x, y)| {
                    !self.holds(&r, x, y) || (0..self.domain).all(|z| !self.holds(&r, y, z) || self.holds(&r, x, z))
                })
            }
            Axiom::ClassAssertion(i, c) => self.individuals.get(i).is_some_and(|&x| self.satisfies(c, x)),
            Axiom::PropertyAssertion(a, r, b) => match (self.individuals.get(a), self.individuals.get(b)) {
                (Some(&x), Some(&y)) => self.holds(r, x, y),
                _ => false,
            },
            Axiom::Declaration(..) | Axiom::AnnotationAssertion(..) | Axiom::Import(_) | Axiom::Opaque { .. } => true,
        }
    }
}

/// Search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of boolean variables (class and role bits).
    pub max_bits: usize,
    /// Maximum number of search nodes over all domain sizes.
    pub max_steps: u64,
    /// Maximum number of models collected by [`enumerate_models`].
    pub max_models: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_bits: 64, max_steps: 20_000_000, max_models: 100_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum V {
    F,
    U,
    T,
}

impl V {
    fn not(self) -> V {
        match self {
            V::F => V::T,
            V::U => V::U,
            V::T => V::F,
        }
    }

    fn and(self, o: V) -> V {
        match (self, o) {
            (V::F, _) | (_, V::F) => V::F,
            (V::T, V::T) => V::T,
            _ => V::U,
        }
    }

    fn or(self, o: V) -> V {
        self.not().and(o.not()).not()
    }

    fn from(b: Option<bool>) -> V {
        match b {
            Some(true) => V::T,
            Some(false) => V::F,
            None => V::U,
        }
    }
}

/// Constraints an interpretation must satisfy.
#[derive(Debug, Clone)]
enum Constraint {
    /// Holds at every element.
    Everywhere(C),
    /// Holds at the given element.
    At(C, usize),
    /// Holds at some element.
    Somewhere(C),
    RoleSub(RoleExpr, RoleExpr),
    Transitive(String),
    Edge(RoleExpr, usize, usize),
}

struct Search<'a> {
    n: usize,
    classes: &'a HashMap<String, usize>,
    roles: &'a HashMap<String, usize>,
    bits: Vec<Option<bool>>,
    constraints: &'a [Constraint],
    steps: u64,
    max_steps: u64,
}

impl Search<'_> {
    fn class_bit(&self, a: &str, x: usize) -> Option<bool> {
        self.bits[self.classes[a] * self.n + x]
    }

    fn role_offset(&self) -> usize {
        self.classes.len() * self.n
    }

    fn role_index(&self, r: &RoleExpr, x: usize, y: usize) -> usize {
        let (x, y) = if r.inverted { (y, x) } else { (x, y) };
        self.role_offset() + (self.roles[&r.name] * self.n + x) * self.n + y
    }

    fn role(&self, r: &RoleExpr, x: usize, y: usize) -> V {
        V::from(self.bits[self.role_index(r, x, y)])
    }

    fn eval(&self, c: &C, x: usize) -> V {
        match c {
            C::Top => V::T,
            C::Bottom => V::F,
            C::Named(a) => V::from(self.class_bit(a, x)),
            C::Not(c) => self.eval(c, x).not(),
            C::And(cs) => cs.iter().fold(V::T, |acc, c| if acc == V::F { acc } else { acc.and(self.eval(c, x)) }),
            C::Or(cs) => cs.iter().fold(V::F, |acc, c| if acc == V::T { acc } else { acc.or(self.eval(c, x)) }),
            C::Some(r, f) => (0..self.n).fold(V::F, |acc, y| {
                if acc == V::T {
                    acc
                } else {
                    acc.or(self.role(r, x, y).and(self.eval(f, y)))
                }
            }),
            C::Only(r, f) => (0..self.n).fold(V::T, |acc, y| {
                if acc == V::F {
                    acc
                } else {
                    acc.and(self.role(r, x, y).not().or(self.eval(f, y)))
                }
            }),
            C::Min(k, r) | C::Max(k, r) | C::Exact(k, r) => {
                let (mut sure, mut maybe) = (0usize, 0usize);
                for y in 0..self.n {
                    match self.role(r, x, y) {
                        V::T => sure += 1,
                        V::U => maybe += 1,
                        V::F => {}
                    }
                }
                let k = *k as usize;
                let at_least = if sure >= k {
                    V::T
                } else if sure + maybe < k {
                    V::F
                } else {
                    V::U
                };
                let at_most = if sure + maybe <= k {
                    V::T
                } else if sure > k {
                    V::F
                } else {
                    V::U
                };
                match c {
                    C::Min(..) => at_least,
                    C::Max(..) => at_most,
                    _ => at_least.and(at_most),
                }
            }
            C::OneOf(_) | C::HasValue(..) => unreachable!("rejected before search"),
        }
    }

    fn check(&self, k: &Constraint) -> V {
        let n = self.n;
        match k {
            Constraint::Everywhere(c) => (0..n).fold(V::T, |acc, x| if acc == V::F { acc } else { acc.and(self.eval(c, x)) }),
            Constraint::At(c, x) => self.eval(c, *x),
            Constraint::Somewhere(c) => (0..n).fold(V::F, |acc, x| if acc == V::T { acc } else { acc.or(self.eval(c, x)) }),
            Constraint::RoleSub(r, s) => {
                let mut acc = V::T;
                for x in 0..n {
                    for y in 0..n {
                        acc = acc.and(self.role(r, x, y).not().or(self.role(s, x, y)));
                        if acc == V::F {
                            return acc;
                        }
                    }
                }
                acc
            }
            Constraint::Transitive(name) => {
                let r = RoleExpr::named(name.clone());
                let mut acc = V::T;
                for x in 0..n {
                    for y in 0..n {
                        let xy = self.role(&r, x, y);
                        if xy == V::F {
                            continue;
                        }
                        for z in 0..n {
                            acc = acc.and(xy.not().or(self.role(&r, y, z).not()).or(self.role(&r, x, z)));
                            if acc == V::F {
                                return acc;
                            }
                        }
                    }
                }
                acc
            }
            Constraint::Edge(r, x, y) => self.role(r, *x, *y),
        }
    }

    fn status(&self) -> V {
        let mut acc = V::T;
        for k in self.constraints {
            acc = acc.and(self.check(k));
            if acc == V::F {
                break;
            }
        }
        acc
    }

    /// Variable order: names closer to the query first; within one
    /// distance, everything among elements `0..=e` before anything involving
    /// `e + 1`.
    fn order(&self, p: &Problem) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.bits.len());
        let ranks = p.class_rank.iter().chain(&p.role_rank).copied().max().unwrap_or(0);
        for rank in 0..=ranks {
            for e in 0..self.n {
                for (a, _) in p.class_rank.iter().enumerate().filter(|(_, &k)| k == rank) {
                    out.push(a * self.n + e);
                }
                for (r, _) in p.role_rank.iter().enumerate().filter(|(_, &k)| k == rank) {
                    for o in 0..=e {
                        out.push(self.role_offset() + (r * self.n + e) * self.n + o);
                        if o != e {
                            out.push(self.role_offset() + (r * self.n + o) * self.n + e);
                        }
                    }
                }
            }
        }
        out
    }

    fn run(&mut self, order: &[usize], pos: usize, sink: &mut dyn FnMut(&[Option<bool>]) -> bool) -> Result<bool, OracleError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(OracleError::ResourceLimit(format!("more than {} search steps", self.max_steps)));
        }
        match self.status() {
            V::F => return Ok(false),
            V::T => return Ok(sink(&self.bits[..])),
            V::U => {}
        }
        let Some(&v) = order.get(pos) else { return Ok(false) };
        for val in [false, true] {
            self.bits[v] = Some(val);
            if self.run(order, pos + 1, sink)? {
                self.bits[v] = None;
                return Ok(true);
            }
        }
        self.bits[v] = None;
        Ok(false)
    }
}

struct Problem {
    classes: Vec<String>,
    roles: Vec<String>,
    /// Distance of each name from the query through shared axioms.
    class_rank: Vec<usize>,
    role_rank: Vec<usize>,
    individuals: Vec<String>,
    axioms: Vec<Axiom>,
}

fn problem(kb: &KnowledgeBase, c: &C) -> Result<Problem, OracleError> {
    let mut classes = BTreeSet::new();
    let mut roles = BTreeSet::new();
    let mut individuals = BTreeSet::new();
    let mut axioms = Vec::new();
    let mut visit = |u: NameUse<'_>| match u {
        NameUse::Class(a) => {
            classes.insert(a.to_string());
        }
        NameUse::Role(r) => {
            roles.insert(r.to_string());
        }
        NameUse::Individual(i) => {
            individuals.insert(i.to_string());
        }
        NameUse::AnnotationProperty(_) => {}
    };
    if c.has_nominal() {
        return Err(OracleError::Unsupported("nominal in query".into()));
    }
    c.visit_names(&mut visit);
    for a in &kb.axioms {
        match a {
            Axiom::Declaration(..) | Axiom::AnnotationAssertion(..) | Axiom::Import(_) | Axiom::Opaque { .. } => continue,
            Axiom::SubClassOf(..) | Axiom::EquivalentClasses(_) | Axiom::DisjointClasses(_) | Axiom::ClassAssertion(..) => {
                let mut nominal = false;
                a.visit_names(&mut |u| nominal |= matches!(u, NameUse::Individual(_)) && !matches!(a, Axiom::ClassAssertion(..)));
                if nominal {
                    return Err(OracleError::Unsupported("nominal in axiom".into()));
                }
            }
            _ => {}
        }
        a.visit_names(&mut visit);
        axioms.push(a.clone());
    }
    let classes: Vec<String> = classes.into_iter().collect();
    let roles: Vec<String> = roles.into_iter().collect();
    let (class_rank, role_rank) = ranks(c, &axioms, &classes, &roles);
    Ok(Problem {
        classes,
        roles,
        class_rank,
        role_rank,
        individuals: individuals.into_iter().collect(),
        axioms,
    })
}

fn names_of(visit: impl FnOnce(&mut dyn FnMut(NameUse<'_>))) -> BTreeSet<(bool, String)> {
    let mut out = BTreeSet::new();
    visit(&mut |u| match u {
        NameUse::Class(a) => {
            out.insert((true, a.to_string()));
        }
        NameUse::Role(r) => {
            out.insert((false, r.to_string()));
        }
        _ => {}
    });
    out
}

/// Breadth-first distance of every class and role name from the names of
/// `c`, where two names are adjacent when some axiom mentions both.
fn ranks(c: &C, axioms: &[Axiom], classes: &[String], roles: &[String]) -> (Vec<usize>, Vec<usize>) {
    let mut rank: BTreeMap<(bool, String), usize> = BTreeMap::new();
    let mut frontier = names_of(|f| c.visit_names(&mut |u| f(u)));
    let groups: Vec<BTreeSet<(bool, String)>> =
        axioms.iter().map(|a| names_of(|f| a.visit_names(&mut |u| f(u)))).collect();
    let mut k = 0;
    while !frontier.is_empty() {
        for name in &frontier {
            rank.insert(name.clone(), k);
        }
        let mut next = BTreeSet::new();
        for g in &groups {
            if g.iter().any(|n| frontier.contains(n)) {
                next.extend(g.iter().filter(|n| !rank.contains_key(*n)).cloned());
            }
        }
        frontier = next;
        k += 1;
    }
    let get = |kind: bool, n: &String| rank.get(&(kind, n.clone())).copied().unwrap_or(k);
    (classes.iter().map(|n| get(true, n)).collect(), roles.iter().map(|n| get(false, n)).collect())
}

fn constraints(p: &Problem, mapping: &BTreeMap<String, usize>) -> Vec<Constraint> {
    let mut out = Vec::new();
    for a in &p.axioms {
        match a {
            Axiom::SubClassOf(x, y) => out.push(Constraint::Everywhere(C::Or(vec![C::not(x.clone()), y.clone()]))),
            Axiom::EquivalentClasses(cs) => {
                for x in cs {
                    for y in cs {
                        if x != y {
                            out.push(Constraint::Everywhere(C::Or(vec![C::not(x.clone()), y.clone()])));
                        }
                    }
                }
            }
            Axiom::DisjointClasses(cs) => {
                for (i, x) in cs.iter().enumerate() {
                    for y in &cs[i + 1..] {
                        out.push(Constraint::Everywhere(C::not(C::And(vec![x.clone(), y.clone()]))));
                    }
                }
            }
            Axiom::Domain(r, c) => out.push(Constraint::Everywhere(C::Or(vec![
                C::not(C::some(RoleExpr::named(r.clone()), C::Top)),
                c.clone(),
            ]))),
            Axiom::Range(r, c) => out.push(Constraint::Everywhere(C::only(RoleExpr::named(r.clone()), c.clone()))),
            Axiom::SubPropertyOf(r, s) => out.push(Constraint::RoleSub(r.clone(), s.clone())),
            Axiom::EquivalentProperties(rs) => {
                for r in rs {
                    for s in rs {
                        if r != s {
                            out.push(Constraint::RoleSub(r.clone(), s.clone()));
                        }
                    }
                }
            }
            Axiom::InverseProperties(a, b) => {
                let (a, b) = (RoleExpr::named(a.clone()), RoleExpr::named(b.clone()));
                out.push(Constraint::RoleSub(a.clone(), b.inverse()));
                out.push(Constraint::RoleSub(b.inverse(), a));
            }
            Axiom::TransitiveProperty(r) => out.push(Constraint::Transitive(r.clone())),
            Axiom::ClassAssertion(i, c) => out.push(Constraint::At(c.clone(), mapping[i])),
            Axiom::PropertyAssertion(a, r, b) => out.push(Constraint::Edge(r.clone(), mapping[a], mapping[b])),
            _ => {}
        }
    }
    out
}

fn decode(p: &Problem, n: usize, bits: &[Option<bool>], mapping: &BTreeMap<String, usize>) -> Interpretation {
    let on = |i: usize| bits[i] == Some(true);
    let mut classes = BTreeMap::new();
    for (k, a) in p.classes.iter().enumerate() {
        classes.insert(a.clone(), (0..n).filter(|&x| on(k * n + x)).collect());
    }
    let off = p.classes.len() * n;
    let mut roles = BTreeMap::new();
    for (k, r) in p.roles.iter().enumerate() {
        let mut set = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if on(off + (k * n + x) * n + y) {
                    set.insert((x, y));
                }
            }
        }
        roles.insert(r.clone(), set);
    }
    Interpretation { domain: n, classes, roles, individuals: mapping.clone() }
}

/// All maps from individuals into `0..n`, in lexicographic order.
fn mappings(individuals: &[String], n: usize) -> Vec<BTreeMap<String, usize>> {
    let mut out = vec![BTreeMap::new()];
    for i in individuals {
        let mut next = Vec::new();
        for m in &out {
            for x in 0..n {
                let mut m = m.clone();
                m.insert(i.clone(), x);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

fn search(
    kb: &KnowledgeBase,
    c: &C,
    max_domain: usize,
    limits: OracleLimits,
    first_only: bool,
) -> Result<Vec<Interpretation>, OracleError> {
    let p = problem(kb, c)?;
    let classes: HashMap<String, usize> = p.classes.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    let roles: HashMap<String, usize> = p.roles.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let mut models = Vec::new();
    let mut steps = 0u64;
    for n in 1..=max_domain {
        let nbits = classes.len() * n + roles.len() * n * n;
        if nbits > limits.max_bits {
            return Err(OracleError::ResourceLimit(format!(
                "{nbits} variables for domain size {n} exceed the limit of {}",
                limits.max_bits
            )));
        }
        for mapping in mappings(&p.individuals, n) {
            let mut ks = constraints(&p, &mapping);
            // Element 0 can always be chosen as a member of `c` when only
            // one model is wanted.
            ks.push(if first_only { Constraint::At(c.clone(), 0) } else { Constraint::Somewhere(c.clone()) });
            let mut s = Search {
                n,
                classes: &classes,
                roles: &roles,
                bits: vec![None; nbits],
                constraints: &ks,
                steps,
                max_steps: limits.max_steps,
            };
            let order = s.order(&p);
            let mut overflow = false;
            let mut sink = |bits: &[Option<bool>]| {
                if first_only {
                    models.push(decode(&p, n, bits, &mapping));
                    return true;
                }
                // Every completion of the free bits is a model.
                let free: Vec<usize> = (0..bits.len()).filter(|&i| bits[i].is_none()).collect();
                if free.len() >= 32 || models.len() + (1usize << free.len()) > limits.max_models {
                    overflow = true;
                    return true;
                }
                for mask in 0..(1u64 << free.len()) {
                    let mut full = bits.to_vec();
                    for (k, &i) in free.iter().enumerate() {
                        full[i] = Some(mask >> k & 1 == 1);
                    }
                    models.push(decode(&p, n, &full, &mapping));
                }
                false
            };
            let done = s.run(&order, 0, &mut sink)?;
            steps = s.steps;
            if overflow {
                return Err(OracleError::ResourceLimit(format!("more than {} models", limits.max_models)));
            }
            if done && first_only {
                return Ok(models);
            }
        }
    }
    Ok(models)
}

/// Every interpretation with domain size `1..=max_domain` that satisfies all
/// axioms of `kb` and gives `c` a non-empty extension. Enumeration order is
/// deterministic: by domain size, then individual mapping, then assignment.
pub fn enumerate_models(kb: &KnowledgeBase, c: &C, max_domain: usize) -> Result<Vec<Interpretation>, OracleError> {
    search(kb, c, max_domain, OracleLimits::default(), false)
}

/// The first model found by the same search, or `None` when no model with
/// at most `max_domain` elements exists.
pub fn find_model(kb: &KnowledgeBase, c: &C, max_domain: usize) -> Result<Option<Interpretation>, OracleError> {
    find_model_with(kb, c, max_domain, OracleLimits::default())
}

pub fn find_model_with(
    kb: &KnowledgeBase,
    c: &C,
    max_domain: usize,
    limits: OracleLimits,
) -> Result<Option<Interpretation>, OracleError> {
    Ok(search(kb, c, max_domain, limits, true)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_concept, PrefixEnv};

    fn c(s: &str) -> C {
        parse_concept(s, &PrefixEnv::default()).unwrap()
    }

    #[test]
    fn single_name_single_element() {
        let ms = enumerate_models(&KnowledgeBase::empty(), &c("A"), 1).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].classes["A"], BTreeSet::from([0]));
    }

    #[test]
    fn contradiction_has_no_models() {
        for n in 1..=3 {
            assert!(enumerate_models(&KnowledgeBase::empty(), &c("A and not A"), n).unwrap().is_empty());
        }
    }

    #[test]
    fn counting_models() {
        // Over one element with names A, B: A must hold, B is free.
        let ms = enumerate_models(&KnowledgeBase::empty(), &c("A or (B and not B)"), 1).unwrap();
        assert_eq!(ms.len(), 2);
        let ms = enumerate_models(&KnowledgeBase::empty(), &c("A or B"), 1).unwrap();
        assert_eq!(ms.len(), 3);
        // Two elements, one role: r-successor exists for some element.
        let ms = enumerate_models(&KnowledgeBase::empty(), &c("r some owl:Thing"), 2).unwrap();
        assert_eq!(ms.len(), 1 + (16 - 1));
    }

    #[test]
    fn cardinality_without_room() {
        let kb = KnowledgeBase::empty();
        assert!(find_model(&kb, &c("r min 3 and r max 2 and r only A"), 4).unwrap().is_none());
        assert!(find_model(&kb, &c("r min 3"), 2).unwrap().is_none());
        let m = find_model(&kb, &c("r min 3"), 3).unwrap().unwrap();
        assert!(m.satisfies(&c("r min 3"), 0));
    }

    #[test]
    fn respects_axioms() {
        let kb = KnowledgeBase::from_text(
            "ObjectProperty: r Characteristics: Transitive\nObjectProperty: s InverseOf: r\n\
             Class: A SubClassOf: B",
            "t.omn",
        )
        .unwrap();
        assert!(find_model(&kb, &c("A and not B"), 3).unwrap().is_none());
        assert!(find_model(&kb, &c("r some (r some C) and r only not C"), 3).unwrap().is_none());
        assert!(find_model(&kb, &c("C and r some (s only not C)"), 3).unwrap().is_none());
        let m = find_model(&kb, &c("r some (r some C)"), 3).unwrap().unwrap();
        assert!(kb.axioms.iter().all(|a| m.satisfies_axiom(a)));
    }

    #[test]
    fn abox_mapping() {
        let kb = KnowledgeBase::from_text("Class: A DisjointWith: B\nIndividual: a Types: A\nIndividual: b Facts: r a", "t").unwrap();
        assert!(find_model(&kb, &c("B and r some A"), 2).unwrap().is_some());
        assert!(find_model(&kb, &c("A and B"), 3).unwrap().is_none());
    }

    #[test]
    fn bit_limit() {
        let limits = OracleLimits { max_bits: 1, ..OracleLimits::default() };
        let err = find_model_with(&KnowledgeBase::empty(), &c("r some A"), 2, limits).unwrap_err();
        assert!(matches!(err, OracleError::ResourceLimit(_)));
    }
}
