//! Completion-graph expansion with dependency-directed backtracking.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use super::dep::Dep;
use super::intern::{CId, Concept, Interner};
use super::tbox::TBox;
use super::{ClashKind, TableauConfig};
use crate::logic::RoleId;

pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Root,
    Blockable,
}

#[derive(Debug, Clone)]
pub struct Node {
    pub kind: NodeKind,
    pub parent: Option<NodeId>,
    pub label: BTreeMap<CId, Dep>,
    hash: u64,
    ors: Vec<CId>,
    gens: Vec<CId>,
    maxes: Vec<CId>,
    alls: Vec<CId>,
    pub adj: BTreeSet<NodeId>,
    /// Outgoing edges; an edge between a parent and its child is always
    /// stored at the parent.
    pub out: BTreeMap<NodeId, BTreeMap<RoleId, Dep>>,
    /// Inequalities with other nodes, recorded on both sides.
    neq: BTreeMap<NodeId, Dep>,
    pub pruned: bool,
    pub merged_into: Option<NodeId>,
}

impl Node {
    fn new(kind: NodeKind, parent: Option<NodeId>) -> Self {
        Node {
            kind,
            parent,
            label: BTreeMap::new(),
            hash: 0,
            ors: Vec::new(),
            gens: Vec::new(),
            maxes: Vec::new(),
            alls: Vec::new(),
            adj: BTreeSet::new(),
            out: BTreeMap::new(),
            neq: BTreeMap::new(),
            pruned: false,
            merged_into: None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Concept(NodeId, CId),
    Edge(NodeId, NodeId, RoleId),
}

/// Search state. Nodes are shared between snapshots and copied on write.
#[derive(Debug, Clone, Default)]
pub struct State {
    pub nodes: Vec<Arc<Node>>,
    todo: VecDeque<Task>,
}

impl State {
    fn node_mut(&mut self, x: NodeId) -> &mut Node {
        Arc::make_mut(&mut self.nodes[x as usize])
    }

    pub fn edge(&self, from: NodeId, to: NodeId) -> Option<&BTreeMap<RoleId, Dep>> {
        self.nodes[from as usize].out.get(&to)
    }

    /// All edges as `(from, to, roles)`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, &BTreeMap<RoleId, Dep>)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.out.iter().map(move |(&to, roles)| (i as NodeId, to, roles)))
    }
}

#[derive(Debug, Clone)]
pub struct Clash {
    pub kind: ClashKind,
    pub dep: Dep,
    pub concept: Option<CId>,
}

pub enum Stop {
    Clash(Clash),
    Limit,
}

type R<T> = Result<T, Stop>;

#[derive(Debug, Clone)]
enum Alt {
    Add(NodeId, CId, Dep),
    Merge(NodeId, NodeId, Dep),
}

struct Branch {
    level: u32,
    saved: State,
    alts: Vec<Alt>,
    next: usize,
    failed: Dep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Blocked {
    Direct(NodeId),
    Indirect,
}

pub struct Engine<'t> {
    tbox: &'t TBox,
    pub interner: &'t Interner,
    config: &'t TableauConfig,
    pub state: State,
    stack: Vec<Branch>,
    pub branches_tried: u64,
}

pub enum Outcome {
    Sat,
    Unsat(Clash),
}

impl<'t> Engine<'t> {
    pub fn new(tbox: &'t TBox, interner: &'t Interner, config: &'t TableauConfig) -> Self {
        Engine { tbox, interner, config, state: State::default(), stack: Vec::new(), branches_tried: 0 }
    }

    pub fn rbox(&self) -> &'t crate::logic::RoleBox {
        &self.tbox.rbox
    }

    // ----- graph primitives -------------------------------------------------

    pub fn new_node(&mut self, kind: NodeKind, parent: Option<NodeId>, dep: &Dep) -> R<NodeId> {
        if self.state.nodes.len() >= self.config.max_nodes {
            return Err(Stop::Limit);
        }
        let id = self.state.nodes.len() as NodeId;
        self.state.nodes.push(Arc::new(Node::new(kind, parent)));
        for (c, d) in &self.tbox.globals {
            self.add(id, *c, &d.union(dep))?;
        }
        Ok(id)
    }

    pub fn add(&mut self, x: NodeId, c: CId, dep: &Dep) -> R<()> {
        if c == CId::TOP {
            return Ok(());
        }
        let node = &self.state.nodes[x as usize];
        if node.label.contains_key(&c) {
            return Ok(());
        }
        if c == CId::BOTTOM {
            return Err(Stop::Clash(Clash { kind: ClashKind::Bottom, dep: dep.clone(), concept: Some(c) }));
        }
        if let Some(d) = node.label.get(&self.interner.neg(c)) {
            let kind = match self.interner.get(c) {
                Concept::Min(..) | Concept::Max(..) => ClashKind::Cardinality,
                _ => ClashKind::Complement,
            };
            return Err(Stop::Clash(Clash {
                kind,
                dep: dep.union(d),
                concept: Some(c),
            }));
        }
        let hash = self.interner.hash(c);
        let node = self.state.node_mut(x);
        node.label.insert(c, dep.clone());
        node.hash = node.hash.wrapping_add(hash);
        match self.interner.get(c) {
            Concept::Or(_) => node.ors.push(c),
            Concept::Some(..) | Concept::Min(..) => node.gens.push(c),
            Concept::Max(..) => node.maxes.push(c),
            Concept::All(..) => node.alls.push(c),
            _ => {}
        }
        self.state.todo.push_back(Task::Concept(x, c));
        Ok(())
    }

    pub fn add_edge(&mut self, x: NodeId, y: NodeId, r: RoleId, dep: &Dep) {
        let s = &self.state;
        let (from, to, role) = if s.edge(y, x).is_some() && x != y {
            (y, x, r.inverse())
        } else if s.edge(x, y).is_some() {
            (x, y, r)
        } else if s.nodes[x as usize].parent == Some(y) {
            (y, x, r.inverse())
        } else {
            (x, y, r)
        };
        if self.state.edge(from, to).is_some_and(|roles| roles.contains_key(&role)) {
            return;
        }
        let node = self.state.node_mut(from);
        node.out.entry(to).or_default().insert(role, dep.clone());
        node.adj.insert(to);
        self.state.node_mut(to).adj.insert(from);
        self.state.todo.push_back(Task::Edge(from, to, role));
    }

    /// Roles connecting `x` to each neighbour, seen from `x`.
    pub fn neighbours(&self, x: NodeId) -> Vec<(NodeId, RoleId, Dep)> {
        let mut out = Vec::new();
        for &y in &self.state.nodes[x as usize].adj {
            if let Some(roles) = self.state.edge(x, y) {
                for (r, d) in roles {
                    out.push((y, *r, d.clone()));
                }
            }
            if let Some(roles) = self.state.edge(y, x) {
                for (r, d) in roles {
                    out.push((y, r.inverse(), d.clone()));
                }
            }
        }
        out
    }

    /// Distinct `r`-neighbours of `x` with the dependency of the first
    /// connecting role found.
    fn r_neighbours(&self, x: NodeId, r: RoleId) -> Vec<(NodeId, Dep)> {
        let mut out: Vec<(NodeId, Dep)> = Vec::new();
        for (y, s, d) in self.neighbours(x) {
            if self.tbox.rbox.is_sub(s, r) && !out.iter().any(|(z, _)| *z == y) {
                out.push((y, d));
            }
        }
        out
    }

    fn add_neq(&mut self, a: NodeId, b: NodeId, dep: &Dep) -> R<()> {
        if a == b {
            return Err(Stop::Clash(Clash { kind: ClashKind::Cardinality, dep: dep.clone(), concept: None }));
        }
        if self.neq(a, b).is_none() {
            self.state.node_mut(a).neq.insert(b, dep.clone());
            self.state.node_mut(b).neq.insert(a, dep.clone());
        }
        Ok(())
    }

    fn neq(&self, a: NodeId, b: NodeId) -> Option<&Dep> {
        self.state.nodes[a as usize].neq.get(&b)
    }

    pub fn find(&self, mut x: NodeId) -> NodeId {
        while let Some(next) = self.state.nodes[x as usize].merged_into {
            x = next;
        }
        x
    }

    fn prune(&mut self, y: NodeId) {
        let adj: Vec<NodeId> = self.state.nodes[y as usize].adj.iter().copied().collect();
        self.state.node_mut(y).pruned = true;
        for w in adj {
            let child = w != y
                && self.state.nodes[w as usize].parent == Some(y)
                && self.state.nodes[w as usize].kind == NodeKind::Blockable;
            self.state.node_mut(y).out.remove(&w);
            let other = self.state.node_mut(w);
            other.out.remove(&y);
            other.adj.remove(&y);
            if child && !self.state.nodes[w as usize].pruned {
                self.prune(w);
            }
        }
        self.state.node_mut(y).adj.clear();
    }

    /// Merges `y` into `z`.
    fn merge(&mut self, y: NodeId, z: NodeId, dep: &Dep) -> R<()> {
        let label: Vec<(CId, Dep)> =
            self.state.nodes[y as usize].label.iter().map(|(c, d)| (*c, d.clone())).collect();
        for (c, d) in label {
            self.add(z, c, &d.union(dep))?;
        }
        let links: Vec<(NodeId, RoleId, Dep)> = self
            .neighbours(y)
            .into_iter()
            .filter(|(w, _, _)| {
                let n = &self.state.nodes[*w as usize];
                !(*w != y && n.parent == Some(y) && n.kind == NodeKind::Blockable)
            })
            .collect();
        let neqs: Vec<(NodeId, Dep)> =
            self.state.nodes[y as usize].neq.iter().map(|(&w, d)| (w, d.clone())).collect();
        self.prune(y);
        self.state.node_mut(y).merged_into = Some(z);
        for (w, r, d) in links {
            let w = if w == y { z } else { w };
            self.add_edge(z, w, r, &d.union(dep));
        }
        for (w, d) in neqs {
            if !self.state.nodes[w as usize].pruned {
                self.add_neq(z, w, &d.union(dep))?;
            }
        }
        Ok(())
    }

    // ----- deterministic rules ---------------------------------------------

    fn process(&mut self, task: Task) -> R<()> {
        match task {
            Task::Concept(x, c) => {
                if self.state.nodes[x as usize].pruned {
                    return Ok(());
                }
                let dep = match self.state.nodes[x as usize].label.get(&c) {
                    Some(d) => d.clone(),
                    None => return Ok(()),
                };
                match self.interner.get(c) {
                    Concept::And(xs) => {
                        for &k in xs.iter() {
                            self.add(x, k, &dep)?;
                        }
                    }
                    Concept::Atom(a) => {
                        if let Some(list) = self.tbox.unfold.get(a) {
                            for (k, d) in list {
                                self.add(x, *k, &dep.union(d))?;
                            }
                        }
                    }
                    Concept::All(s, f) => {
                        let (s, f) = (*s, *f);
                        for (y, r, d) in self.neighbours(x) {
                            if self.state.nodes[y as usize].pruned {
                                continue;
                            }
                            self.apply_all(y, r, s, f, &dep.union(&d))?;
                        }
                    }
                    _ => {}
                }
            }
            Task::Edge(a, b, r) => {
                let dep = match self.state.edge(a, b).and_then(|m| m.get(&r)) {
                    Some(d) => d.clone(),
                    None => return Ok(()),
                };
                self.edge_side(a, b, r, &dep)?;
                self.edge_side(b, a, r.inverse(), &dep)?;
            }
        }
        Ok(())
    }

    /// `x` has neighbour `y` over `r`: fire ∀/∀+ from `x` and domain rules.
    fn edge_side(&mut self, x: NodeId, y: NodeId, r: RoleId, edge_dep: &Dep) -> R<()> {
        for (c, d) in &self.tbox.domains[r.index()] {
            self.add(x, *c, &d.union(edge_dep))?;
        }
        let alls = self.state.nodes[x as usize].alls.clone();
        for c in alls {
            if let Concept::All(s, f) = self.interner.get(c) {
                let d = self.state.nodes[x as usize].label[&c].union(edge_dep);
                self.apply_all(y, r, *s, *f, &d)?;
            }
        }
        Ok(())
    }

    /// `∀s.f` at a node whose neighbour `y` is reached over `r`.
    fn apply_all(&mut self, y: NodeId, r: RoleId, s: RoleId, f: CId, dep: &Dep) -> R<()> {
        let rb = &self.tbox.rbox;
        if !rb.is_sub(r, s) {
            return Ok(());
        }
        self.add(y, f, dep)?;
        // ∀+: for transitive t with r ⊑ t ⊑ s, propagate ∀t.f itself.
        let ts: Vec<RoleId> =
            rb.supers(r).filter(|&t| rb.is_transitive(t) && rb.is_sub(t, s)).collect();
        for t in ts {
            if let Some(id) = self.interned_all(t, f) {
                self.add(y, id, dep)?;
            }
        }
        Ok(())
    }

    fn interned_all(&self, t: RoleId, f: CId) -> Option<CId> {
        self.interner.lookup(&Concept::All(t, f))
    }

    // ----- blocking ---------------------------------------------------------

    fn same_label(&self, a: NodeId, b: NodeId) -> bool {
        let (na, nb) = (&self.state.nodes[a as usize], &self.state.nodes[b as usize]);
        na.hash == nb.hash && na.label.len() == nb.label.len() && na.label.keys().eq(nb.label.keys())
    }

    fn same_edge(&self, p: NodeId, x: NodeId, q: NodeId, y: NodeId) -> bool {
        match (self.state.edge(p, x), self.state.edge(q, y)) {
            (Some(a), Some(b)) => a.keys().eq(b.keys()),
            (None, None) => true,
            _ => false,
        }
    }

    /// Pairwise blocking status of every node. Parents always have smaller
    /// ids than their children, so one pass in id order suffices.
    ///
    /// With ancestor blocking only ancestors of a node may block it; with
    /// anywhere blocking any earlier unblocked node may.
    pub fn blocking(&self) -> Vec<Option<Blocked>> {
        let n = self.state.nodes.len();
        let mut out: Vec<Option<Blocked>> = vec![None; n];
        let mut seen: HashMap<(u64, u64), Vec<NodeId>> = HashMap::new();
        for x in 0..n {
            let node = &self.state.nodes[x];
            if node.pruned || node.kind == NodeKind::Root {
                continue;
            }
            let p = node.parent.expect("blockable node has a parent");
            if out[p as usize].is_some() {
                out[x] = Some(Blocked::Indirect);
                continue;
            }
            let x = x as NodeId;
            let pair_matches = |a: NodeId| {
                let pa = self.state.nodes[a as usize].parent.expect("blockable node has a parent");
                self.same_label(x, a) && self.same_label(p, pa) && self.same_edge(p, x, pa, a)
            };
            if self.config.anywhere_blocking {
                let key = (node.hash, self.state.nodes[p as usize].hash);
                let cands = seen.entry(key).or_default();
                match cands.iter().find(|&&a| pair_matches(a)) {
                    Some(&a) => out[x as usize] = Some(Blocked::Direct(a)),
                    None => cands.push(x),
                }
                continue;
            }
            let mut a = p;
            while self.state.nodes[a as usize].kind == NodeKind::Blockable {
                if pair_matches(a) {
                    out[x as usize] = Some(Blocked::Direct(a));
                    break;
                }
                a = self.state.nodes[a as usize].parent.expect("blockable node has a parent");
            }
        }
        out
    }

    // ----- nondeterministic and generating rules ---------------------------

    /// Size of a largest set of pairwise-distinct nodes among `cands`,
    /// together with the inequality dependencies of one such set.
    fn max_distinct(&self, cands: &[(NodeId, Dep)]) -> (usize, Dep) {
        let ids: Vec<NodeId> = cands.iter().map(|(n, _)| *n).collect();
        let mut best: Vec<usize> = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        fn search(
            e: &Engine<'_>,
            ids: &[NodeId],
            start: usize,
            cur: &mut Vec<usize>,
            best: &mut Vec<usize>,
        ) {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            for i in start..ids.len() {
                if cur.len() + (ids.len() - i) <= best.len() {
                    return;
                }
                if cur.iter().all(|&j| e.neq(ids[i], ids[j]).is_some()) {
                    cur.push(i);
                    search(e, ids, i + 1, cur, best);
                    cur.pop();
                }
            }
        }
        search(self, &ids, 0, &mut cur, &mut best);
        let mut dep = Dep::none();
        for (k, &i) in best.iter().enumerate() {
            dep = dep.union(&cands[i].1);
            for &j in &best[..k] {
                if let Some(d) = self.neq(ids[i], ids[j]) {
                    dep = dep.union(d);
                }
            }
        }
        (best.len(), dep)
    }

    /// Applies one ∃ or ≥ rule at the lowest unblocked node that needs it.
    fn generate(&mut self, blocked: &[Option<Blocked>]) -> R<bool> {
        for x in 0..self.state.nodes.len() as NodeId {
            let node = &self.state.nodes[x as usize];
            if node.pruned || blocked[x as usize].is_some() {
                continue;
            }
            for c in node.gens.clone() {
                let dep = self.state.nodes[x as usize].label[&c].clone();
                match *self.interner.get(c) {
                    Concept::Some(r, f) => {
                        let satisfied = self.neighbours(x).iter().any(|(y, s, _)| {
                            self.tbox.rbox.is_sub(*s, r)
                                && (f == CId::TOP || self.state.nodes[*y as usize].label.contains_key(&f))
                        });
                        if !satisfied {
                            let y = self.new_node(NodeKind::Blockable, Some(x), &Dep::none())?;
                            self.add_edge(x, y, r, &dep);
                            self.add(y, f, &dep)?;
                            return Ok(true);
                        }
                    }
                    Concept::Min(n, r) => {
                        let nb = self.r_neighbours(x, r);
                        if self.max_distinct(&nb).0 < n as usize {
                            let mut fresh = Vec::new();
                            for _ in 0..n {
                                let y = self.new_node(NodeKind::Blockable, Some(x), &Dep::none())?;
                                self.add_edge(x, y, r, &dep);
                                for &z in &fresh {
                                    self.add_neq(y, z, &dep)?;
                                }
                                fresh.push(y);
                            }
                            return Ok(true);
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(false)
    }

    /// Finds the first ≤ violation or open disjunction and branches on it.
    fn branch(&mut self, blocked: &[Option<Blocked>]) -> R<bool> {
        for x in 0..self.state.nodes.len() as NodeId {
            if blocked[x as usize] == Some(Blocked::Indirect) {
                continue;
            }
            if self.state.nodes[x as usize].pruned {
                continue;
            }
            for c in self.state.nodes[x as usize].maxes.clone() {
                let Concept::Max(n, r) = *self.interner.get(c) else { continue };
                let nb = self.r_neighbours(x, r);
                if nb.len() <= n as usize {
                    continue;
                }
                let dep = self.state.nodes[x as usize].label[&c].clone();
                let (k, kdep) = self.max_distinct(&nb);
                if k > n as usize {
                    return Err(Stop::Clash(Clash {
                        kind: ClashKind::Cardinality,
                        dep: dep.union(&kdep),
                        concept: Some(c),
                    }));
                }
                let parent = self.state.nodes[x as usize].parent;
                let mut alts = Vec::new();
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        let (a, b) = (nb[i].0, nb[j].0);
                        if self.neq(a, b).is_some() {
                            continue;
                        }
                        let (from, into) = self.merge_direction(a, b, parent);
                        let d = dep.union(&nb[i].1).union(&nb[j].1);
                        alts.push(Alt::Merge(from, into, d));
                    }
                }
                self.push_branch(alts)?;
                return Ok(true);
            }
            while let Some(&c) = self.state.nodes[x as usize].ors.first() {
                self.state.node_mut(x).ors.remove(0);
                let Concept::Or(ds) = self.interner.get(c) else { continue };
                let label = &self.state.nodes[x as usize].label;
                if ds.iter().any(|d| label.contains_key(d)) {
                    continue;
                }
                let mut dep = label[&c].clone();
                let mut open = Vec::new();
                for &d in ds.iter() {
                    match label.get(&self.interner.neg(d)) {
                        Some(nd) => dep = dep.union(nd),
                        None => open.push(d),
                    }
                }
                match open.len() {
                    0 => {
                        return Err(Stop::Clash(Clash {
                            kind: ClashKind::Complement,
                            dep,
                            concept: Some(c),
                        }))
                    }
                    1 => {
                        self.add(x, open[0], &dep)?;
                        return Ok(true);
                    }
                    _ => {
                        let alts = open.into_iter().map(|d| Alt::Add(x, d, dep.clone())).collect();
                        self.push_branch(alts)?;
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// Returns `(from, into)`: roots absorb blockable nodes, the predecessor
    /// of the ≤ node absorbs its successors, otherwise the older node wins.
    fn merge_direction(&self, a: NodeId, b: NodeId, parent: Option<NodeId>) -> (NodeId, NodeId) {
        let ka = self.state.nodes[a as usize].kind;
        let kb = self.state.nodes[b as usize].kind;
        match (ka, kb) {
            (NodeKind::Root, NodeKind::Blockable) => (b, a),
            (NodeKind::Blockable, NodeKind::Root) => (a, b),
            _ if parent == Some(a) => (b, a),
            _ if parent == Some(b) => (a, b),
            _ => (a.max(b), a.min(b)),
        }
    }

    fn apply_alt(&mut self, alt: &Alt, extra: &Dep) -> R<()> {
        match alt {
            Alt::Add(x, c, d) => self.add(*x, *c, &d.union(extra)),
            Alt::Merge(y, z, d) => self.merge(*y, *z, &d.union(extra)),
        }
    }

    fn push_branch(&mut self, alts: Vec<Alt>) -> R<()> {
        if alts.len() == 1 {
            return self.apply_alt(&alts[0], &Dep::none());
        }
        let level = self.stack.len() as u32 + 1;
        let saved = self.state.clone();
        self.branches_tried += 1;
        let first = alts[0].clone();
        self.stack.push(Branch { level, saved, alts, next: 1, failed: Dep::none() });
        self.apply_alt(&first, &Dep::branch(level))
    }

    /// Resumes search after `clash`. Returns the clash back when no
    /// alternative remains.
    fn backtrack(&mut self, mut clash: Clash) -> Result<(), Clash> {
        loop {
            let target = if self.config.backjumping {
                match clash.dep.max_branch() {
                    Some(b) => b,
                    None => return Err(clash),
                }
            } else {
                match self.stack.last() {
                    Some(b) => b.level,
                    None => return Err(clash),
                }
            };
            while self.stack.last().is_some_and(|b| b.level > target) {
                self.stack.pop();
            }
            let Some(br) = self.stack.last_mut() else { return Err(clash) };
            debug_assert_eq!(br.level, target);
            br.failed = br.failed.union(&clash.dep.below(target));
            let alt = br.alts[br.next].clone();
            br.next += 1;
            let mut extra = br.failed.clone();
            if br.next < br.alts.len() {
                self.state = br.saved.clone();
                extra = extra.union(&Dep::branch(br.level));
            } else {
                let br = self.stack.pop().expect("branch present");
                self.state = br.saved;
            }
            self.branches_tried += 1;
            match self.apply_alt(&alt, &extra) {
                Ok(()) => return Ok(()),
                Err(Stop::Clash(c)) => clash = c,
                Err(Stop::Limit) => unreachable!("merges and additions never create nodes"),
            }
        }
    }

    // ----- driver -----------------------------------------------------------

    fn step(&mut self) -> R<bool> {
        while let Some(task) = self.state.todo.pop_front() {
            self.process(task)?;
        }
        let blocked = self.blocking();
        if self.branch(&blocked)? {
            return Ok(true);
        }
        self.generate(&blocked)
    }

    /// Runs to completion. `Err(())` signals the node limit.
    pub fn run(&mut self) -> Result<Outcome, ()> {
        loop {
            match self.step() {
                Ok(true) => {}
                Ok(false) => return Ok(Outcome::Sat),
                Err(Stop::Limit) => return Err(()),
                Err(Stop::Clash(c)) => {
                    if let Err(c) = self.backtrack(c) {
                        return Ok(Outcome::Unsat(c));
                    }
                }
            }
        }
    }

    /// Seeds the graph; a clash during seeding is reported like any other.
    pub fn seed(&mut self, f: impl FnOnce(&mut Self) -> R<()>) -> Result<Option<Clash>, ()> {
        match f(self) {
            Ok(()) => Ok(None),
            Err(Stop::Clash(c)) => Ok(Some(c)),
            Err(Stop::Limit) => Err(()),
        }
    }
}
