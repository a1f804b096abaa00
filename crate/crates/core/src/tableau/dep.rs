//! Dependency sets: the branch points and source axioms a fact rests on.

use std::sync::Arc as Rc;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dep {
    branches: Option<Rc<[u32]>>,
    axioms: Option<Rc<[u32]>>,
}

fn union(a: &Option<Rc<[u32]>>, b: &Option<Rc<[u32]>>) -> Option<Rc<[u32]>> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => {
            if Rc::ptr_eq(x, y) {
                return a.clone();
            }
            let mut out = Vec::with_capacity(x.len() + y.len());
            let (mut i, mut j) = (0, 0);
            while i < x.len() && j < y.len() {
                match x[i].cmp(&y[j]) {
                    std::cmp::Ordering::Less => {
                        out.push(x[i]);
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        out.push(y[j]);
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        out.push(x[i]);
                        i += 1;
                        j += 1;
                    }
                }
            }
            out.extend_from_slice(&x[i..]);
            out.extend_from_slice(&y[j..]);
            if out.len() == x.len() {
                a.clone()
            } else if out.len() == y.len() {
                b.clone()
            } else {
                Some(out.into())
            }
        }
    }
}

impl Dep {
    pub fn none() -> Self {
        Dep::default()
    }

    pub fn axiom(index: usize) -> Self {
        Dep { branches: None, axioms: Some(Rc::from(vec![index as u32])) }
    }

    pub fn branch(level: u32) -> Self {
        Dep { branches: Some(Rc::from(vec![level])), axioms: None }
    }

    pub fn union(&self, other: &Dep) -> Dep {
        Dep {
            branches: union(&self.branches, &other.branches),
            axioms: union(&self.axioms, &other.axioms),
        }
    }

    pub fn branches(&self) -> &[u32] {
        self.branches.as_deref().unwrap_or(&[])
    }

    pub fn axioms(&self) -> &[u32] {
        self.axioms.as_deref().unwrap_or(&[])
    }

    pub fn max_branch(&self) -> Option<u32> {
        self.branches().last().copied()
    }

    /// Drops branch `level` and every level above it.
    pub fn below(&self, level: u32) -> Dep {
        let kept: Vec<u32> = self.branches().iter().copied().filter(|&b| b < level).collect();
        Dep {
            branches: if kept.is_empty() { None } else { Some(kept.into()) },
            axioms: self.axioms.clone(),
        }
    }
}
