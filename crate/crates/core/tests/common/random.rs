//! Seeded random concepts and role boxes over a tiny vocabulary.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sdl_core::kb::KnowledgeBase;
use sdl_core::syntax::{Axiom, ConceptExpr as C, RoleExpr};

pub const CLASSES: [&str; 3] = ["A", "B", "C"];
pub const ROLES: [&str; 2] = ["r", "s"];

/// Role axioms drawn for one test case, with the roles that may appear in
/// number restrictions.
#[derive(Debug, Clone)]
pub struct RoleSetup {
    pub axioms: Vec<Axiom>,
    pub simple: Vec<&'static str>,
}

impl RoleSetup {
    pub fn kb(&self) -> KnowledgeBase {
        KnowledgeBase::empty().with_axioms(self.axioms.clone())
    }
}

/// Each of `Transitive(r)`, `InverseOf(s, r)` and `s ⊑ r` is included with
/// probability one half.
pub fn role_setup(rng: &mut ChaCha8Rng) -> RoleSetup {
    let transitive = rng.gen_bool(0.5);
    let inverse = rng.gen_bool(0.5);
    let sub = rng.gen_bool(0.5);
    let mut axioms = Vec::new();
    if transitive {
        axioms.push(Axiom::TransitiveProperty("r".into()));
    }
    if inverse {
        axioms.push(Axiom::InverseProperties("s".into(), "r".into()));
    }
    if sub {
        axioms.push(Axiom::SubPropertyOf(RoleExpr::named("s"), RoleExpr::named("r")));
    }
    // r is non-simple when transitive; s is then non-simple as its inverse.
    let simple = match (transitive, inverse) {
        (false, _) => vec!["r", "s"],
        (true, false) => vec!["s"],
        (true, true) => vec![],
    };
    RoleSetup { axioms, simple }
}

fn role(rng: &mut ChaCha8Rng, from: &[&str]) -> RoleExpr {
    let name = from[rng.gen_range(0..from.len())];
    if rng.gen_bool(0.25) {
        RoleExpr::inverse_of(name)
    } else {
        RoleExpr::named(name)
    }
}

/// A concept of depth at most `depth`.
pub fn concept(rng: &mut ChaCha8Rng, depth: usize, simple: &[&str]) -> C {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return match rng.gen_range(0..10) {
            0 => C::Top,
            1 => C::Bottom,
            2 | 3 if !simple.is_empty() => {
                let r = role(rng, simple);
                let n = rng.gen_range(0..=3);
                match rng.gen_range(0..3) {
                    0 => C::Min(n, r),
                    1 => C::Max(n, r),
                    _ => C::Exact(n, r),
                }
            }
            k => {
                let a = C::named(CLASSES[k % 3]);
                if rng.gen_bool(0.3) {
                    C::not(a)
                } else {
                    a
                }
            }
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..6) {
        0 => C::not(concept(rng, d, simple)),
        1 => C::And((0..rng.gen_range(2..=3)).map(|_| concept(rng, d, simple)).collect()),
        2 => C::Or((0..2).map(|_| concept(rng, d, simple)).collect()),
        3 | 4 => C::some(role(rng, &ROLES), concept(rng, d, simple)),
        _ => C::only(role(rng, &ROLES), concept(rng, d, simple)),
    }
}
