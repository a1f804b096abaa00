use super::nnf::nnf;
use super::{Feature, UnsupportedFeature};
use crate::syntax::{Axiom, ConceptExpr as C, RoleExpr};

/// A general concept inclusion `lhs ⊑ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gci {
    pub lhs: C,
    pub rhs: C,
    /// `nnf(¬lhs ⊔ rhs)`, the form added to every node when internalized.
    pub internal: C,
    /// Index of the originating axiom in the slice given to [`to_gcis`].
    pub source: usize,
}

impl Gci {
    pub fn new(lhs: C, rhs: C, source: usize) -> Self {
        let internal = nnf(&C::Or(vec![C::not(lhs.clone()), rhs.clone()]));
        Gci { lhs, rhs, internal, source }
    }
}

fn check_nominals(c: &C, source: usize) -> Result<(), UnsupportedFeature> {
    if c.has_nominal() {
        return Err(UnsupportedFeature {
            feature: Feature::Nominal,
            detail: format!("axiom #{source} uses a nominal"),
        });
    }
    Ok(())
}

/// Translates class axioms into GCIs. Non-class axioms are skipped.
///
/// Equivalences are lowered pairwise (n members give n·(n−1) inclusions),
/// disjointness gives `Ci ⊑ ¬Cj` per unordered pair.
pub fn to_gcis(axioms: &[Axiom]) -> Result<Vec<Gci>, UnsupportedFeature> {
    let mut out = Vec::new();
    for (i, axiom) in axioms.iter().enumerate() {
        match axiom {
            Axiom::SubClassOf(a, b) => {
                check_nominals(a, i)?;
                check_nominals(b, i)?;
                out.push(Gci::new(a.clone(), b.clone(), i));
            }
            Axiom::EquivalentClasses(cs) => {
                for c in cs {
                    check_nominals(c, i)?;
                }
                for (x, a) in cs.iter().enumerate() {
                    for (y, b) in cs.iter().enumerate() {
                        if x != y {
                            out.push(Gci::new(a.clone(), b.clone(), i));
                        }
                    }
                }
            }
            Axiom::DisjointClasses(cs) => {
                for c in cs {
                    check_nominals(c, i)?;
                }
                for (x, a) in cs.iter().enumerate() {
                    for b in &cs[x + 1..] {
                        out.push(Gci::new(a.clone(), C::not(b.clone()), i));
                    }
                }
            }
            Axiom::Domain(r, c) => {
                check_nominals(c, i)?;
                out.push(Gci::new(C::some(RoleExpr::named(r.clone()), C::Top), c.clone(), i));
            }
            Axiom::Range(r, c) => {
                check_nominals(c, i)?;
                out.push(Gci::new(C::Top, C::only(RoleExpr::named(r.clone()), c.clone()), i));
            }
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> C {
        C::named(s)
    }

    #[test]
    fn equivalence_is_pairwise() {
        let ax = Axiom::EquivalentClasses(vec![n("A"), n("B"), n("C")]);
        assert_eq!(to_gcis(&[ax]).unwrap().len(), 6);
        let same = Axiom::EquivalentClasses(vec![n("A"), n("A")]);
        let g = to_gcis(&[same]).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().all(|g| g.lhs == n("A") && g.rhs == n("A")));
    }

    #[test]
    fn domain_and_range() {
        let g = to_gcis(&[
            Axiom::Domain("prescribes".into(), n("DICE")),
            Axiom::Range("r".into(), n("B")),
        ])
        .unwrap();
        assert_eq!(g[0].lhs, C::some(RoleExpr::named("prescribes"), C::Top));
        assert_eq!(g[0].rhs, n("DICE"));
        assert_eq!(g[1].lhs, C::Top);
        assert_eq!(g[1].rhs, C::only(RoleExpr::named("r"), n("B")));
        assert_eq!(g[1].source, 1);
    }

    #[test]
    fn disjointness_per_unordered_pair() {
        let g = to_gcis(&[Axiom::DisjointClasses(vec![n("A"), n("B"), n("C")])]).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[0].internal, C::Or(vec![C::not(n("A")), C::not(n("B"))]));
    }

    #[test]
    fn nominals_rejected() {
        let ax = Axiom::SubClassOf(n("A"), C::OneOf(vec!["a".into()]));
        let err = to_gcis(&[ax]).unwrap_err();
        assert_eq!(err.feature, Feature::Nominal);
    }
}
