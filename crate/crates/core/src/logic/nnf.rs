use crate::syntax::ConceptExpr as C;

/// Negation normal form: negation only in front of class names.
pub fn nnf(c: &C) -> C {
    match c {
        C::Top | C::Bottom | C::Named(_) | C::Min(..) | C::Max(..) | C::OneOf(_) | C::HasValue(..) => {
            c.clone()
        }
        C::And(cs) => C::And(cs.iter().map(nnf).collect()),
        C::Or(cs) => C::Or(cs.iter().map(nnf).collect()),
        C::Some(r, f) => C::some(r.clone(), nnf(f)),
        C::Only(r, f) => C::only(r.clone(), nnf(f)),
        C::Exact(n, r) => C::And(vec![C::Min(*n, r.clone()), C::Max(*n, r.clone())]),
        C::Not(inner) => negate(inner),
    }
}

/// `nnf(not c)` without building the intermediate node.
pub fn negate(c: &C) -> C {
    match c {
        C::Top => C::Bottom,
        C::Bottom => C::Top,
        C::Named(_) | C::OneOf(_) | C::HasValue(..) => C::not(c.clone()),
        C::Not(inner) => nnf(inner),
        C::And(cs) => C::Or(cs.iter().map(negate).collect()),
        C::Or(cs) => C::And(cs.iter().map(negate).collect()),
        C::Some(r, f) => C::only(r.clone(), negate(f)),
        C::Only(r, f) => C::some(r.clone(), negate(f)),
        C::Min(0, _) => C::Bottom,
        C::Min(n, r) => C::Max(n - 1, r.clone()),
        C::Max(n, r) => C::Min(n + 1, r.clone()),
        C::Exact(0, r) => C::Min(1, r.clone()),
        C::Exact(n, r) => C::Or(vec![C::Max(n - 1, r.clone()), C::Min(n + 1, r.clone())]),
    }
}

/// True when every negation in `c` sits directly on a class name (or a
/// nominal, which the reasoner rejects separately).
pub fn is_nnf(c: &C) -> bool {
    match c {
        C::Not(inner) => matches!(**inner, C::Named(_) | C::OneOf(_) | C::HasValue(..)),
        C::Exact(..) => false,
        C::And(cs) | C::Or(cs) => cs.iter().all(is_nnf),
        C::Some(_, f) | C::Only(_, f) => is_nnf(f),
        _ => true,
    }
}
