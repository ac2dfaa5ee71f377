//! 2-join detection. For a fixed bipartition (X1,X2) the four bundle sets are
//! forced: the cross-neighborhoods on the X1 side must take exactly two
//! distinct nonempty values, which become A2 and B2, and A1, B1 are the
//! senders of each class. That collapses the search to one pass per
//! bipartition.

use graphcore::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoJoinCert {
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub a1: VertexSet,
    pub b1: VertexSet,
    pub a2: VertexSet,
    pub b2: VertexSet,
}

/// First 2-join in enumeration order: X2 ranges over subsets not containing
/// vertex 0, by size then ascending bit-mask order (the same discipline the
/// skew finder uses). Intended for n <= 16.
pub fn find_two_join(g: &Graph) -> Option<TwoJoinCert> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    for size in 1..n {
        // Masks over {1..n-1} of the given popcount, ascending; Gosper's hack
        // on the shifted-down view keeps the arithmetic uniform.
        let mut low = (1u64 << size) - 1;
        let limit = 1u64 << (n - 1);
        while low < limit {
            let x2 = VertexSet::from_bits(low << 1);
            let c = low & low.wrapping_neg();
            let r = low + c;
            low = (((r ^ low) >> 2) / c) | r;

            if let Some(cert) = try_bipartition(g, g.vertex_set().minus(x2), x2) {
                return Some(cert);
            }
        }
    }
    None
}

fn try_bipartition(g: &Graph, x1: VertexSet, x2: VertexSet) -> Option<TwoJoinCert> {
    // Distinct nonempty cross-neighborhood classes on the X1 side.
    let mut class_a: Option<VertexSet> = None;
    let mut class_b: Option<VertexSet> = None;
    for u in x1.iter() {
        let cross = g.neighbors(u).intersect(x2);
        if cross.is_empty() {
            continue;
        }
        match (class_a, class_b) {
            (None, _) => class_a = Some(cross),
            (Some(a), _) if a == cross => {}
            (Some(_), None) => class_b = Some(cross),
            (Some(_), Some(b)) if b == cross => {}
            _ => return None, // three distinct classes
        }
    }
    let (mut a2, mut b2) = (class_a?, class_b?);
    if !a2.is_disjoint_from(b2) {
        return None;
    }
    // Deterministic side naming: A2 holds the smallest bundled X2 vertex.
    if b2.union(a2).min() != a2.min() {
        std::mem::swap(&mut a2, &mut b2);
    }
    let a1 = VertexSet::from_iter(x1.iter().filter(|&u| g.neighbors(u).intersect(x2) == a2));
    let b1 = VertexSet::from_iter(x1.iter().filter(|&u| g.neighbors(u).intersect(x2) == b2));
    let cert = TwoJoinCert { x1, x2, a1, b1, a2, b2 };
    if validate_two_join(g, &cert) {
        Some(cert)
    } else {
        None
    }
}

/// Full independent check of the 2-join definition.
pub fn validate_two_join(g: &Graph, cert: &TwoJoinCert) -> bool {
    let TwoJoinCert { x1, x2, a1, b1, a2, b2 } = *cert;
    if !x1.is_disjoint_from(x2) || x1.union(x2) != g.vertex_set() {
        return false;
    }
    let sides_ok = |aa: VertexSet, bb: VertexSet, xx: VertexSet| -> bool {
        !aa.is_empty() && !bb.is_empty() && aa.is_disjoint_from(bb) && aa.union(bb).is_subset_of(xx)
    };
    if !sides_ok(a1, b1, x1) || !sides_ok(a2, b2, x2) {
        return false;
    }
    // Complete bundles, and no other cross edges.
    if !g.sets_complete(a1, a2) || !g.sets_complete(b1, b2) {
        return false;
    }
    for u in x1.iter() {
        let cross = g.neighbors(u).intersect(x2);
        let allowed = if a1.contains(u) {
            a2
        } else if b1.contains(u) {
            b2
        } else {
            VertexSet::EMPTY
        };
        if cross != allowed {
            return false;
        }
    }
    // Every component of G|Xi meets both Ai and Bi.
    for (x, a, b) in [(x1, a1, b1), (x2, a2, b2)] {
        for comp in g.components(x) {
            if comp.intersect(a).is_empty() || comp.intersect(b).is_empty() {
                return false;
            }
        }
        // Minimum path-length proviso.
        if a.len() == 1 && b.len() == 1 {
            if let Some(len) = induced_side_is_path(g, x, a.min(), b.min()) {
                if len < 3 {
                    return false;
                }
            }
        }
    }
    true
}

/// If G|X is a path graph whose ends are `from` and `to`, returns its length.
fn induced_side_is_path(g: &Graph, x: VertexSet, from: usize, to: usize) -> Option<usize> {
    let sub_degree = |v: usize| g.neighbors(v).intersect(x).len();
    if !g.is_connected_within(x) {
        return None;
    }
    for v in x.iter() {
        let d = sub_degree(v);
        let is_end = v == from || v == to;
        if is_end && d != 1 && x.len() > 1 {
            return None;
        }
        if !is_end && d != 2 {
            return None;
        }
    }
    Some(x.len() - 1)
}
