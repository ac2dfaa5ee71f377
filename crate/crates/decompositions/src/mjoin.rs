//! M-join detection: a partition into six nonempty sets (A,B,C,D,E,F) where
//! every vertex of A mixes on B and vice versa, and the outside sets are
//! complete or anticomplete to A and B in the prescribed pattern. Once (A,B)
//! is fixed the other four sets are forced, so the search enumerates disjoint
//! (A,B) pairs only. The paper puts no connectivity condition on the six
//! sets, so none is imposed.

use graphcore::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MJoinCert {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Complete to A, anticomplete to B.
    pub c: VertexSet,
    /// Complete to B, anticomplete to A.
    pub d: VertexSet,
    /// Anticomplete to both.
    pub e: VertexSet,
    /// Complete to both.
    pub f: VertexSet,
}

/// First M-join in enumeration order (A by ascending mask, then B by
/// ascending mask over the remaining vertices). Needs |A|,|B| >= 2, so no
/// graph under 8 vertices has one. Intended for n <= 14.
pub fn find_m_join(g: &Graph) -> Option<MJoinCert> {
    let n = g.n();
    if n < 8 {
        return None;
    }
    for a in g.vertex_set().subsets() {
        if a.len() < 2 || a.len() > n - 6 {
            continue;
        }
        for b in g.vertex_set().minus(a).subsets() {
            if b.len() < 2 || a.len() + b.len() > n - 4 {
                continue;
            }
            if let Some(cert) = try_pair(g, a, b) {
                return Some(cert);
            }
        }
    }
    None
}

fn try_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Option<MJoinCert> {
    // Mixed adjacency between A and B.
    let mixes = |v: usize, s: VertexSet| {
        let hit = g.neighbors(v).intersect(s);
        !hit.is_empty() && hit != s
    };
    if !a.iter().all(|v| mixes(v, b)) || !b.iter().all(|v| mixes(v, a)) {
        return None;
    }
    // Outside vertices classify by their (A,B) relation or the pair fails.
    let (mut c, mut d, mut e, mut f) =
        (VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
    for v in g.vertex_set().minus(a).minus(b).iter() {
        let to_a = g.neighbors(v).intersect(a);
        let to_b = g.neighbors(v).intersect(b);
        let comp_a = to_a == a;
        let anti_a = to_a.is_empty();
        let comp_b = to_b == b;
        let anti_b = to_b.is_empty();
        match (comp_a, anti_a, comp_b, anti_b) {
            (true, _, _, true) => c = c.insert(v),
            (_, true, true, _) => d = d.insert(v),
            (_, true, _, true) => e = e.insert(v),
            (true, _, true, _) => f = f.insert(v),
            _ => return None,
        }
    }
    if c.is_empty() || d.is_empty() || e.is_empty() || f.is_empty() {
        return None;
    }
    let cert = MJoinCert { a, b, c, d, e, f };
    debug_assert!(validate_m_join(g, &cert));
    Some(cert)
}

/// Full independent check of the M-join definition.
pub fn validate_m_join(g: &Graph, cert: &MJoinCert) -> bool {
    let MJoinCert { a, b, c, d, e, f } = *cert;
    let sets = [a, b, c, d, e, f];
    if sets.iter().any(|s| s.is_empty()) {
        return false;
    }
    let mut union = VertexSet::EMPTY;
    for s in sets {
        if !union.is_disjoint_from(s) {
            return false;
        }
        union = union.union(s);
    }
    if union != g.vertex_set() {
        return false;
    }
    for v in a.iter() {
        let hit = g.neighbors(v).intersect(b);
        if hit.is_empty() || hit == b {
            return false;
        }
    }
    for v in b.iter() {
        let hit = g.neighbors(v).intersect(a);
        if hit.is_empty() || hit == a {
            return false;
        }
    }
    // Complete pairs (C,A),(A,F),(F,B),(B,D); anticomplete (D,A),(A,E),(E,B),(B,C).
    g.sets_complete(c, a)
        && g.sets_complete(a, f)
        && g.sets_complete(f, b)
        && g.sets_complete(b, d)
        && g.sets_anticomplete(d, a)
        && g.sets_anticomplete(a, e)
        && g.sets_anticomplete(e, b)
        && g.sets_anticomplete(b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 8-vertex seed: A = {0,1}, B = {2,3} with edges 0-2, 1-3; c=4
    /// complete to A; d=5 complete to B; e=6 isolated; f=7 complete to both.
    fn m_join_example() -> Graph {
        Graph::from_edges(
            8,
            &[(0, 2), (1, 3), (4, 0), (4, 1), (5, 2), (5, 3), (7, 0), (7, 1), (7, 2), (7, 3)],
        )
        .unwrap()
    }

    #[test]
    fn eight_vertex_construction_is_found() {
        let g = m_join_example();
        let cert = find_m_join(&g).expect("built to have an M-join");
        assert!(validate_m_join(&g, &cert));
        assert_eq!(cert.a, VertexSet::from_iter([0, 1]));
        assert_eq!(cert.b, VertexSet::from_iter([2, 3]));
        assert_eq!(cert.e, VertexSet::singleton(6));
    }

    #[test]
    fn small_graphs_have_none() {
        for n in 0..8 {
            assert!(find_m_join(&Graph::complete(n).unwrap()).is_none());
            assert!(find_m_join(&Graph::empty(n).unwrap()).is_none());
        }
    }

    #[test]
    fn c8_has_none() {
        assert!(find_m_join(&Graph::cycle(8).unwrap()).is_none());
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = m_join_example();
        let cert = find_m_join(&g).unwrap();
        let mut bad = cert.clone();
        std::mem::swap(&mut bad.c, &mut bad.d);
        assert!(!validate_m_join(&g, &bad));
    }
}
