//! Balance checking for a disjoint pair of vertex sets: (A,B) is balanced if
//! there is no odd path between nonadjacent vertices of B with interior in A,
//! and no odd antipath between adjacent vertices of A with interior in B.
//! The antipath half is the path half run in the complement with the roles of
//! A and B swapped.

use graphcore::{Antipath, Graph, InducedPath, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceViolation {
    /// Odd path, nonadjacent ends in B, interior in A.
    OddPath(InducedPath),
    /// Odd antipath, adjacent ends in A, interior in B.
    OddAntipath(Antipath),
}

/// Balance flag plus the first violating path or antipath when unbalanced.
/// Nonadjacent B-ends force length >= 2, so only odd lengths >= 3 exist.
pub fn is_balanced_pair(g: &Graph, a: VertexSet, b: VertexSet) -> (bool, Option<BalanceViolation>) {
    assert!(a.is_disjoint_from(b), "balance is defined for disjoint pairs");
    if let Some(verts) = odd_connector(g, b, a) {
        let p = InducedPath::new(g, verts).expect("search yields induced paths");
        return (false, Some(BalanceViolation::OddPath(p)));
    }
    let comp = g.complement();
    if let Some(verts) = odd_connector(&comp, a, b) {
        let p = Antipath::new(g, verts).expect("search in the complement yields antipaths");
        return (false, Some(BalanceViolation::OddAntipath(p)));
    }
    (true, None)
}

/// First odd induced path (length >= 3) in `g` with both ends in `ends`,
/// nonadjacent ends, and all internal vertices inside `interior`.
/// Deterministic: smallest start vertex, DFS in ascending-neighbor order.
fn odd_connector(g: &Graph, ends: VertexSet, interior: VertexSet) -> Option<Vec<usize>> {
    fn blocked(g: &Graph, path: &[usize], w: usize) -> bool {
        path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w))
    }

    fn dfs(g: &Graph, ends: VertexSet, interior: VertexSet, path: &mut Vec<usize>) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        // Close with an end: adjacent only to the last path vertex, at even
        // interior count (odd total length).
        if path.len() >= 3 && path.len() % 2 == 1 {
            for v in ends.intersect(g.neighbors(last)).iter() {
                if v == start || path.contains(&v) {
                    continue;
                }
                if !blocked(g, path, v) {
                    path.push(v);
                    return true;
                }
            }
        }
        for w in interior.intersect(g.neighbors(last)).iter() {
            if path.contains(&w) || blocked(g, path, w) {
                continue;
            }
            path.push(w);
            if dfs(g, ends, interior, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    for u in ends.iter() {
        let mut path = vec![u];
        if dfs(g, ends, interior, &mut path) {
            return Some(path);
        }
    }
    None
}
