//! Appearances of K4: induced subgraphs isomorphic to L(H) where H is a
//! bipartite subdivision of K4. Found by subset enumeration plus root
//! reconstruction through the audited line-graph recognizer, which trades
//! speed for reuse of a single correctness-critical search.

use graphcore::{Graph, VertexSet};
use recognizers::recognize_line_of_bipartite;
use thiserror::Error;

pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AppearanceError {
    #[error("subset enumeration exceeded the budget of {0} candidates")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppearanceK4 {
    /// Vertex set S with g|S = L(root).
    pub vertices: VertexSet,
    /// A bipartite subdivision of K4.
    pub root: Graph,
    /// Some 4-cycle of K4 kept all four of its branches at length 1.
    pub degenerate: bool,
}

/// Branch structure of a subdivision of K4: the four branch vertices and the
/// branch length for each of the six unordered pairs. None if `h` is not a
/// subdivision of K4 (exactly four degree-3 vertices, the rest degree 2,
/// connected, one branch per pair).
pub fn subdivision_of_k4_profile(h: &Graph) -> Option<([usize; 4], [[usize; 4]; 4])> {
    let branch: Vec<usize> = h.vertices().filter(|&v| h.degree(v) == 3).collect();
    if branch.len() != 4 || h.vertices().any(|v| h.degree(v) != 2 && h.degree(v) != 3) {
        return None;
    }
    if !h.is_connected_within(h.vertex_set()) {
        return None;
    }
    let idx = |v: usize| branch.iter().position(|&b| b == v);
    let mut lengths = [[0usize; 4]; 4];
    #[allow(clippy::needless_range_loop)]
    for (bi, &bv) in branch.iter().enumerate() {
        for start in h.neighbors(bv).iter() {
            // Walk the branch from bv through degree-2 vertices.
            let (mut prev, mut cur, mut len) = (bv, start, 1);
            while h.degree(cur) == 2 {
                let next = h.neighbors(cur).remove(prev).min();
                prev = cur;
                cur = next;
                len += 1;
            }
            let bj = idx(cur)?;
            if bj == bi {
                return None; // branch loops back to its origin
            }
            if bi < bj {
                if lengths[bi][bj] != 0 {
                    return None; // two branches between one pair
                }
                lengths[bi][bj] = len;
                lengths[bj][bi] = len;
            }
        }
    }
    #[allow(clippy::needless_range_loop)]
    for i in 0..4 {
        for j in i + 1..4 {
            if lengths[i][j] == 0 {
                return None;
            }
        }
    }
    Some(([branch[0], branch[1], branch[2], branch[3]], lengths))
}

/// The three 4-cycles of K4, as the branch-vertex index pairs they traverse.
const K4_FOUR_CYCLES: [[(usize, usize); 4]; 3] = [
    [(0, 1), (1, 2), (2, 3), (3, 0)],
    [(0, 1), (1, 3), (3, 2), (2, 0)],
    [(0, 2), (2, 1), (1, 3), (3, 0)],
];

fn is_degenerate(lengths: &[[usize; 4]; 4]) -> bool {
    K4_FOUR_CYCLES
        .iter()
        .any(|cycle| cycle.iter().all(|&(i, j)| lengths[i][j] == 1))
}

/// Every appearance of K4 in `g`: vertex subsets (at least 8 vertices) whose
/// induced subgraph is the line graph of a bipartite subdivision of K4.
pub fn find_appearances_k4(g: &Graph, budget: u64) -> Result<Vec<AppearanceK4>, AppearanceError> {
    let mut out = Vec::new();
    let mut examined = 0u64;
    for s in g.vertex_set().subsets() {
        if s.len() < 8 {
            continue;
        }
        examined += 1;
        if examined > budget {
            return Err(AppearanceError::BudgetExceeded(budget));
        }
        let sub = g.induced(s);
        // L(H) for a subdivision H of K4 is connected with degrees in 2..=4.
        if sub.vertices().any(|v| !(2..=4).contains(&sub.degree(v))) {
            continue;
        }
        if !sub.is_connected_within(sub.vertex_set()) {
            continue;
        }
        let Some(lr) = recognize_line_of_bipartite(&sub) else {
            continue;
        };
        // The root of a connected line graph on >= 8 vertices is unique up to
        // isomorphism, so testing the returned root suffices.
        let Some((_, lengths)) = subdivision_of_k4_profile(&lr.root) else {
            continue;
        };
        out.push(AppearanceK4 {
            vertices: s,
            root: lr.root,
            degenerate: is_degenerate(&lengths),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use recognizers::line_graph;

    /// K4 on branch vertices 0..4 with the given subdivision counts per edge
    /// (number of internal vertices inserted).
    fn subdivided_k4(subdiv: &[((usize, usize), usize)]) -> Graph {
        let extra: usize = subdiv.iter().map(|&(_, k)| k).sum();
        let mut g = Graph::empty(4 + extra).unwrap();
        let mut next = 4;
        for &((u, v), k) in subdiv {
            let mut prev = u;
            for _ in 0..k {
                g.add_edge(prev, next).unwrap();
                prev = next;
                next += 1;
            }
            g.add_edge(prev, v).unwrap();
        }
        g
    }

    fn all_k4_edges(once: &[(usize, usize)]) -> Vec<((usize, usize), usize)> {
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .iter()
            .map(|&e| (e, if once.contains(&e) { 1 } else { 0 }))
            .collect()
    }

    #[test]
    fn fully_subdivided_k4_gives_a_nondegenerate_appearance() {
        // Every edge subdivided once: 10-vertex bipartite root, 12-vertex L(H).
        let h = subdivided_k4(&all_k4_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]));
        assert!(recognizers::recognize_bipartite(&h).is_some());
        let (l, _) = line_graph(&h).unwrap();
        assert_eq!(l.n(), 12);
        let apps = find_appearances_k4(&l, DEFAULT_SUBSET_BUDGET).unwrap();
        let whole: Vec<_> = apps.iter().filter(|a| a.vertices == l.vertex_set()).collect();
        assert_eq!(whole.len(), 1);
        assert!(!whole[0].degenerate);
    }

    #[test]
    fn one_unsubdivided_four_cycle_is_degenerate() {
        // Keep the 4-cycle 0-2-1-3 intact, subdivide the remaining edges
        // (0,1) and (2,3) once each: 8 edges, bipartite.
        let h = subdivided_k4(&all_k4_edges(&[(0, 1), (2, 3)]));
        assert!(recognizers::recognize_bipartite(&h).is_some());
        let (l, _) = line_graph(&h).unwrap();
        assert_eq!(l.n(), 8);
        let apps = find_appearances_k4(&l, DEFAULT_SUBSET_BUDGET).unwrap();
        let whole: Vec<_> = apps.iter().filter(|a| a.vertices == l.vertex_set()).collect();
        assert_eq!(whole.len(), 1);
        assert!(whole[0].degenerate);
    }

    #[test]
    fn small_graphs_have_no_appearance() {
        for n in 0..=7 {
            let g = Graph::complete(n).unwrap();
            assert!(find_appearances_k4(&g, DEFAULT_SUBSET_BUDGET).unwrap().is_empty());
        }
    }

    #[test]
    fn subdivision_profile_shapes() {
        // K4 is the trivial subdivision of itself (all branches length 1).
        let (_, l) = subdivision_of_k4_profile(&Graph::complete(4).unwrap()).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| i == j || l[i][j] == 1)));
        assert!(is_degenerate(&l));
        // A plain cycle has no degree-3 vertices.
        assert!(subdivision_of_k4_profile(&Graph::cycle(8).unwrap()).is_none());
        let h = subdivided_k4(&all_k4_edges(&[(0, 1), (2, 3)]));
        let (bv, lengths) = subdivision_of_k4_profile(&h).unwrap();
        assert_eq!(bv, [0, 1, 2, 3]);
        assert_eq!(lengths[0][1], 2);
        assert_eq!(lengths[2][3], 2);
        assert_eq!(lengths[0][2], 1);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::empty(12).unwrap();
        assert_eq!(find_appearances_k4(&g, 10), Err(AppearanceError::BudgetExceeded(10)));
    }

    #[test]
    fn lk33_minus_e_is_a_degenerate_appearance() {
        // K_{3,3} minus an edge is a bipartite subdivision of K4 where one
        // 4-cycle survives unsubdivided.
        let l = crate::fixed::fixed_graph(crate::fixed::FixedGraph::LK33MinusE);
        let apps = find_appearances_k4(&l, DEFAULT_SUBSET_BUDGET).unwrap();
        let whole: Vec<_> = apps.iter().filter(|a| a.vertices == l.vertex_set()).collect();
        assert_eq!(whole.len(), 1);
        assert!(whole[0].degenerate);
    }
}
