//! Induced copies of three fixed graphs: the 8-vertex double diamond, the
//! 9-vertex L(K_{3,3}), and the 8-vertex L(K_{3,3} minus an edge). All three
//! are matched by backtracking induced-subgraph isomorphism against stored
//! adjacency tables.

use graphcore::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedGraph {
    /// Two diamonds a1..a4, b1..b4 (all pairs adjacent except a3a4 and b3b4)
    /// joined by the perfect matching a_i b_i.
    DoubleDiamond,
    /// Line graph of K_{3,3}: the 3x3 rook's graph.
    LK33,
    /// Line graph of K_{3,3} minus one edge.
    LK33MinusE,
}

/// The stored adjacency table of a fixed graph.
pub fn fixed_graph(which: FixedGraph) -> Graph {
    match which {
        FixedGraph::DoubleDiamond => {
            let mut g = Graph::empty(8).unwrap();
            for i in 0..4 {
                for j in i + 1..4 {
                    if !(i == 2 && j == 3) {
                        g.add_edge(i, j).unwrap();
                        g.add_edge(4 + i, 4 + j).unwrap();
                    }
                }
                g.add_edge(i, 4 + i).unwrap();
            }
            g
        }
        FixedGraph::LK33 => rook_3x3(9),
        FixedGraph::LK33MinusE => rook_3x3(8),
    }
}

/// Vertices are cells (i,j) of a 3x3 grid (the edges of K_{3,3}); two cells
/// are adjacent when they share a row or column. Taking only the first 8
/// cells drops cell (2,2), i.e. deletes one edge of K_{3,3}.
fn rook_3x3(cells: usize) -> Graph {
    let mut g = Graph::empty(cells).unwrap();
    for u in 0..cells {
        for v in u + 1..cells {
            let (r1, c1) = (u / 3, u % 3);
            let (r2, c2) = (v / 3, v % 3);
            if r1 == r2 || c1 == c2 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// An induced embedding of the named fixed graph into `g`, reported as the
/// image vertex set; None if there is none. Deterministic first hit.
pub fn contains_fixed(g: &Graph, which: FixedGraph) -> Option<VertexSet> {
    let pattern = fixed_graph(which);
    find_induced_embedding(g, &pattern).map(VertexSet::from_iter)
}

/// Backtracking induced-subgraph isomorphism: maps pattern vertices in index
/// order to distinct g-vertices, requiring exact adjacency agreement on the
/// mapped prefix and pruning on degree.
pub fn find_induced_embedding(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let mut image = Vec::with_capacity(pattern.n());
    let mut used = VertexSet::EMPTY;
    if embed(g, pattern, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn embed(g: &Graph, pattern: &Graph, image: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let k = image.len();
    if k == pattern.n() {
        return true;
    }
    for cand in 0..g.n() {
        if used.contains(cand) || g.degree(cand) < pattern.degree(k) {
            continue;
        }
        let ok = (0..k).all(|i| g.has_edge(image[i], cand) == pattern.has_edge(i, k));
        if !ok {
            continue;
        }
        image.push(cand);
        *used = used.insert(cand);
        if embed(g, pattern, image, used) {
            return true;
        }
        *used = used.remove(cand);
        image.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_diamond_contains_itself() {
        let dd = fixed_graph(FixedGraph::DoubleDiamond);
        assert_eq!(contains_fixed(&dd, FixedGraph::DoubleDiamond), Some(dd.vertex_set()));
    }

    #[test]
    fn double_diamond_is_self_complementary() {
        let dd = fixed_graph(FixedGraph::DoubleDiamond);
        assert!(contains_fixed(&dd.complement(), FixedGraph::DoubleDiamond).is_some());
        assert!(graphcore::is_isomorphic(&dd, &dd.complement()).is_some());
    }

    #[test]
    fn lk33_minus_e_is_self_complementary() {
        let h = fixed_graph(FixedGraph::LK33MinusE);
        assert!(graphcore::is_isomorphic(&h, &h.complement()).is_some());
    }

    #[test]
    fn lk33_is_self_complementary_and_matches_line_graph() {
        let h = fixed_graph(FixedGraph::LK33);
        assert!(graphcore::is_isomorphic(&h, &h.complement()).is_some());
        let k33 = recognizers::complete_bipartite(3, 3).unwrap();
        let (l, _) = recognizers::line_graph(&k33).unwrap();
        assert!(graphcore::is_isomorphic(&h, &l).is_some());
    }

    #[test]
    fn small_graphs_contain_none_of_the_fixed_graphs() {
        for n in 0..=7 {
            let g = Graph::complete(n).unwrap();
            for which in [FixedGraph::DoubleDiamond, FixedGraph::LK33, FixedGraph::LK33MinusE] {
                assert!(contains_fixed(&g, which).is_none());
            }
        }
    }

    #[test]
    fn embedding_must_be_induced() {
        // K9 contains L(K33) as a subgraph but not as an induced subgraph.
        let k9 = Graph::complete(9).unwrap();
        assert!(contains_fixed(&k9, FixedGraph::LK33).is_none());
    }

    #[test]
    fn lk33_contains_lk33_minus_e() {
        let h = fixed_graph(FixedGraph::LK33);
        assert!(contains_fixed(&h, FixedGraph::LK33MinusE).is_some());
    }

    #[test]
    fn double_diamond_inside_a_bigger_graph() {
        let dd = fixed_graph(FixedGraph::DoubleDiamond);
        let mut g = Graph::empty(10).unwrap();
        for (u, v) in dd.edges() {
            g.add_edge(u + 2, v + 2).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        let hit = contains_fixed(&g, FixedGraph::DoubleDiamond).unwrap();
        assert_eq!(hit, VertexSet::from_iter(2..10));
    }
}
