//! Canonical labelling for small graphs, and isomorphism testing on top of
//! it: `canonical(g) == canonical(h)` iff `g` and `h` are isomorphic.
//!
//! The canonical labelling maximizes the adjacency bit string read off row by
//! row (each placed vertex contributes its adjacency word to the previously
//! placed vertices). A branch-and-bound search places one vertex at a time;
//! since the next word dominates all later bits lexicographically, only
//! candidates achieving the maximal word at each level can extend an optimal
//! prefix. Twin vertices (same neighborhood, with or without the mutual edge)
//! are interchangeable by an automorphism, so one representative per twin
//! class suffices; this keeps complete and complete-multipartite graphs from
//! exploding. Intended for n <= 12.

use crate::graph::{Graph, MAX_N};

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// The canonically labelled graph.
    pub graph: Graph,
    /// `perm[old] = new`: where each original vertex landed.
    pub perm: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm { graph: g.clone(), perm: Vec::new() };
    }
    let twin_class = twin_classes(g);
    let mut search = Search {
        g,
        n,
        twin_class,
        placed: Vec::with_capacity(n),
        used: 0,
        words: [0u64; MAX_N],
        best_words: None,
        best_perm: vec![0; n],
    };
    search.run();
    let perm_new_to_old = search.best_perm;
    let mut perm = vec![0; n];
    for (new, &old) in perm_new_to_old.iter().enumerate() {
        perm[old] = new;
    }
    CanonicalForm { graph: g.relabel(&perm), perm }
}

/// A vertex bijection witnessing isomorphism (`map[v]` in `h` corresponds to
/// `v` in `g`), or None. A size mismatch short-circuits to None.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.graph != ch.graph {
        return None;
    }
    // g -> canonical -> h
    let mut inv_h = vec![0; h.n()];
    for (old, &new) in ch.perm.iter().enumerate() {
        inv_h[new] = old;
    }
    let map: Vec<usize> = (0..g.n()).map(|v| inv_h[cg.perm[v]]).collect();
    debug_assert_eq!(&g.relabel(&map), h);
    Some(map)
}

/// Labels each vertex with a twin-class id: u,v share a class iff
/// `N(u) \ {v} == N(v) \ {u}`. Swapping two twins is an automorphism.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = next;
        for v in u + 1..n {
            if class[v] != usize::MAX {
                continue;
            }
            let mask = !(1u64 << u) & !(1u64 << v);
            if g.neighbors(u).bits() & mask == g.neighbors(v).bits() & mask {
                class[v] = next;
            }
        }
        next += 1;
    }
    class
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    twin_class: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    /// `words[k]` = adjacency bits of the vertex placed at position k toward
    /// positions 0..k, packed little-endian (bit j = adjacency to position j).
    words: [u64; MAX_N],
    best_words: Option<[u64; MAX_N]>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        self.place_next();
    }

    fn place_next(&mut self) {
        let k = self.placed.len();
        if k == self.n {
            let better = match &self.best_words {
                None => true,
                Some(best) => self.words[..self.n] > best[..self.n],
            };
            if better {
                self.best_words = Some(self.words);
                self.best_perm.copy_from_slice(&self.placed);
            }
            return;
        }
        // Word a candidate would contribute at position k.
        let word_of = |s: &Self, v: usize| -> u64 {
            let mut w = 0u64;
            for (j, &p) in s.placed.iter().enumerate() {
                if s.g.has_edge(v, p) {
                    w |= 1u64 << j;
                }
            }
            w
        };
        let mut max_word = 0u64;
        let mut cands: Vec<(usize, u64)> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let w = word_of(self, v);
            if w > max_word {
                max_word = w;
                cands.clear();
            }
            if w == max_word {
                cands.push((v, w));
            }
        }
        // Prune against the incumbent: an optimal completion of this prefix
        // must use the maximal word, so compare it directly.
        if let Some(best) = &self.best_words {
            if self.words[..k] == best[..k] && max_word < best[k] {
                return;
            }
            if self.words[..k] < best[..k] {
                return;
            }
        }
        // One representative per twin class among the tied candidates.
        let mut seen_class = 0u64;
        for (v, w) in cands {
            let c = self.twin_class[v];
            if seen_class >> c & 1 == 1 {
                continue;
            }
            seen_class |= 1u64 << c;
            self.placed.push(v);
            self.used |= 1u64 << v;
            self.words[k] = w;
            self.place_next();
            self.words[k] = 0;
            self.used &= !(1u64 << v);
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    /// Independent oracle: brute force over all n! permutations.
    fn iso_by_brute_force(g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() {
            return false;
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        permute(&mut perm, 0, &mut |p| &g.relabel(p) == h)
    }

    fn permute(perm: &mut Vec<usize>, k: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return found(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(perm, k + 1, found) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    #[test]
    fn c5_is_isomorphic_to_its_complement() {
        let c5 = Graph::cycle(5).unwrap();
        let map = is_isomorphic(&c5, &c5.complement());
        assert!(map.is_some());
        assert_eq!(c5.relabel(&map.unwrap()), c5.complement());
    }

    #[test]
    fn c6_and_two_triangles_are_not_isomorphic() {
        // Both are 2-regular on 6 vertices; distinguished by triangle count.
        // Frozen from the brute-force permutation oracle below.
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!iso_by_brute_force(&c6, &two_k3));
        assert!(is_isomorphic(&c6, &two_k3).is_none());
    }

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (2, 4), (4, 5), (5, 6), (3, 6)])
            .unwrap();
        let perm = vec![3, 0, 6, 2, 5, 1, 4];
        let h = g.relabel(&perm);
        let map = is_isomorphic(&g, &h).expect("must be isomorphic");
        assert_eq!(g.relabel(&map), h);
        assert_eq!(canonical_form(&g).graph, canonical_form(&h).graph);
    }

    #[test]
    fn canonical_form_agrees_with_brute_force_on_small_graphs() {
        // All graphs on 4 vertices: canonical equality must match the
        // permutation oracle exactly.
        let mut graphs = Vec::new();
        for mask in 0u32..(1 << 6) {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            graphs.push(Graph::from_edges(4, &edges).unwrap());
        }
        for g in &graphs {
            for h in &graphs {
                let ours = is_isomorphic(g, h).is_some();
                let oracle = iso_by_brute_force(g, h);
                assert_eq!(ours, oracle, "mismatch on {:?} vs {:?}", g, h);
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_canonicalize_quickly() {
        let k12 = Graph::complete(12).unwrap();
        assert_eq!(canonical_form(&k12).graph, k12);
        let e12 = Graph::empty(12).unwrap();
        assert_eq!(canonical_form(&e12).graph, e12);
        // Cocktail-party graph K_{6x2}: complete 12-graph minus a matching.
        let mut g = Graph::complete(12).unwrap().complement();
        for i in 0..6 {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        let cp = g.complement();
        assert!(is_isomorphic(&cp, &cp.relabel(&[5, 0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10])).is_some());
    }

    #[test]
    fn petersen_relabeling_is_detected() {
        let mut g = Graph::empty(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
        }
        let perm = vec![9, 3, 7, 1, 5, 0, 4, 8, 2, 6];
        assert!(is_isomorphic(&g, &g.relabel(&perm)).is_some());
        // Petersen contains no K4, so it is not isomorphic to a graph that does.
        let mut h = g.clone();
        // swap: turn outer cycle edge into a chord pattern breaking regularity
        h.add_edge(0, 2).unwrap();
        assert!(is_isomorphic(&g, &h).is_none());
    }

    #[test]
    fn size_mismatch_short_circuits() {
        let g = Graph::cycle(5).unwrap();
        let h = Graph::cycle(6).unwrap();
        assert!(is_isomorphic(&g, &h).is_none());
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        let g = Graph::from_edges(6, &[(1, 3), (3, 5), (1, 5)]).unwrap();
        let (sub, map) = g.induced_with_map(VertexSet::from_iter([1, 3, 5]));
        assert_eq!(map, vec![1, 3, 5]);
        assert_eq!(sub, Graph::complete(3).unwrap());
    }
}
