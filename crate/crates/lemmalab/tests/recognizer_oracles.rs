//! Independent oracles for the recognizers, run over exhaustive corpora: a
//! characterization-based check of the line-graph search, a brute-force
//! pairing oracle for bicographs, and naive chromatic/clique/odd-hole
//! references.

use graphcore::{find_odd_hole, Graph, VertexSet};
use lemmalab::enumerate_all_graphs;
use recognizers::{
    chromatic_number, clique_number, is_berge, recognize_bicograph, recognize_line_of_bipartite,
};

fn has_claw(g: &Graph) -> bool {
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).iter().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[j])
                        && !g.has_edge(nb[i], nb[k])
                        && !g.has_edge(nb[j], nb[k])
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn has_induced_diamond(g: &Graph) -> bool {
    // Four vertices with exactly five edges among them.
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = VertexSet::from_iter([a, b, c, d]);
                    if g.induced(s).edge_count() == 5 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// A graph is the line graph of a bipartite graph iff it has no claw, no
/// induced diamond, and no odd hole. The Krausz search must agree with this
/// characterization on every graph with n <= 7.
#[test]
fn krausz_search_matches_the_characterization() {
    let mut recognized = 0;
    for n in 0..=7 {
        for g in enumerate_all_graphs(n).unwrap() {
            let characterized =
                !has_claw(&g) && !has_induced_diamond(&g) && find_odd_hole(&g).is_none();
            let found = recognize_line_of_bipartite(&g).is_some();
            assert_eq!(
                found, characterized,
                "line-of-bipartite disagreement on {}",
                graphcore::emit_graph6(&g)
            );
            recognized += found as usize;
        }
    }
    // Frozen census: 174 of the graphs with n <= 7 are line graphs of
    // bipartite graphs.
    assert_eq!(recognized, 174);
}

/// Brute-force bicograph oracle: try every split of the 8 vertices into two
/// adjacent pairs and two nonadjacent pairs and check the definition
/// directly. Must agree with the degree-derivation recognizer on the whole
/// n = 8 corpus.
#[test]
fn bicograph_recognizer_matches_brute_force_at_n8() {
    fn brute_is_bicograph(g: &Graph) -> bool {
        // Enumerate all 105 perfect matchings of the 8 vertices, then all 6
        // choices of which two matched pairs play the adjacent role.
        fn matchings(rest: &[usize], acc: &mut Vec<(usize, usize)>, g: &Graph) -> bool {
            if rest.is_empty() {
                for i in 0..4 {
                    for j in i + 1..4 {
                        let ab: Vec<(usize, usize)> =
                            [acc[i], acc[j]].into_iter().collect();
                        let cd: Vec<(usize, usize)> = (0..4)
                            .filter(|k| *k != i && *k != j)
                            .map(|k| acc[k])
                            .collect();
                        let cert = recognizers::BicographCert { ab_pairs: ab, cd_pairs: cd };
                        if recognizers::validate_bicograph(g, &cert) {
                            return true;
                        }
                    }
                }
                return false;
            }
            let u = rest[0];
            for &v in &rest[1..] {
                let next: Vec<usize> =
                    rest.iter().copied().filter(|&w| w != u && w != v).collect();
                acc.push((u.min(v), u.max(v)));
                if matchings(&next, acc, g) {
                    acc.pop();
                    return true;
                }
                acc.pop();
            }
            false
        }
        let rest: Vec<usize> = (0..8).collect();
        matchings(&rest, &mut Vec::new(), g)
    }

    let mut count = 0;
    for g in enumerate_all_graphs(8).unwrap() {
        let fast = recognize_bicograph(&g).is_some();
        // Quick reject for the oracle: bicographs are 2(m+n)-vertex graphs
        // with very constrained degree multisets; run it everywhere anyway.
        let brute = brute_is_bicograph(&g);
        assert_eq!(fast, brute, "bicograph disagreement on {}", graphcore::emit_graph6(&g));
        count += fast as usize;
    }
    // Frozen census: exactly 2 of the 12346 eight-vertex graphs are
    // bicographs (the double diamond and the line graph of K33 minus an
    // edge -- the 16 cross patterns collapse into 2 isomorphism classes).
    assert_eq!(count, 2);
}

/// Naive coloring/clique references on the full n = 6 corpus.
#[test]
fn coloring_matches_naive_search_at_n6() {
    fn naive_chromatic(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        'k: for k in 1..=n {
            let mut assign = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| assign[u] != assign[v]) {
                    return k;
                }
                // Odometer increment in base k.
                let mut i = 0;
                loop {
                    if i == n {
                        continue 'k;
                    }
                    assign[i] += 1;
                    if assign[i] < k {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
            }
        }
        unreachable!("n colors always suffice")
    }

    fn naive_clique(g: &Graph) -> usize {
        g.vertex_set()
            .subsets()
            .filter(|s| g.is_clique(*s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    for g in enumerate_all_graphs(6).unwrap() {
        assert_eq!(chromatic_number(&g), naive_chromatic(&g));
        assert_eq!(clique_number(&g), naive_clique(&g));
    }
}

/// Subset-based odd-hole oracle against the DFS enumerator, all n <= 6.
#[test]
fn berge_matches_subset_oracle_up_to_6() {
    fn subset_has_odd_hole(g: &Graph) -> bool {
        for s in g.vertex_set().subsets() {
            if s.len() < 5 || s.len() % 2 == 0 {
                continue;
            }
            let h = g.induced(s);
            if h.vertices().all(|v| h.degree(v) == 2) && h.is_connected_within(h.vertex_set()) {
                return true;
            }
        }
        false
    }

    for n in 0..=6 {
        for g in enumerate_all_graphs(n).unwrap() {
            let oracle = !subset_has_odd_hole(&g) && !subset_has_odd_hole(&g.complement());
            assert_eq!(
                is_berge(&g),
                oracle,
                "berge disagreement on {}",
                graphcore::emit_graph6(&g)
            );
        }
    }
}
