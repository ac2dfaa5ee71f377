//! Recognition of the five basic classes, with constructive certificates and
//! an independent validator for each.
//!
//! The line-graph recognizer is a Krausz-style search: partition the edges of
//! `g` into cliques so that every vertex lies in at most two of them. Each
//! partition determines a root graph whose line graph is `g`. Line graphs of
//! bipartite graphs are claw-free and diamond-free (Harary), so those two
//! checks run first and bound the clique branching.

use graphcore::{canonical_form, emit_graph6, Graph, GraphError, VertexSet, MAX_N};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LineGraphError {
    #[error("line graph would have {edges} vertices, beyond the limit {max}", max = MAX_N)]
    TooManyEdges { edges: usize },
}

/// The line graph of `h`: one vertex per edge of `h` (edges ordered
/// lexicographically), adjacent when the edges share an end. Also returns the
/// vertex -> root-edge correspondence.
pub fn line_graph(h: &Graph) -> Result<(Graph, Vec<(usize, usize)>), LineGraphError> {
    let edges = h.edges();
    if edges.len() > MAX_N {
        return Err(LineGraphError::TooManyEdges { edges: edges.len() });
    }
    let mut l = Graph::empty(edges.len()).expect("bounds checked");
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j).expect("indices in range");
            }
        }
    }
    Ok((l, edges))
}

/// A 2-coloring: `Some((a, b))` with every edge between the parts. Each
/// component's smallest vertex goes in part `a`; an edgeless graph comes back
/// with everything in `a` and `b` empty.
pub fn recognize_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut color = vec![usize::MAX; g.n()];
    for comp in g.components(g.vertex_set()) {
        let root = comp.min();
        color[root] = 0;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).iter() {
                if color[u] == usize::MAX {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    let a = VertexSet::from_iter((0..g.n()).filter(|&v| color[v] == 0));
    Some((a, g.vertex_set().minus(a)))
}

/// Root certificate for a line graph of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRoot {
    /// The bipartite root H.
    pub root: Graph,
    /// `map[v]` = endpoints of the H-edge corresponding to vertex `v` of `g`.
    pub map: Vec<(usize, usize)>,
}

/// If `g` is the line graph of some bipartite graph, returns a bipartite root
/// and the edge-vertex correspondence. When several bipartite roots exist the
/// one with fewest vertices wins, then the lexicographically least canonical
/// encoding. Intended for n <= 16.
pub fn recognize_line_of_bipartite(g: &Graph) -> Option<LineRoot> {
    // L(H) for bipartite H contains no claw and no induced diamond.
    if has_claw(g) || has_diamond(g) {
        return None;
    }
    let edges = g.edges();
    let mut covered = vec![false; edges.len()];
    let mut cliques: Vec<VertexSet> = Vec::new();
    let mut count = vec![0u8; g.n()];
    let mut best: Option<(usize, String, LineRoot)> = None;
    krausz(g, &edges, &mut covered, &mut cliques, &mut count, &mut best);
    best.map(|(_, _, root)| root)
}

fn has_claw(g: &Graph) -> bool {
    // A center with three pairwise-nonadjacent neighbors.
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).iter().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for &w in &nb[j + 1..] {
                    if !g.has_edge(nb[i], w) && !g.has_edge(nb[j], w) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn has_diamond(g: &Graph) -> bool {
    // An edge whose endpoints have two nonadjacent common neighbors.
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersect(g.neighbors(v));
        if !g.is_clique(common) {
            return true;
        }
    }
    false
}

fn krausz(
    g: &Graph,
    edges: &[(usize, usize)],
    covered: &mut Vec<bool>,
    cliques: &mut Vec<VertexSet>,
    count: &mut Vec<u8>,
    best: &mut Option<(usize, String, LineRoot)>,
) {
    let Some(next) = covered.iter().position(|c| !c) else {
        // Every edge covered: materialize the root and keep the best
        // bipartite one.
        if let Some(root) = build_root(g, cliques) {
            if recognize_bipartite(&root.root).is_some() {
                let key = (root.root.n(), emit_graph6(&canonical_form(&root.root).graph));
                let replace = match best {
                    None => true,
                    Some((bn, bg, _)) => (key.0, &key.1) < (*bn, bg),
                };
                if replace {
                    *best = Some((key.0, key.1, root));
                }
            }
        }
        return;
    };
    let (u, v) = edges[next];
    if count[u] >= 2 || count[v] >= 2 {
        return;
    }
    // The covering clique is {u,v} plus any subset of their common
    // neighborhood (a clique, since g is diamond-free) whose members still
    // have a free slot and whose internal edges are all uncovered.
    let mut pool = g.neighbors(u).intersect(g.neighbors(v));
    for w in pool.iter() {
        if count[w] >= 2 {
            pool = pool.remove(w);
        }
    }
    'subset: for t in pool.subsets() {
        let q = t.insert(u).insert(v);
        // All edges inside q must be uncovered.
        let mut q_edges = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if q.contains(a) && q.contains(b) {
                if covered[i] {
                    continue 'subset;
                }
                q_edges.push(i);
            }
        }
        for &i in &q_edges {
            covered[i] = true;
        }
        for w in q.iter() {
            count[w] += 1;
        }
        // A saturated vertex must have no uncovered edges left.
        let saturated_ok = q.iter().all(|w| {
            count[w] < 2
                || edges
                    .iter()
                    .enumerate()
                    .all(|(i, &(a, b))| covered[i] || (a != w && b != w))
        });
        if saturated_ok {
            cliques.push(q);
            krausz(g, edges, covered, cliques, count, best);
            cliques.pop();
        }
        for w in q.iter() {
            count[w] -= 1;
        }
        for &i in &q_edges {
            covered[i] = false;
        }
    }
}

fn build_root(g: &Graph, cliques: &[VertexSet]) -> Option<LineRoot> {
    // Root vertices: one per clique, plus fresh ones completing each g-vertex
    // to exactly two root endpoints.
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (qi, q) in cliques.iter().enumerate() {
        for v in q.iter() {
            membership[v].push(qi);
        }
    }
    let mut extra = cliques.len();
    let mut map = Vec::with_capacity(g.n());
    for members in &membership {
        let ends = match members.as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                let w = extra;
                extra += 1;
                (*a, w)
            }
            [] => {
                let (a, b) = (extra, extra + 1);
                extra += 2;
                (a, b)
            }
            _ => return None,
        };
        map.push(ends);
    }
    if extra > MAX_N {
        return None;
    }
    let mut root = Graph::empty(extra).expect("bounds checked");
    for &(a, b) in &map {
        root.add_edge(a, b).ok()?;
    }
    debug_assert!({
        let (l, _) = line_graph(&root).expect("root edge count equals g vertex count");
        graphcore::is_isomorphic(&l, g).is_some()
    });
    Some(LineRoot { root, map })
}

/// Bicograph certificate: adjacent pairs (a_i, b_i) and nonadjacent pairs
/// (c_j, d_j) realizing the defining adjacencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicographCert {
    pub ab_pairs: Vec<(usize, usize)>,
    pub cd_pairs: Vec<(usize, usize)>,
}

/// Bicograph recognition. The degree signature pins the two sides: a/b-side
/// vertices have degree n+1 and c/d-side vertices 2n+m-2 (distinct since
/// m+n >= 4), the a/b side must induce a perfect matching, and the c/d side
/// the complement of one. The derived certificate is revalidated before
/// returning. Intended for n <= 20.
pub fn recognize_bicograph(g: &Graph) -> Option<BicographCert> {
    let total = g.n();
    if total < 8 || total % 2 == 1 {
        return None;
    }
    for m in 2..=(total / 2 - 2) {
        let n = total / 2 - m;
        if n < 2 {
            continue;
        }
        let ab_deg = n + 1;
        let cd_deg = 2 * n + m - 2;
        let ab_side = VertexSet::from_iter(g.vertices().filter(|&v| g.degree(v) == ab_deg));
        let cd_side = VertexSet::from_iter(g.vertices().filter(|&v| g.degree(v) == cd_deg));
        if ab_side.len() != 2 * m || cd_side.len() != 2 * n {
            continue;
        }
        if !ab_side.union(cd_side).is_empty() && ab_side.union(cd_side) != g.vertex_set() {
            continue;
        }
        // a/b side: a perfect matching inside the side.
        let mut ab_pairs = Vec::with_capacity(m);
        let mut ok = true;
        for v in ab_side.iter() {
            let inside = g.neighbors(v).intersect(ab_side);
            if inside.len() != 1 {
                ok = false;
                break;
            }
            let w = inside.min();
            if v < w {
                ab_pairs.push((v, w));
            }
        }
        if !ok || ab_pairs.len() != m {
            continue;
        }
        // c/d side: each vertex has exactly one in-side nonneighbor.
        let mut cd_pairs = Vec::with_capacity(n);
        for v in cd_side.iter() {
            let nonnb = cd_side.remove(v).minus(g.neighbors(v));
            if nonnb.len() != 1 {
                ok = false;
                break;
            }
            let w = nonnb.min();
            if v < w {
                cd_pairs.push((v, w));
            }
        }
        if !ok || cd_pairs.len() != n {
            continue;
        }
        let cert = BicographCert { ab_pairs, cd_pairs };
        if validate_bicograph(g, &cert) {
            return Some(cert);
        }
    }
    None
}

/// Checks every defining condition of a bicograph against `g`.
pub fn validate_bicograph(g: &Graph, cert: &BicographCert) -> bool {
    let m = cert.ab_pairs.len();
    let n = cert.cd_pairs.len();
    if m < 2 || n < 2 || 2 * (m + n) != g.n() {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &(a, b) in cert.ab_pairs.iter().chain(&cert.cd_pairs) {
        if a >= g.n() || b >= g.n() || seen.contains(a) || seen.contains(b) {
            return false;
        }
        seen = seen.insert(a).insert(b);
    }
    // a_i adjacent to b_i; c_j nonadjacent to d_j.
    if !cert.ab_pairs.iter().all(|&(a, b)| g.has_edge(a, b)) {
        return false;
    }
    if cert.cd_pairs.iter().any(|&(c, d)| g.has_edge(c, d)) {
        return false;
    }
    // No edges between distinct a/b pairs; all four between distinct c/d pairs.
    for i in 0..m {
        let (a, b) = cert.ab_pairs[i];
        for &(a2, b2) in &cert.ab_pairs[i + 1..] {
            if g.has_edge(a, a2) || g.has_edge(a, b2) || g.has_edge(b, a2) || g.has_edge(b, b2) {
                return false;
            }
        }
    }
    for j in 0..n {
        let (c, d) = cert.cd_pairs[j];
        for &(c2, d2) in &cert.cd_pairs[j + 1..] {
            if !(g.has_edge(c, c2) && g.has_edge(c, d2) && g.has_edge(d, c2) && g.has_edge(d, d2)) {
                return false;
            }
        }
    }
    // Exactly two edges between each {a_i,b_i} and {c_j,d_j}, and disjoint:
    // either a_i c_j + b_i d_j, or a_i d_j + b_i c_j.
    for &(a, b) in &cert.ab_pairs {
        for &(c, d) in &cert.cd_pairs {
            let straight = g.has_edge(a, c) && g.has_edge(b, d) && !g.has_edge(a, d) && !g.has_edge(b, c);
            let crossed = g.has_edge(a, d) && g.has_edge(b, c) && !g.has_edge(a, c) && !g.has_edge(b, d);
            if !(straight || crossed) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasicCert {
    Bipartite { parts: (VertexSet, VertexSet) },
    /// Parts are a bipartition of the complement.
    ComplementBipartite { parts: (VertexSet, VertexSet) },
    LineOfBipartite(LineRoot),
    /// Root for the complement of `g`.
    ComplementLineOfBipartite(LineRoot),
    Bicograph(BicographCert),
}

/// First match in the fixed order Bipartite, ComplementBipartite,
/// LineOfBipartite, ComplementLineOfBipartite, Bicograph; None if the graph
/// is not basic. A graph can be basic in several ways; callers needing all of
/// them use the individual recognizers.
pub fn classify_basic(g: &Graph) -> Option<BasicCert> {
    if let Some(parts) = recognize_bipartite(g) {
        return Some(BasicCert::Bipartite { parts });
    }
    let comp = g.complement();
    if let Some(parts) = recognize_bipartite(&comp) {
        return Some(BasicCert::ComplementBipartite { parts });
    }
    if let Some(root) = recognize_line_of_bipartite(g) {
        return Some(BasicCert::LineOfBipartite(root));
    }
    if let Some(root) = recognize_line_of_bipartite(&comp) {
        return Some(BasicCert::ComplementLineOfBipartite(root));
    }
    recognize_bicograph(g).map(BasicCert::Bicograph)
}

/// Independent revalidation of a basic certificate against `g`.
pub fn validate_basic_cert(g: &Graph, cert: &BasicCert) -> bool {
    match cert {
        BasicCert::Bipartite { parts } => validate_bipartition(g, *parts),
        BasicCert::ComplementBipartite { parts } => validate_bipartition(&g.complement(), *parts),
        BasicCert::LineOfBipartite(root) => validate_line_root(g, root),
        BasicCert::ComplementLineOfBipartite(root) => validate_line_root(&g.complement(), root),
        BasicCert::Bicograph(c) => validate_bicograph(g, c),
    }
}

fn validate_bipartition(g: &Graph, (a, b): (VertexSet, VertexSet)) -> bool {
    a.is_disjoint_from(b)
        && a.union(b) == g.vertex_set()
        && g.edges().iter().all(|&(u, v)| a.contains(u) != a.contains(v))
}

fn validate_line_root(g: &Graph, lr: &LineRoot) -> bool {
    if recognize_bipartite(&lr.root).is_none() || lr.map.len() != g.n() {
        return false;
    }
    if lr.root.edge_count() != g.n() {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in &lr.map {
        if a >= lr.root.n() || b >= lr.root.n() || !lr.root.has_edge(a, b) {
            return false;
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return false;
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = lr.map[u];
            let (c, d) = lr.map[v];
            let share = a == c || a == d || b == c || b == d;
            if share != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Builds the complete-bipartite graph K_{p,q} (left side first).
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(p + q)?;
    for u in 0..p {
        for v in p..p + q {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_recognition_basics() {
        assert!(recognize_bipartite(&Graph::cycle(6).unwrap()).is_some());
        assert!(recognize_bipartite(&Graph::cycle(5).unwrap()).is_none());
        let (a, b) = recognize_bipartite(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(a.len(), 4);
        assert!(b.is_empty());
    }

    #[test]
    fn triangle_gets_the_bipartite_star_root() {
        let k3 = Graph::complete(3).unwrap();
        let lr = recognize_line_of_bipartite(&k3).expect("L(K_{1,3}) = K3");
        assert_eq!(lr.root.n(), 4);
        assert!(graphcore::is_isomorphic(&lr.root, &complete_bipartite(1, 3).unwrap()).is_some());
        assert!(validate_line_root(&k3, &lr));
    }

    #[test]
    fn c6_is_its_own_root() {
        let c6 = Graph::cycle(6).unwrap();
        let lr = recognize_line_of_bipartite(&c6).expect("L(C6) = C6");
        assert!(graphcore::is_isomorphic(&lr.root, &c6).is_some());
    }

    #[test]
    fn c5_has_no_bipartite_root() {
        assert!(recognize_line_of_bipartite(&Graph::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn l_k33_recognized_with_root_k33() {
        let k33 = complete_bipartite(3, 3).unwrap();
        let (l, _) = line_graph(&k33).unwrap();
        let lr = recognize_line_of_bipartite(&l).expect("L(K33) is a line graph of bipartite");
        assert!(graphcore::is_isomorphic(&lr.root, &k33).is_some());
        assert!(validate_line_root(&l, &lr));
    }

    #[test]
    fn complete_graphs_are_line_graphs_of_stars() {
        for n in [4, 5, 6] {
            let kn = Graph::complete(n).unwrap();
            let lr = recognize_line_of_bipartite(&kn).expect("L(K_{1,n}) = Kn");
            assert!(
                graphcore::is_isomorphic(&lr.root, &complete_bipartite(1, n).unwrap()).is_some()
            );
        }
    }

    #[test]
    fn bicograph_direct_instantiation() {
        // m = n = 2, cross edges a_i c_j and b_i d_j.
        // Vertices: a1 a2 b1 b2 c1 c2 d1 d2 = 0..8.
        let mut g = Graph::empty(8).unwrap();
        g.add_edge(0, 2).unwrap(); // a1 b1
        g.add_edge(1, 3).unwrap(); // a2 b2; the pairs c1 d1 = (4,6), c2 d2 = (5,7) stay nonadjacent
        // all four edges between {c1,d1} and {c2,d2}
        g.add_edge(4, 5).unwrap();
        g.add_edge(4, 7).unwrap();
        g.add_edge(6, 5).unwrap();
        g.add_edge(6, 7).unwrap();
        // cross: a_i c_j, b_i d_j
        for (a, b) in [(0, 2), (1, 3)] {
            for (c, d) in [(4, 6), (5, 7)] {
                g.add_edge(a, c).unwrap();
                g.add_edge(b, d).unwrap();
            }
        }
        let cert = recognize_bicograph(&g).expect("built from the definition");
        assert!(validate_bicograph(&g, &cert));
        // Complement of a bicograph is a bicograph.
        let comp_cert = recognize_bicograph(&g.complement()).expect("closed under complement");
        assert!(validate_bicograph(&g.complement(), &comp_cert));
    }

    #[test]
    fn c4_is_not_a_bicograph() {
        assert!(recognize_bicograph(&Graph::cycle(4).unwrap()).is_none());
    }

    #[test]
    fn classify_basic_fixed_order() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(classify_basic(&c6), Some(BasicCert::Bipartite { .. })));
        let (l_k33, _) = line_graph(&complete_bipartite(3, 3).unwrap()).unwrap();
        match classify_basic(&l_k33) {
            Some(BasicCert::LineOfBipartite(lr)) => {
                assert!(
                    graphcore::is_isomorphic(&lr.root, &complete_bipartite(3, 3).unwrap())
                        .is_some()
                );
            }
            other => panic!("expected LineOfBipartite, got {other:?}"),
        }
        assert!(classify_basic(&Graph::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn classified_certificates_revalidate() {
        let samples = [
            Graph::cycle(6).unwrap(),
            Graph::cycle(6).unwrap().complement(),
            Graph::complete(5).unwrap(),
            Graph::path(4).unwrap(),
            line_graph(&complete_bipartite(2, 3).unwrap()).unwrap().0,
        ];
        for g in &samples {
            let cert = classify_basic(g).expect("all samples are basic");
            assert!(validate_basic_cert(g, &cert), "certificate must revalidate for {g:?}");
        }
    }

    #[test]
    fn line_graph_round_trip_on_random_bipartite() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20240817);
        for _ in 0..60 {
            let p = rng.gen_range(1..=4usize);
            let q = rng.gen_range(1..=4usize);
            let mut h = Graph::empty(p + q).unwrap();
            for u in 0..p {
                for v in p..p + q {
                    if rng.gen_bool(0.5) {
                        h.add_edge(u, v).unwrap();
                    }
                }
            }
            if h.edge_count() > 8 {
                continue;
            }
            let (l, _) = line_graph(&h).unwrap();
            let lr = recognize_line_of_bipartite(&l)
                .expect("line graph of a bipartite graph must be recognized");
            let (l2, _) = line_graph(&lr.root).unwrap();
            assert!(graphcore::is_isomorphic(&l, &l2).is_some());
        }
    }
}
