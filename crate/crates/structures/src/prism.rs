//! Prism detection: two vertex-disjoint triangles joined by three induced
//! paths with no stray edges between them.

use graphcore::{Graph, InducedPath, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrismKind {
    /// All three path lengths even.
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prism {
    /// Triangle corners, a-side sorted ascending; the a-side holds the
    /// smallest corner overall.
    pub a: [usize; 3],
    pub b: [usize; 3],
    /// `paths[i]` runs from `a[i]` to `b[i]`.
    pub paths: [InducedPath; 3],
    pub kind: PrismKind,
    pub long: bool,
}

impl Prism {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(p.vertex_set()))
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.paths[0].length(), self.paths[1].length(), self.paths[2].length()]
    }
}

/// All induced prisms of `g`, each reported once: a-triangle sorted and
/// holding the globally smallest corner, paths ordered by their a-endpoints.
pub fn find_prisms(g: &Graph) -> Vec<Prism> {
    let triangles = all_triangles(g);
    let mut out = Vec::new();
    for (ti, ta) in triangles.iter().enumerate() {
        for tb in triangles.iter().skip(ti + 1) {
            let set_a = VertexSet::from_iter(ta.iter().copied());
            let set_b = VertexSet::from_iter(tb.iter().copied());
            if !set_a.is_disjoint_from(set_b) {
                continue;
            }
            // The smaller-min triangle plays the a-side; triangles are
            // generated in sorted order so ta wins.
            debug_assert!(ta[0] < tb[0]);
            // Corner-to-corner edges across the pair must form a partial
            // matching consistent with some pairing.
            for pairing in pairings_consistent_with_cross_edges(g, ta, tb) {
                let b = [tb[pairing[0]], tb[pairing[1]], tb[pairing[2]]];
                extend_paths(g, ta, &b, 0, &mut Vec::new(), &mut out);
            }
        }
    }
    out
}

fn all_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        let after_u = g.neighbors(u).bits() >> (u + 1) << (u + 1);
        for v in VertexSet::from_bits(after_u).iter() {
            let common = g.neighbors(u).intersect(g.neighbors(v)).bits() >> (v + 1) << (v + 1);
            for w in VertexSet::from_bits(common).iter() {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Bijections `i -> pairing[i]` from a-corners to b-corner positions such
/// that every existing corner-to-corner cross edge joins matched corners.
fn pairings_consistent_with_cross_edges(
    g: &Graph,
    ta: &[usize; 3],
    tb: &[usize; 3],
) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    #[allow(clippy::needless_range_loop)]
    'perm: for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        for i in 0..3 {
            for j in 0..3 {
                if g.has_edge(ta[i], tb[j]) && perm[i] != j {
                    continue 'perm;
                }
            }
        }
        out.push(perm);
    }
    out
}

fn extend_paths(
    g: &Graph,
    a: &[usize; 3],
    b: &[usize; 3],
    i: usize,
    chosen: &mut Vec<InducedPath>,
    out: &mut Vec<Prism>,
) {
    if i == 3 {
        let paths: [InducedPath; 3] =
            [chosen[0].clone(), chosen[1].clone(), chosen[2].clone()];
        let lengths = [paths[0].length(), paths[1].length(), paths[2].length()];
        let kind = if lengths.iter().all(|l| l % 2 == 0) { PrismKind::Even } else { PrismKind::Odd };
        let long = lengths.iter().any(|&l| l > 1);
        let prism = Prism { a: *a, b: *b, paths, kind, long };
        debug_assert!(validate_prism(g, &prism));
        out.push(prism);
        return;
    }
    let corners = VertexSet::from_iter(a.iter().chain(b.iter()).copied());
    let mut used = corners;
    for p in chosen.iter() {
        used = used.union(p.vertex_set());
    }
    // Interior vertices may not touch corners of other paths or previously
    // chosen paths; the cross-edge condition is rechecked on the whole path.
    let others: Vec<VertexSet> = (0..3)
        .filter(|&j| j != i)
        .map(|j| {
            if j < chosen.len() {
                chosen[j].vertex_set()
            } else {
                VertexSet::from_iter([a[j], b[j]])
            }
        })
        .collect();
    let allowed_interior = g.vertex_set().minus(used);
    let mut path = vec![a[i]];
    path_dfs(g, b[i], allowed_interior, &mut path, &mut |verts| {
        let p = match InducedPath::new(g, verts.to_vec()) {
            Ok(p) => p,
            Err(_) => return,
        };
        // Only a_i a_j and b_i b_j edges may leave this path toward path j.
        let pv = p.vertex_set();
        for (j_idx, other) in others.iter().enumerate() {
            let j = if j_idx < i { j_idx } else { j_idx + 1 };
            for v in pv.iter() {
                let mut allowed = VertexSet::EMPTY;
                if v == a[i] {
                    allowed = allowed.insert(a[j]);
                }
                if v == b[i] {
                    allowed = allowed.insert(b[j]);
                }
                if !g.neighbors(v).intersect(*other).is_subset_of(allowed) {
                    return;
                }
            }
        }
        chosen.push(p);
        extend_paths(g, a, b, i + 1, chosen, out);
        chosen.pop();
    });
}

/// Enumerates induced paths from the current path head to `to` whose interior
/// lies in `allowed` (which must exclude both endpoints).
fn path_dfs(
    g: &Graph,
    to: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if g.has_edge(last, to) {
        // Once adjacent to `to` the induced path must close: any extension
        // would leave `to` adjacent to an interior vertex.
        path.push(to);
        emit(path);
        path.pop();
        return;
    }
    for w in g.neighbors(last).intersect(allowed).iter() {
        // Induced: w must see only `last` among current path vertices.
        if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        debug_assert!(!path.contains(&w));
        path.push(w);
        path_dfs(g, to, allowed.remove(w), path, emit);
        path.pop();
    }
}

/// Independent structural check of a prism certificate.
pub fn validate_prism(g: &Graph, prism: &Prism) -> bool {
    let Prism { a, b, paths, kind, long } = prism;
    if !g.is_clique(VertexSet::from_iter(a.iter().copied()))
        || !g.is_clique(VertexSet::from_iter(b.iter().copied()))
    {
        return false;
    }
    for i in 0..3 {
        if paths[i].ends() != (a[i], b[i]) {
            return false;
        }
        if InducedPath::new(g, paths[i].verts().to_vec()).is_err() {
            return false;
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if !paths[i].vertex_set().is_disjoint_from(paths[j].vertex_set()) {
                return false;
            }
            // Exactly the two triangle edges between path i and path j.
            for u in paths[i].verts() {
                for v in paths[j].verts() {
                    let allowed = (*u == a[i] && *v == a[j]) || (*u == b[i] && *v == b[j]);
                    if g.has_edge(*u, *v) != allowed && g.has_edge(*u, *v) {
                        return false;
                    }
                    if allowed && !g.has_edge(*u, *v) {
                        return false;
                    }
                }
            }
        }
    }
    let lengths = prism.lengths();
    let even = lengths.iter().all(|l| l % 2 == 0);
    if (*kind == PrismKind::Even) != even {
        return false;
    }
    if *long != lengths.iter().any(|&l| l > 1) {
        return false;
    }
    true
}

/// The prism on 3(k+1) vertices whose three paths all have length `k`... more
/// precisely, paths of the given lengths. Corner layout: a = 0,1,2; b = 3,4,5;
/// interiors numbered consecutively from 6.
pub fn build_prism(lengths: [usize; 3]) -> Graph {
    assert!(lengths.iter().all(|&l| l >= 1));
    let n = 6 + lengths.iter().map(|&l| l.saturating_sub(1)).sum::<usize>();
    let mut g = Graph::empty(n).expect("desk-scale prism");
    for i in 0..3 {
        for j in i + 1..3 {
            g.add_edge(i, j).unwrap();
            g.add_edge(3 + i, 3 + j).unwrap();
        }
    }
    let mut next = 6;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = i;
        for _ in 1..len {
            g.add_edge(prev, next).unwrap();
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 3 + i).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_vertex_prism_is_found_once() {
        let g = build_prism([1, 1, 1]);
        let prisms = find_prisms(&g);
        assert_eq!(prisms.len(), 1);
        let p = &prisms[0];
        assert_eq!(p.lengths(), [1, 1, 1]);
        assert_eq!(p.kind, PrismKind::Odd);
        assert!(!p.long);
        assert!(validate_prism(&g, p));
    }

    #[test]
    fn nine_vertex_even_prism() {
        let g = build_prism([2, 2, 2]);
        let prisms = find_prisms(&g);
        assert_eq!(prisms.len(), 1);
        assert_eq!(prisms[0].kind, PrismKind::Even);
        assert!(prisms[0].long);
        assert_eq!(g.n(), 9);
    }

    #[test]
    fn c6_has_no_prism() {
        assert!(find_prisms(&Graph::cycle(6).unwrap()).is_empty());
    }

    #[test]
    fn prism_inside_a_larger_graph() {
        // Prism plus an apex adjacent to nothing: still exactly one prism.
        let base = build_prism([1, 2, 1]);
        let mut g = Graph::empty(base.n() + 1).unwrap();
        for (u, v) in base.edges() {
            g.add_edge(u, v).unwrap();
        }
        let prisms = find_prisms(&g);
        assert_eq!(prisms.len(), 1);
        assert!(prisms[0].long);
        assert_eq!(prisms[0].kind, PrismKind::Odd);
    }

    #[test]
    fn k6_contains_no_induced_prism() {
        // Plenty of disjoint triangles but stray edges kill every pairing.
        assert!(find_prisms(&Graph::complete(6).unwrap()).is_empty());
    }

    #[test]
    fn prism_parity_mixed_lengths() {
        let g = build_prism([1, 1, 3]);
        let prisms = find_prisms(&g);
        assert_eq!(prisms.len(), 1);
        assert_eq!(prisms[0].lengths(), [1, 1, 3]);
        assert_eq!(prisms[0].kind, PrismKind::Odd);
        assert!(prisms[0].long);
    }
}
