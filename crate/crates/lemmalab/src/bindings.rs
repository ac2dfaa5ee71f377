//! Shared hypothesis-instantiation machinery for the claim checkers:
//! anticonnected-set and induced-path enumeration with an explicit per-graph
//! binding budget. Overflow is reported, never silently truncated.

use graphcore::{Graph, VertexSet};

pub struct BindingBudget {
    pub used: u64,
    pub limit: u64,
    pub overflowed: bool,
}

impl BindingBudget {
    pub fn new(limit: u64) -> Self {
        BindingBudget { used: 0, limit, overflowed: false }
    }

    /// Counts one hypothesis instantiation; false once the budget is gone.
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            self.overflowed = true;
            return false;
        }
        self.used += 1;
        true
    }
}

/// All nonempty anticonnected subsets of the vertex set.
pub fn anticonnected_sets(g: &Graph) -> Vec<VertexSet> {
    let comp = g.complement();
    g.vertex_set()
        .subsets()
        .filter(|s| !s.is_empty() && comp.is_connected_within(*s))
        .collect()
}

/// Vertices outside `x` adjacent to every member of `x`.
pub fn complete_vertices(g: &Graph, x: VertexSet) -> VertexSet {
    g.common_neighbors(x).minus(x)
}

/// Every induced path with at least `min_verts` vertices, each reported once
/// (first end < last end), as vertex sequences. `cap` bounds the number of
/// paths collected; None signals overflow.
pub fn all_induced_paths(g: &Graph, min_verts: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 0..g.n() {
        path.clear();
        path.push(start);
        if !extend_paths(g, min_verts, cap, &mut path, &mut out) {
            return None;
        }
    }
    Some(out)
}

fn extend_paths(
    g: &Graph,
    min_verts: usize,
    cap: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= min_verts && path[0] < last {
        if out.len() >= cap {
            return false;
        }
        out.push(path.clone());
    }
    for w in g.neighbors(last).iter() {
        if path.contains(&w) || path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        path.push(w);
        let ok = extend_paths(g, min_verts, cap, path, out);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Induced paths between two specific vertices with interior in `interior`,
/// invoking `f` per path; `f` returning false stops the walk.
pub fn paths_between(
    g: &Graph,
    from: usize,
    to: usize,
    interior: VertexSet,
    f: &mut impl FnMut(&[usize]) -> bool,
) {
    let mut path = vec![from];
    go(g, to, interior.remove(from).remove(to), &mut path, f);

    fn go(
        g: &Graph,
        to: usize,
        allowed: VertexSet,
        path: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        if g.has_edge(last, to) {
            // Adjacent to the target: the only induced completion is closing
            // now (a longer continuation would leave a chord to `to`)...
            // unless the target is adjacent to an interior vertex, in which
            // case no completion through this prefix exists at all.
            if path[..path.len() - 1].iter().all(|&u| !g.has_edge(u, to)) {
                path.push(to);
                let cont = f(path);
                path.pop();
                return cont;
            }
            return true;
        }
        for w in g.neighbors(last).intersect(allowed).iter() {
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            let cont = go(g, to, allowed.remove(w), path, f);
            path.pop();
            if !cont {
                return false;
            }
        }
        true
    }
}

/// Does some odd (or even, per `want_odd`) induced path join `from` and `to`
/// with interior in `interior`?
pub fn has_parity_path(
    g: &Graph,
    from: usize,
    to: usize,
    interior: VertexSet,
    want_odd: bool,
) -> bool {
    let mut found = false;
    paths_between(g, from, to, interior, &mut |p| {
        if (p.len() - 1) % 2 == (want_odd as usize) {
            found = true;
            false
        } else {
            true
        }
    });
    found
}

/// A leap for the path `p1..pn` inside `x`: nonadjacent a,b in `x` whose
/// edges to the path are exactly a-p1, a-p2, a-pn and b-p1, b-p(n-1), b-pn.
pub fn find_leap(g: &Graph, path: &[usize], x: VertexSet) -> Option<(usize, usize)> {
    let n = path.len();
    debug_assert!(n >= 3);
    let pset = VertexSet::from_iter(path.iter().copied());
    let (p1, p2, pn1, pn) = (path[0], path[1], path[n - 2], path[n - 1]);
    let a_pattern = VertexSet::from_iter([p1, p2, pn]);
    let b_pattern = VertexSet::from_iter([p1, pn1, pn]);
    for a in x.iter() {
        if g.neighbors(a).intersect(pset) != a_pattern {
            continue;
        }
        for b in x.iter() {
            if b == a || g.has_edge(a, b) {
                continue;
            }
            if g.neighbors(b).intersect(pset) == b_pattern {
                return Some((a, b));
            }
        }
    }
    None
}
