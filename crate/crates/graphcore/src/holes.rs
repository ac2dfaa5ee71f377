//! Induced-cycle enumeration. Exponential by design; intended for desk-scale
//! graphs (n <= 16 or so).

use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};
use crate::paths::Hole;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    #[inline]
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => !len.is_multiple_of(2),
            Parity::Even => len.is_multiple_of(2),
        }
    }
}

/// Visits every hole of length >= `min_len` matching `parity`, exactly once,
/// in lexicographic order of canonical vertex sequences (smallest vertex
/// first, then the smaller neighbor). The callback may stop the search early.
///
/// The search grows induced paths `s, v1, ..., vk` where `s` is the smallest
/// vertex of the eventual hole. A vertex adjacent to `s` can only close the
/// cycle; one nonadjacent to `s` can only extend the path. Each hole is seen
/// once because the closing vertex is required to exceed `v1`.
pub fn visit_holes<F>(g: &Graph, min_len: usize, parity: Parity, mut f: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    assert!(min_len >= 4, "holes have length at least 4");
    if g.n() < min_len {
        return;
    }
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        // forbidden: vertices that may no longer appear later in the path
        // (everything <= s, plus current path vertices and their neighbors,
        // except the frontier is allowed to extend from the last vertex).
        if dfs(g, s, &mut path, min_len, parity, &mut f).is_break() {
            return;
        }
    }
}

fn dfs<F>(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    min_len: usize,
    parity: Parity,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    // Candidates in ascending order keep the emission order lexicographic.
    let above = VertexSet::full(g.n()).bits() & !((1u64 << (s + 1)) - 1);
    for w in VertexSet::from_bits(g.neighbors(last).bits() & above).iter() {
        if path.contains(&w) {
            continue;
        }
        if path.len() == 1 {
            // First step: w becomes v1, adjacent to s as required.
            path.push(w);
            dfs(g, s, path, min_len, parity, f)?;
            path.pop();
            continue;
        }
        // w must be nonadjacent to every path vertex other than `last`
        // (adjacency to s decides close-vs-extend).
        let mid_ok = path[1..path.len() - 1].iter().all(|&u| !g.has_edge(u, w));
        if !mid_ok {
            continue;
        }
        if g.has_edge(s, w) {
            // Closing the cycle: s, v1, ..., last, w.
            let len = path.len() + 1;
            if path.len() >= 3 && w > path[1] && len >= min_len && parity.admits(len) {
                path.push(w);
                let r = f(path);
                path.pop();
                r?;
            }
        } else {
            path.push(w);
            dfs(g, s, path, min_len, parity, f)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// Every hole of length >= `min_len` matching the parity filter, each exactly
/// once up to rotation/reflection, in lexicographic order of canonical forms.
pub fn enumerate_holes(g: &Graph, min_len: usize, parity: Parity) -> Vec<Hole> {
    let mut out = Vec::new();
    visit_holes(g, min_len, parity, |verts| {
        out.push(Hole::new(g, verts.to_vec()).expect("enumerated cycle must validate"));
        ControlFlow::Continue(())
    });
    out
}

/// Antiholes of `g` = holes of the complement, reported as vertex sequences
/// that induce holes in the complement.
pub fn enumerate_antiholes(g: &Graph, min_len: usize, parity: Parity) -> Vec<Hole> {
    enumerate_holes(&g.complement(), min_len, parity)
}

/// Some odd hole of length >= 5, or None. Deterministic: the first one in
/// canonical enumeration order.
pub fn find_odd_hole(g: &Graph) -> Option<Hole> {
    let mut found = None;
    visit_holes(g, 4, Parity::Odd, |verts| {
        found = Some(Hole::new(g, verts.to_vec()).expect("enumerated cycle must validate"));
        ControlFlow::Break(())
    });
    found
}

pub fn find_odd_antihole(g: &Graph) -> Option<Hole> {
    find_odd_hole(&g.complement())
}
