//! Exact clique number and chromatic number by branch and bound. Everything
//! here is deterministic: ties always break toward the lowest vertex.

use graphcore::{Graph, VertexSet};

/// Size of the largest clique.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique; among them, the first in the increasing-vertex search
/// order.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    let mut current = VertexSet::EMPTY;
    expand(g, &mut current, g.vertex_set(), &mut best);
    best
}

fn expand(g: &Graph, current: &mut VertexSet, cand: VertexSet, best: &mut VertexSet) {
    if current.len() > best.len() {
        *best = *current;
    }
    let mut rest = cand;
    while !rest.is_empty() {
        if current.len() + rest.len() <= best.len() {
            return;
        }
        let v = rest.min();
        rest = rest.remove(v);
        *current = current.insert(v);
        expand(g, current, rest.intersect(g.neighbors(v)), best);
        *current = current.remove(v);
    }
}

/// Exact chromatic number: DSATUR-ordered backtracking, starting from the
/// clique number as a lower bound and growing the palette until a proper
/// coloring exists. chromatic_number(g) >= clique_number(g) always.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut k = clique_number(g);
    loop {
        if colorable(g, k) {
            return k;
        }
        k += 1;
    }
}

fn colorable(g: &Graph, k: usize) -> bool {
    if k >= g.n() {
        return true;
    }
    let mut colors = vec![usize::MAX; g.n()];
    try_color(g, k, &mut colors, 0, 0)
}

fn try_color(g: &Graph, k: usize, colors: &mut [usize], assigned: usize, used: usize) -> bool {
    let n = g.n();
    if assigned == n {
        return true;
    }
    // DSATUR choice: most distinct neighbor colors, then highest degree,
    // then lowest vertex.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for u in g.neighbors(v).iter() {
            if colors[u] != usize::MAX {
                seen |= 1 << colors[u];
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let v = pick;
    let mut forbidden = 0u64;
    for u in g.neighbors(v).iter() {
        if colors[u] != usize::MAX {
            forbidden |= 1 << colors[u];
        }
    }
    // At most one brand-new color needs trying; that breaks color symmetry.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        if try_color(g, k, colors, assigned + 1, used.max(c + 1)) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
