//! Wheel detection: a hole of length >= 6 plus a nonempty anticonnected hub,
//! disjoint from the rim, with two disjoint hub-complete rim edges.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use graphcore::{visit_holes, Graph, Hole, Parity, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wheel {
    pub rim: Hole,
    pub hub: VertexSet,
    /// Maximal rim subpaths whose vertices are all hub-complete, in rim order.
    pub segments: Vec<Vec<usize>>,
    /// Some segment has odd length.
    pub odd: bool,
}

/// All wheels of `g`, deduplicated by (rim, hub). Hubs are found as
/// anticonnected subsets of the common neighborhood of the endpoints of a
/// pair of disjoint rim edges; the rest of the definition then holds
/// automatically. Intended for n <= 14.
pub fn find_wheels(g: &Graph) -> Vec<Wheel> {
    let mut out = Vec::new();
    visit_wheels(g, |w| {
        out.push(w);
        ControlFlow::Continue(())
    });
    out
}

/// Does `g` contain a wheel at all?
pub fn has_wheel(g: &Graph) -> bool {
    let mut found = false;
    visit_wheels(g, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// Does `g` contain an odd wheel?
pub fn has_odd_wheel(g: &Graph) -> bool {
    let mut found = false;
    visit_wheels(g, |w| {
        if w.odd {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

fn visit_wheels<F>(g: &Graph, mut f: F)
where
    F: FnMut(Wheel) -> ControlFlow<()>,
{
    let mut seen: BTreeSet<(Vec<usize>, u64)> = BTreeSet::new();
    visit_holes(g, 6, Parity::Any, |rim_verts| {
        let k = rim_verts.len();
        let rim_set = VertexSet::from_iter(rim_verts.iter().copied());
        let outside = g.vertex_set().minus(rim_set);
        if outside.is_empty() {
            return ControlFlow::Continue(());
        }
        // Pairs of disjoint rim edges.
        for i in 0..k {
            let (a, b) = (rim_verts[i], rim_verts[(i + 1) % k]);
            for j in i + 2..k {
                if (j + 1) % k == i {
                    continue;
                }
                let (c, d) = (rim_verts[j], rim_verts[(j + 1) % k]);
                let pool = g
                    .neighbors(a)
                    .intersect(g.neighbors(b))
                    .intersect(g.neighbors(c))
                    .intersect(g.neighbors(d))
                    .intersect(outside);
                for hub in pool.subsets() {
                    if hub.is_empty() || !g.is_anticonnected_within(hub) {
                        continue;
                    }
                    let key = (rim_verts.to_vec(), hub.bits());
                    if !seen.insert(key) {
                        continue;
                    }
                    let wheel = build_wheel(g, rim_verts, hub);
                    debug_assert!(validate_wheel(g, &wheel));
                    f(wheel)?;
                }
            }
        }
        ControlFlow::Continue(())
    });
}

fn build_wheel(g: &Graph, rim_verts: &[usize], hub: VertexSet) -> Wheel {
    let rim = Hole::new(g, rim_verts.to_vec()).expect("rim came from the hole enumerator");
    let segments = hub_segments(g, rim.verts(), hub);
    let odd = segments.iter().any(|s| (s.len() - 1) % 2 == 1);
    Wheel { rim, hub, segments, odd }
}

/// Maximal runs of hub-complete vertices along the rim, each reported as a
/// rim subpath. When every rim vertex is hub-complete the whole rim minus its
/// closing edge is the single maximal segment.
fn hub_segments(g: &Graph, rim: &[usize], hub: VertexSet) -> Vec<Vec<usize>> {
    let k = rim.len();
    let complete: Vec<bool> = rim.iter().map(|&v| g.is_complete_to(v, hub)).collect();
    if complete.iter().all(|&c| c) {
        return vec![rim.to_vec()];
    }
    let mut segments = Vec::new();
    // Walk from a non-complete anchor so runs never wrap ambiguously.
    let anchor = complete.iter().position(|&c| !c).unwrap();
    let mut run: Vec<usize> = Vec::new();
    for step in 1..=k {
        let idx = (anchor + step) % k;
        if complete[idx] {
            run.push(rim[idx]);
        } else if !run.is_empty() {
            segments.push(std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        segments.push(run);
    }
    // Report in rim order regardless of where the anchor sat.
    segments.sort_by_key(|s| rim.iter().position(|v| v == &s[0]).unwrap());
    segments
}

/// Independent check of the wheel definition.
pub fn validate_wheel(g: &Graph, w: &Wheel) -> bool {
    if w.rim.length() < 6 || w.hub.is_empty() {
        return false;
    }
    if !w.hub.is_disjoint_from(w.rim.vertex_set()) || !g.is_anticonnected_within(w.hub) {
        return false;
    }
    // Two disjoint hub-complete rim edges.
    let rim: Vec<(usize, usize)> = w.rim.edges().collect();
    let complete_edges: Vec<(usize, usize)> = rim
        .iter()
        .copied()
        .filter(|&(u, v)| g.is_complete_to(u, w.hub) && g.is_complete_to(v, w.hub))
        .collect();
    let disjoint_pair = complete_edges.iter().enumerate().any(|(i, &(a, b))| {
        complete_edges[i + 1..].iter().any(|&(c, d)| a != c && a != d && b != c && b != d)
    });
    if !disjoint_pair {
        return false;
    }
    // Segment parity matches the odd flag.
    let segments = hub_segments(g, w.rim.verts(), w.hub);
    segments == w.segments && w.odd == segments.iter().any(|s| (s.len() - 1) % 2 == 1)
}
