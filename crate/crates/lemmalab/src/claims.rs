//! The claim registry: each claim instantiates one theorem or lemma statement
//! over a single graph, reporting machine-checked counterexamples. Bindings
//! (hypothesis instantiations) are counted against a per-graph budget and
//! overflow is reported, never silently dropped.

use graphcore::{enumerate_antiholes, enumerate_holes, Graph, Parity, VertexSet};
use recognizers::{classify_basic, is_berge, is_perfect_bounded, validate_basic_cert};

use decompositions::{
    find_balanced_skew, find_skew_partitions, find_two_join, validate_m_join, validate_skew_cert,
    validate_two_join, Verdict,
};
use structures::{
    contains_fixed, f_ladder, find_appearances_k4, find_prisms, F8Mode, FixedGraph,
    LadderOptions, PrismKind,
};

use crate::bindings::{
    all_induced_paths, anticonnected_sets, complete_vertices, find_leap, has_parity_path,
    BindingBudget,
};
use crate::report::{BindingValue, LemmaCounterexample};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    /// Berge iff perfect, graph by graph.
    Spgt,
    /// Every Berge graph is basic or decomposes.
    Decomp,
    /// Perfection is complement-invariant.
    Lovasz,
    /// The Roussel-Rubio trichotomy.
    Rr,
    /// Every X-complete vertex meets the interior of an all-ends-complete
    /// odd path with no complete edge.
    Greentouch,
    /// Complete-edge counts in subpaths match length parity.
    Evengap,
    /// A vertex linked onto a triangle sees two of its corners.
    Trianglev,
    /// Hat or leap at a fully attached hole edge.
    Rrc,
    /// A long hole and a long antihole share at most 3 vertices.
    Bigholes,
    /// A loose skew partition implies a balanced one.
    Geteven,
    /// A singleton component or anticomponent implies a balanced one.
    Singleton,
    /// Odd and even connectors together force looseness.
    Mixedpair,
    /// A skew partition implies a balanced one or a small blocker.
    Findprism,
    /// In the blocker-free class a skew partition implies a balanced one.
    Oddskew,
    /// Even-prism graphs with no nondegenerate appearance decompose.
    Evenprism,
    /// F11 graphs are complete, bipartite, or balanced-skew decomposable.
    Endgame,
    /// Deliberately negated conclusion; must produce counterexamples.
    SelftestFalsified,
}

pub const ALL_CLAIMS: &[ClaimId] = &[
    ClaimId::Spgt,
    ClaimId::Decomp,
    ClaimId::Lovasz,
    ClaimId::Rr,
    ClaimId::Greentouch,
    ClaimId::Evengap,
    ClaimId::Trianglev,
    ClaimId::Rrc,
    ClaimId::Bigholes,
    ClaimId::Geteven,
    ClaimId::Singleton,
    ClaimId::Mixedpair,
    ClaimId::Findprism,
    ClaimId::Oddskew,
    ClaimId::Evenprism,
    ClaimId::Endgame,
    ClaimId::SelftestFalsified,
];

impl ClaimId {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::Spgt => "spgt",
            ClaimId::Decomp => "decomp",
            ClaimId::Lovasz => "lovasz",
            ClaimId::Rr => "rr",
            ClaimId::Greentouch => "greentouch",
            ClaimId::Evengap => "evengap",
            ClaimId::Trianglev => "trianglev",
            ClaimId::Rrc => "rrc",
            ClaimId::Bigholes => "bigholes",
            ClaimId::Geteven => "geteven",
            ClaimId::Singleton => "singleton",
            ClaimId::Mixedpair => "mixedpair",
            ClaimId::Findprism => "findprism",
            ClaimId::Oddskew => "oddskew",
            ClaimId::Evenprism => "evenprism",
            ClaimId::Endgame => "endgame",
            ClaimId::SelftestFalsified => "selftest-falsified",
        }
    }

    /// Claims whose hypotheses quantify over Berge graphs only; non-Berge
    /// corpus members are counted as skipped.
    pub fn berge_only(&self) -> bool {
        !matches!(self, ClaimId::Spgt | ClaimId::Lovasz)
    }
}

pub fn claim_by_name(name: &str) -> Option<ClaimId> {
    ALL_CLAIMS.iter().copied().find(|c| c.name() == name)
}

pub(crate) struct CheckOutcome {
    pub bindings: u64,
    pub overflowed: bool,
    pub counterexamples: Vec<LemmaCounterexample>,
}

/// Work cap multiplier: enumeration nodes allowed per binding-budget unit.
const WORK_PER_BINDING: u64 = 256;

pub(crate) fn check_claim(id: ClaimId, g: &Graph, budget_limit: u64) -> CheckOutcome {
    let mut budget = BindingBudget::new(budget_limit);
    let mut cx = Vec::new();
    match id {
        ClaimId::Spgt => check_spgt(g, &mut budget, &mut cx),
        ClaimId::Decomp => check_decomp(g, &mut budget, &mut cx),
        ClaimId::Lovasz => check_lovasz(g, &mut budget, &mut cx),
        ClaimId::Rr => check_rr(g, &mut budget, &mut cx, false),
        ClaimId::Greentouch => check_rr(g, &mut budget, &mut cx, true),
        ClaimId::Evengap => check_evengap(g, &mut budget, &mut cx),
        ClaimId::Trianglev => check_trianglev(g, &mut budget, &mut cx, false),
        ClaimId::Rrc => check_rrc(g, &mut budget, &mut cx),
        ClaimId::Bigholes => check_bigholes(g, &mut budget, &mut cx),
        ClaimId::Geteven => check_geteven(g, &mut budget, &mut cx),
        ClaimId::Singleton => check_singleton(g, &mut budget, &mut cx),
        ClaimId::Mixedpair => check_mixedpair(g, &mut budget, &mut cx),
        ClaimId::Findprism => check_findprism(g, &mut budget, &mut cx),
        ClaimId::Oddskew => check_oddskew(g, &mut budget, &mut cx),
        ClaimId::Evenprism => check_evenprism(g, &mut budget, &mut cx),
        ClaimId::Endgame => check_endgame(g, &mut budget, &mut cx),
        ClaimId::SelftestFalsified => check_trianglev(g, &mut budget, &mut cx, true),
    }
    CheckOutcome { bindings: budget.used, overflowed: budget.overflowed, counterexamples: cx }
}

fn check_spgt(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let berge = is_berge(g);
    let report = match is_perfect_bounded(g, 12) {
        Ok(r) => r,
        Err(_) => {
            budget.overflowed = true;
            return;
        }
    };
    if berge != report.perfect {
        let mut bindings = vec![
            ("berge".to_string(), BindingValue::Int(berge as i64)),
            ("perfect".to_string(), BindingValue::Int(report.perfect as i64)),
        ];
        if let Some(w) = report.witness {
            bindings.push(("subset".to_string(), BindingValue::set(w.subset)));
            bindings.push(("omega".to_string(), BindingValue::Int(w.omega as i64)));
            bindings.push(("chi".to_string(), BindingValue::Int(w.chi as i64)));
        }
        cx.push(LemmaCounterexample::new("spgt", g, bindings));
    }
}

fn check_lovasz(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let (a, b) = match (is_perfect_bounded(g, 12), is_perfect_bounded(&g.complement(), 12)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            budget.overflowed = true;
            return;
        }
    };
    if a.perfect != b.perfect {
        cx.push(LemmaCounterexample::new(
            "lovasz",
            g,
            vec![
                ("perfect".to_string(), BindingValue::Int(a.perfect as i64)),
                ("complement_perfect".to_string(), BindingValue::Int(b.perfect as i64)),
            ],
        ));
    }
}

fn check_decomp(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let verdict = decompose_checked(g);
    match verdict {
        Ok(()) => {}
        Err(reason) => {
            cx.push(LemmaCounterexample::new(
                "decomp",
                g,
                vec![("failure".to_string(), BindingValue::Text(reason))],
            ));
        }
    }
}

/// Runs decompose and revalidates whichever certificate comes back.
fn decompose_checked(g: &Graph) -> Result<(), String> {
    match decompositions::decompose(g).map_err(|e| e.to_string())? {
        Verdict::Basic(cert) => {
            if !validate_basic_cert(g, &cert) {
                return Err("basic certificate failed revalidation".into());
            }
        }
        Verdict::TwoJoin { side, cert } => {
            let host = match side {
                recognizers::Side::G => g.clone(),
                recognizers::Side::Complement => g.complement(),
            };
            if !validate_two_join(&host, &cert) {
                return Err("2-join certificate failed revalidation".into());
            }
        }
        Verdict::MJoin(cert) => {
            if !validate_m_join(g, &cert) {
                return Err("M-join certificate failed revalidation".into());
            }
        }
        Verdict::BalancedSkew(cert) => {
            if !validate_skew_cert(g, &cert) || !cert.balanced {
                return Err("balanced-skew certificate failed revalidation".into());
            }
        }
        Verdict::CounterexampleToTheorem => {
            return Err("no decomposition found".into());
        }
    }
    Ok(())
}

/// Shared checker for the Roussel-Rubio trichotomy and its corollary: the
/// hypothesis enumerates anticonnected X and odd paths in G minus X with
/// X-complete ends. With `corollary` set, paths with an X-complete edge are
/// filtered out and the conclusion becomes "every X-complete vertex has a
/// neighbour in the interior".
fn check_rr(
    g: &Graph,
    budget: &mut BindingBudget,
    cx: &mut Vec<LemmaCounterexample>,
    corollary: bool,
) {
    let mut work = budget.limit * WORK_PER_BINDING;
    for x in anticonnected_sets(g) {
        let cn = complete_vertices(g, x);
        if cn.len() < 2 {
            continue;
        }
        let allowed = g.vertex_set().minus(x);
        for u in cn.iter() {
            let mut path = vec![u];
            let completed = odd_cn_paths(g, cn, allowed, &mut path, &mut work, &mut |p: &[usize]| {
                if !budget.tick() {
                    return false;
                }
                let complete_edge = p
                    .windows(2)
                    .any(|w| cn.contains(w[0]) && cn.contains(w[1]));
                if corollary {
                    if complete_edge {
                        return true;
                    }
                    let interior = VertexSet::from_iter(p[1..p.len() - 1].iter().copied());
                    for v in cn.iter() {
                        if g.neighbors(v).intersect(interior).is_empty() && !p.contains(&v) {
                            cx.push(LemmaCounterexample::new(
                                "greentouch",
                                g,
                                vec![
                                    ("X".to_string(), BindingValue::set(x)),
                                    ("P".to_string(), BindingValue::Seq(p.to_vec())),
                                    ("v".to_string(), BindingValue::Int(v as i64)),
                                ],
                            ));
                        }
                    }
                } else {
                    let len = p.len() - 1;
                    let ok = complete_edge
                        || (len >= 5 && find_leap(g, p, x).is_some())
                        || (len == 3 && has_parity_path(&g.complement(), p[1], p[2], x, true));
                    if !ok {
                        cx.push(LemmaCounterexample::new(
                            "rr",
                            g,
                            vec![
                                ("X".to_string(), BindingValue::set(x)),
                                ("P".to_string(), BindingValue::Seq(p.to_vec())),
                            ],
                        ));
                    }
                }
                true
            });
            if !completed {
                // Work or binding budget ran out: the check is partial and
                // must say so.
                budget.overflowed = true;
                return;
            }
        }
    }
}

/// DFS over induced paths inside `allowed` starting at path[0], invoking the
/// callback on every odd path of length >= 3 whose final vertex lies in `cn`
/// and exceeds the start (each path seen once). Returns false when the work
/// or binding budget runs out.
fn odd_cn_paths(
    g: &Graph,
    cn: VertexSet,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    work: &mut u64,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if *work == 0 {
        return false;
    }
    *work -= 1;
    let last = *path.last().unwrap();
    if path.len() >= 4 && path.len().is_multiple_of(2) && cn.contains(last) && last > path[0] && !f(path)
    {
        return false;
    }
    for w in g.neighbors(last).intersect(allowed).iter() {
        if path.contains(&w) || path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        path.push(w);
        let ok = odd_cn_paths(g, cn, allowed, path, work, f);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn check_evengap(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let cap = (budget.limit * WORK_PER_BINDING) as usize;
    let Some(paths) = all_induced_paths(g, 3, cap) else {
        budget.overflowed = true;
        return;
    };
    let path_masks: Vec<VertexSet> =
        paths.iter().map(|p| VertexSet::from_iter(p.iter().copied())).collect();
    let holes = enumerate_holes(g, 4, Parity::Any);
    let hole_masks: Vec<VertexSet> = holes.iter().map(|h| h.vertex_set()).collect();

    for x in anticonnected_sets(g) {
        let cn = complete_vertices(g, x);
        if cn.len() < 3 {
            continue;
        }
        for (p, mask) in paths.iter().zip(&path_masks) {
            if !mask.is_disjoint_from(x) || mask.intersect(cn).len() < 3 {
                continue;
            }
            if !budget.tick() {
                return;
            }
            if let Some((i, j)) = bad_subpath(p, cn, false) {
                cx.push(evengap_cx(g, x, &p[i..=j]));
            }
        }
        for (h, mask) in holes.iter().zip(&hole_masks) {
            if !mask.is_disjoint_from(x) || mask.intersect(cn).len() < 3 {
                continue;
            }
            if !budget.tick() {
                return;
            }
            // Arcs of the hole: doubled sequence trick covers wraparound.
            let verts = h.verts();
            let k = verts.len();
            let doubled: Vec<usize> = verts.iter().chain(verts.iter()).copied().collect();
            let mut reported = false;
            for start in 0..k {
                let slice = &doubled[start..start + k]; // k-vertex arc window
                if let Some((i, j)) = bad_subpath(slice, cn, true) {
                    if j - i < k {
                        cx.push(evengap_cx(g, x, &slice[i..=j]));
                        reported = true;
                        break;
                    }
                }
            }
            if reported {
                continue;
            }
            // Hole corollary: an even number of complete edges overall, or
            // exactly two complete vertices and they are adjacent.
            let complete_edges = (0..k)
                .filter(|&i| cn.contains(verts[i]) && cn.contains(verts[(i + 1) % k]))
                .count();
            let complete_verts: Vec<usize> =
                verts.iter().copied().filter(|&v| cn.contains(v)).collect();
            let adjacent_pair =
                complete_verts.len() == 2 && g.has_edge(complete_verts[0], complete_verts[1]);
            if complete_edges % 2 != 0 && !adjacent_pair {
                cx.push(evengap_cx(g, x, verts));
            }
        }
    }
}

/// First subpath (as index bounds) with complete ends whose complete-edge
/// count disagrees with its length parity. `proper` restricts to strict
/// subwindows (used for hole arcs, where the full window is not a path).
fn bad_subpath(seq: &[usize], cn: VertexSet, proper: bool) -> Option<(usize, usize)> {
    let m = seq.len();
    let flags: Vec<bool> = seq.iter().map(|&v| cn.contains(v)).collect();
    let mut prefix = vec![0usize; m];
    for i in 1..m {
        prefix[i] = prefix[i - 1] + (flags[i - 1] && flags[i]) as usize;
    }
    for i in 0..m {
        if !flags[i] {
            continue;
        }
        for j in i + 1..m {
            if !flags[j] || (proper && j - i >= m - 1) {
                continue;
            }
            let edges = prefix[j] - prefix[i];
            if edges % 2 != (j - i) % 2 {
                return Some((i, j));
            }
        }
    }
    None
}

fn evengap_cx(g: &Graph, x: VertexSet, q: &[usize]) -> LemmaCounterexample {
    LemmaCounterexample::new(
        "evengap",
        g,
        vec![
            ("X".to_string(), BindingValue::set(x)),
            ("Q".to_string(), BindingValue::Seq(q.to_vec())),
        ],
    )
}

/// Triangle linkage: for every triangle and outside vertex, search for a
/// witness path triple; when linked, the vertex must see two corners (or at
/// most one, for the deliberately falsified selftest variant).
fn check_trianglev(
    g: &Graph,
    budget: &mut BindingBudget,
    cx: &mut Vec<LemmaCounterexample>,
    negated: bool,
) {
    let mut work = budget.limit * WORK_PER_BINDING;
    let mut triangles = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..g.n() {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    triangles.push([u, v, w]);
                }
            }
        }
    }
    for t in &triangles {
        let tset = VertexSet::from_iter(t.iter().copied());
        for v in g.vertex_set().minus(tset).iter() {
            if work == 0 {
                budget.overflowed = true;
                return;
            }
            if !linked(g, *t, v, &mut work) {
                continue;
            }
            if !budget.tick() {
                return;
            }
            let hits = t.iter().filter(|&&a| g.has_edge(v, a)).count();
            let violated = if negated { hits >= 2 } else { hits < 2 };
            if violated {
                cx.push(LemmaCounterexample::new(
                    if negated { "selftest-falsified" } else { "trianglev" },
                    g,
                    vec![
                        ("triangle".to_string(), BindingValue::Set(t.to_vec())),
                        ("v".to_string(), BindingValue::Int(v as i64)),
                    ],
                ));
            }
        }
    }
    if work == 0 {
        budget.overflowed = true;
    }
}

/// Does some triple of paths link `v` onto the triangle? Paths start at the
/// corners, are pairwise disjoint with the corner edges as their only mutual
/// edges, avoid v, and each contains a neighbour of v.
fn linked(g: &Graph, t: [usize; 3], v: usize, work: &mut u64) -> bool {
    fn assign(
        g: &Graph,
        t: [usize; 3],
        v: usize,
        i: usize,
        chosen: &mut Vec<Vec<usize>>,
        work: &mut u64,
    ) -> bool {
        if i == 3 {
            return true;
        }
        // Candidate paths from t[i] avoiding v, other corners, used vertices.
        let mut used = VertexSet::singleton(v);
        for (j, &c) in t.iter().enumerate() {
            if j != i {
                used = used.insert(c);
            }
        }
        for p in chosen.iter() {
            used = used.union(VertexSet::from_iter(p.iter().copied()));
        }
        let mut path = vec![t[i]];
        try_paths(g, t, v, i, &mut path, g.vertex_set().minus(used), chosen, work)
    }

    #[allow(clippy::too_many_arguments)]
    fn try_paths(
        g: &Graph,
        t: [usize; 3],
        v: usize,
        i: usize,
        path: &mut Vec<usize>,
        allowed: VertexSet,
        chosen: &mut Vec<Vec<usize>>,
        work: &mut u64,
    ) -> bool {
        if *work == 0 {
            return false;
        }
        *work -= 1;
        // The current prefix is itself a candidate path if v has a neighbour
        // in it and cross-edge conditions hold.
        if path.iter().any(|&u| g.has_edge(v, u)) && cross_ok(g, t, i, path, chosen) {
            chosen.push(path.clone());
            if assign(g, t, v, i + 1, chosen, work) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        let last = *path.last().unwrap();
        for w in g.neighbors(last).intersect(allowed).iter() {
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                continue;
            }
            path.push(w);
            let found = try_paths(g, t, v, i, path, allowed.remove(w), chosen, work);
            path.pop();
            if found {
                return true;
            }
        }
        false
    }

    fn cross_ok(g: &Graph, t: [usize; 3], i: usize, path: &[usize], chosen: &[Vec<usize>]) -> bool {
        for (j, other) in chosen.iter().enumerate() {
            for &a in path {
                for &b in other.iter() {
                    let corner_edge = a == t[i] && b == t[j];
                    if g.has_edge(a, b) != corner_edge && g.has_edge(a, b) {
                        return false;
                    }
                }
            }
        }
        // Also forbid edges from the path interior to corners of paths not
        // yet chosen: enforced when those paths get checked, since the
        // corner is their first vertex.
        true
    }

    let mut chosen = Vec::new();
    assign(g, t, v, 0, &mut chosen, work)
}

fn check_rrc(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let holes = enumerate_holes(g, 5, Parity::Any);
    for hole in &holes {
        let verts = hole.verts();
        let k = verts.len();
        let hole_set = hole.vertex_set();
        for e in 0..k {
            let (u, v) = (verts[e], verts[(e + 1) % k]);
            // The long way around from u to v.
            let mut path = Vec::with_capacity(k);
            let mut idx = e;
            for _ in 0..k {
                path.push(verts[idx]);
                idx = (idx + k - 1) % k;
            }
            debug_assert_eq!((path[0], *path.last().unwrap()), (u, v));
            let pool = g.neighbors(u).intersect(g.neighbors(v)).minus(hole_set);
            for x in pool.subsets() {
                if x.is_empty() || !g.is_anticonnected_within(x) {
                    continue;
                }
                // u, v must be the only X-complete vertices of the hole.
                if verts
                    .iter()
                    .any(|&w| w != u && w != v && g.is_complete_to(w, x))
                {
                    continue;
                }
                if !budget.tick() {
                    return;
                }
                let hat = x
                    .iter()
                    .any(|cand| g.neighbors(cand).intersect(hole_set) == VertexSet::from_iter([u, v]));
                let leap = find_leap(g, &path, x).is_some();
                if !hat && !leap {
                    cx.push(LemmaCounterexample::new(
                        "rrc",
                        g,
                        vec![
                            ("C".to_string(), BindingValue::Seq(verts.to_vec())),
                            ("edge".to_string(), BindingValue::Seq(vec![u, v])),
                            ("X".to_string(), BindingValue::set(x)),
                        ],
                    ));
                }
            }
        }
    }
}

fn check_bigholes(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let holes = enumerate_holes(g, 8, Parity::Any);
    if holes.is_empty() {
        return;
    }
    let antiholes = enumerate_antiholes(g, 8, Parity::Any);
    for c in &holes {
        for d in &antiholes {
            if !budget.tick() {
                return;
            }
            let shared = c.vertex_set().intersect(d.vertex_set());
            if shared.len() > 3 {
                cx.push(LemmaCounterexample::new(
                    "bigholes",
                    g,
                    vec![
                        ("C".to_string(), BindingValue::Seq(c.verts().to_vec())),
                        ("D".to_string(), BindingValue::Seq(d.verts().to_vec())),
                        ("shared".to_string(), BindingValue::set(shared)),
                    ],
                ));
            }
        }
    }
}

fn skew_cx(claim: &str, g: &Graph, cert: &decompositions::SkewPartitionCert) -> LemmaCounterexample {
    LemmaCounterexample::new(
        claim,
        g,
        vec![
            ("A".to_string(), BindingValue::set(cert.a)),
            ("B".to_string(), BindingValue::set(cert.b)),
        ],
    )
}

fn check_geteven(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let partitions = find_skew_partitions(g);
    let mut witness = None;
    for cert in &partitions {
        if !budget.tick() {
            return;
        }
        if cert.loose {
            witness = Some(cert);
            break;
        }
    }
    if let Some(cert) = witness {
        if find_balanced_skew(g).is_none() {
            cx.push(skew_cx("geteven", g, cert));
        }
    }
}

fn check_singleton(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let partitions = find_skew_partitions(g);
    let mut witness = None;
    for cert in &partitions {
        if !budget.tick() {
            return;
        }
        let has_singleton = cert.components_of_a.iter().any(|c| c.len() == 1)
            || cert.anticomponents_of_b.iter().any(|c| c.len() == 1);
        if has_singleton {
            witness = Some(cert);
            break;
        }
    }
    if let Some(cert) = witness {
        if find_balanced_skew(g).is_none() {
            cx.push(skew_cx("singleton", g, cert));
        }
    }
}

fn check_mixedpair(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    let comp = g.complement();
    for cert in find_skew_partitions(g) {
        if !budget.tick() {
            return;
        }
        let mut hypothesis = false;
        // Odd and even paths joining some nonadjacent pair of B through A.
        'outer: for u in cert.b.iter() {
            for v in cert.b.iter() {
                if v <= u || g.has_edge(u, v) {
                    continue;
                }
                if has_parity_path(g, u, v, cert.a, true)
                    && has_parity_path(g, u, v, cert.a, false)
                {
                    hypothesis = true;
                    break 'outer;
                }
            }
        }
        if !hypothesis {
            // Antipath side: adjacent pair of A joined through B in the
            // complement by both parities.
            'outer2: for u in cert.a.iter() {
                for v in cert.a.iter() {
                    if v <= u || !g.has_edge(u, v) {
                        continue;
                    }
                    if has_parity_path(&comp, u, v, cert.b, true)
                        && has_parity_path(&comp, u, v, cert.b, false)
                    {
                        hypothesis = true;
                        break 'outer2;
                    }
                }
            }
        }
        if hypothesis && (!cert.loose || find_balanced_skew(g).is_none()) {
            cx.push(skew_cx("mixedpair", g, &cert));
            return;
        }
    }
}

/// The three named blockers: a long prism, a double diamond, or the line
/// graph of K_{3,3} minus an edge, in the graph or its complement.
fn has_blocker(g: &Graph) -> bool {
    let comp = g.complement();
    for side in [g, &comp] {
        if find_prisms(side).iter().any(|p| p.long) {
            return true;
        }
        if contains_fixed(side, FixedGraph::DoubleDiamond).is_some() {
            return true;
        }
        if contains_fixed(side, FixedGraph::LK33MinusE).is_some() {
            return true;
        }
    }
    false
}

fn check_findprism(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let Some(cert) = decompositions::first_skew_partition(g) else {
        return;
    };
    if find_balanced_skew(g).is_none() && !has_blocker(g) {
        cx.push(skew_cx("findprism", g, &cert));
    }
}

fn check_oddskew(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let opts = LadderOptions { f8: F8Mode::Off, ..Default::default() };
    let Ok(report) = f_ladder(g, opts) else {
        budget.overflowed = true;
        return;
    };
    if !report.flag(6).holds() {
        return;
    }
    let Some(cert) = decompositions::first_skew_partition(g) else {
        return;
    };
    if find_balanced_skew(g).is_none() {
        cx.push(skew_cx("oddskew", g, &cert));
    }
}

fn check_evenprism(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let apps = match find_appearances_k4(g, structures::DEFAULT_SUBSET_BUDGET) {
        Ok(a) => a,
        Err(_) => {
            budget.overflowed = true;
            return;
        }
    };
    if apps.iter().any(|a| !a.degenerate) {
        return; // hypothesis needs no nondegenerate appearance
    }
    let prisms = find_prisms(g);
    if !prisms.iter().any(|p| p.kind == PrismKind::Even) {
        return;
    }
    let nine_vertex_case = g.n() == 9
        && prisms
            .iter()
            .any(|p| p.kind == PrismKind::Even && p.vertex_set() == g.vertex_set())
        && classify_basic(g).is_some();
    let ok = nine_vertex_case || find_two_join(g).is_some() || find_balanced_skew(g).is_some();
    if !ok {
        cx.push(LemmaCounterexample::new(
            "evenprism",
            g,
            vec![("n".to_string(), BindingValue::Int(g.n() as i64))],
        ));
    }
}

fn check_endgame(g: &Graph, budget: &mut BindingBudget, cx: &mut Vec<LemmaCounterexample>) {
    budget.tick();
    let Ok(report) = f_ladder(g, LadderOptions::default()) else {
        budget.overflowed = true;
        return;
    };
    if !report.flag(11).holds() {
        return;
    }
    let n = g.n();
    let complete = g.edge_count() == n * n.saturating_sub(1) / 2;
    let bipartite = recognizers::recognize_bipartite(g).is_some();
    if !complete && !bipartite && find_balanced_skew(g).is_none() {
        cx.push(LemmaCounterexample::new(
            "endgame",
            g,
            vec![("n".to_string(), BindingValue::Int(n as i64))],
        ));
    }
}
