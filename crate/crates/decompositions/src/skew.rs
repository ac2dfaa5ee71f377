//! Skew partitions: partitions (A,B) of the vertex set with A disconnected
//! and B not anticonnected, refined by the loose and balanced flags.

use std::ops::ControlFlow;

use graphcore::{Graph, VertexSet};

use crate::balance::is_balanced_pair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPartitionCert {
    pub a: VertexSet,
    pub b: VertexSet,
    pub components_of_a: Vec<VertexSet>,
    pub anticomponents_of_b: Vec<VertexSet>,
    /// Some vertex of B misses a component of A entirely, or some vertex of
    /// A is complete to an anticomponent of B.
    pub loose: bool,
    /// No odd path between nonadjacent B-vertices with interior in A and no
    /// odd antipath between adjacent A-vertices with interior in B.
    pub balanced: bool,
}

/// Visits skew partitions in order of |B| ascending, then ascending bit-mask
/// order of B. Flags are computed before each visit.
pub fn visit_skew_partitions<F>(g: &Graph, mut f: F)
where
    F: FnMut(SkewPartitionCert) -> ControlFlow<()>,
{
    let n = g.n();
    if n < 4 {
        // A needs two components and B two anticomponents: four vertices.
        return;
    }
    for size in 1..n {
        let mut b_bits = (1u64 << size) - 1;
        let limit = 1u64 << n;
        while b_bits < limit {
            let b = VertexSet::from_bits(b_bits);
            // Gosper's hack: next mask with the same popcount.
            let c = b_bits & b_bits.wrapping_neg();
            let r = b_bits + c;
            b_bits = (((r ^ b_bits) >> 2) / c) | r;

            let a = g.vertex_set().minus(b);
            let components_of_a = g.components(a);
            if components_of_a.len() < 2 {
                continue;
            }
            let anticomponents_of_b = g.anticomponents(b);
            if anticomponents_of_b.len() < 2 {
                continue;
            }
            let loose = compute_loose(g, a, b, &components_of_a, &anticomponents_of_b);
            let balanced = is_balanced_pair(g, a, b).0;
            let cert = SkewPartitionCert { a, b, components_of_a, anticomponents_of_b, loose, balanced };
            debug_assert!(validate_skew_cert(g, &cert));
            if f(cert).is_break() {
                return;
            }
        }
    }
}

fn compute_loose(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    comps_a: &[VertexSet],
    anticomps_b: &[VertexSet],
) -> bool {
    let vertex_misses_component =
        b.iter().any(|v| comps_a.iter().any(|c| g.neighbors(v).intersect(*c).is_empty()));
    let vertex_complete_to_anticomponent =
        a.iter().any(|v| anticomps_b.iter().any(|d| g.is_complete_to(v, *d)));
    vertex_misses_component || vertex_complete_to_anticomponent
}

/// Every skew partition of `g`, in the visit order above.
pub fn find_skew_partitions(g: &Graph) -> Vec<SkewPartitionCert> {
    let mut out = Vec::new();
    visit_skew_partitions(g, |cert| {
        out.push(cert);
        ControlFlow::Continue(())
    });
    out
}

/// First skew partition in enumeration order, balanced or not.
pub fn first_skew_partition(g: &Graph) -> Option<SkewPartitionCert> {
    let mut found = None;
    visit_skew_partitions(g, |cert| {
        found = Some(cert);
        ControlFlow::Break(())
    });
    found
}

/// First skew partition with the balanced flag set.
pub fn find_balanced_skew(g: &Graph) -> Option<SkewPartitionCert> {
    let mut found = None;
    visit_skew_partitions(g, |cert| {
        if cert.balanced {
            found = Some(cert);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Independent revalidation of a skew partition certificate, recomputing
/// connectivity and both flags from scratch.
pub fn validate_skew_cert(g: &Graph, cert: &SkewPartitionCert) -> bool {
    if !cert.a.is_disjoint_from(cert.b) || cert.a.union(cert.b) != g.vertex_set() {
        return false;
    }
    if cert.a.is_empty() || cert.b.is_empty() {
        return false;
    }
    let comps = g.components(cert.a);
    let anticomps = g.anticomponents(cert.b);
    if comps.len() < 2 || anticomps.len() < 2 {
        return false;
    }
    if comps != cert.components_of_a || anticomps != cert.anticomponents_of_b {
        return false;
    }
    if cert.loose != compute_loose(g, cert.a, cert.b, &comps, &anticomps) {
        return false;
    }
    cert.balanced == is_balanced_pair(g, cert.a, cert.b).0
}
