use graphcore::{Graph, VertexSet};
use thiserror::Error;

use crate::coloring::{chromatic_number, clique_number};

/// Default cap for the 2^n induced-subgraph sweep.
pub const DEFAULT_PERFECT_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PerfectError {
    #[error("perfection sweep examines 2^n subsets; n={n} exceeds the limit {limit}")]
    BudgetExceeded { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImperfectWitness {
    /// The violating induced subgraph, smallest by size then lexicographic.
    pub subset: VertexSet,
    pub omega: usize,
    pub chi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectionReport {
    pub perfect: bool,
    pub witness: Option<ImperfectWitness>,
}

pub fn is_perfect(g: &Graph) -> Result<PerfectionReport, PerfectError> {
    is_perfect_bounded(g, DEFAULT_PERFECT_LIMIT)
}

/// Checks chi(G|H) = omega(G|H) for every subset H, sweeping subsets by size
/// and then lexicographically on the sorted vertex lists, so a reported
/// witness is minimal in that order.
pub fn is_perfect_bounded(g: &Graph, limit: usize) -> Result<PerfectionReport, PerfectError> {
    let n = g.n();
    if n > limit {
        return Err(PerfectError::BudgetExceeded { n, limit });
    }
    for size in 1..=n {
        let mut witness = None;
        visit_subsets_lex(n, size, &mut |s| {
            let h = g.induced(s);
            let omega = clique_number(&h);
            let chi = chromatic_number(&h);
            if chi != omega {
                witness = Some(ImperfectWitness { subset: s, omega, chi });
                true
            } else {
                false
            }
        });
        if witness.is_some() {
            return Ok(PerfectionReport { perfect: false, witness });
        }
    }
    Ok(PerfectionReport { perfect: true, witness: None })
}

/// Visits all `size`-subsets of `{0..n-1}` in lexicographic order of their
/// sorted vertex lists; stops early when the visitor returns true.
fn visit_subsets_lex(n: usize, size: usize, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    fn go(
        n: usize,
        size: usize,
        start: usize,
        acc: VertexSet,
        f: &mut impl FnMut(VertexSet) -> bool,
    ) -> bool {
        if acc.len() == size {
            return f(acc);
        }
        let need = size - acc.len();
        for v in start..=n.saturating_sub(need) {
            if go(n, size, v + 1, acc.insert(v), f) {
                return true;
            }
        }
        false
    }
    go(n, size, 0, VertexSet::EMPTY, f)
}
