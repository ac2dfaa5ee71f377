//! Exhaustive enumeration of graphs up to isomorphism by canonical extension:
//! every graph on k+1 vertices arises from one on k vertices by attaching a
//! new vertex, so extending every canonical k-vertex graph by every
//! neighborhood subset and deduplicating canonical forms yields exactly one
//! representative per isomorphism class.

use std::collections::BTreeSet;

use graphcore::{canonical_form, Graph, VertexSet};
use thiserror::Error;

/// The built-in enumerator is meant for n <= 8 (12346 classes); larger
/// corpora come from external graph6 files.
pub const MAX_ENUMERATE_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("built-in enumerator handles n <= {MAX_ENUMERATE_N}, got {0}")]
    TooLarge(usize),
}

/// Exactly one representative per isomorphism class of graphs on `n`
/// vertices, in ascending canonical order.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ENUMERATE_N {
        return Err(EnumerateError::TooLarge(n));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0).unwrap()]);
    }
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph::empty(1).unwrap());
    for k in 1..n {
        let mut next: BTreeSet<Graph> = BTreeSet::new();
        for g in &level {
            for attach in VertexSet::full(k).subsets() {
                let mut bigger = Graph::empty(k + 1).unwrap();
                for (u, v) in g.edges() {
                    bigger.add_edge(u, v).unwrap();
                }
                for v in attach.iter() {
                    bigger.add_edge(k, v).unwrap();
                }
                next.insert(canonical_form(&bigger).graph);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}
