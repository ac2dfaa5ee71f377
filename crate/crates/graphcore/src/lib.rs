//! Small-graph substrate for the Berge-graph workbench: bit-row graphs on at
//! most [`MAX_N`] vertices, induced-structure enumeration, connectivity in a
//! graph and its complement, canonical labelling, and graph6/DIMACS I/O.
//!
//! Everything here is exact and deterministic. All higher layers (recognizers,
//! structure detectors, decomposition finders, the lemma suite) treat these
//! types as immutable values.

mod canon;
mod graph;
mod holes;
mod io;
mod paths;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use graph::{Graph, GraphError, VertexSet, MAX_N};
pub use holes::{
    enumerate_antiholes, enumerate_holes, find_odd_antihole, find_odd_hole, visit_holes, Parity,
};
pub use io::{emit_graph6, parse_dimacs, parse_graph6, DimacsError, Graph6Error};
pub use paths::{Antihole, Antipath, Hole, InducedPath, StructureError};
