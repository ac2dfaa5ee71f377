//! Berge testing, perfection testing, and recognition of the five basic
//! classes (bipartite, complement of bipartite, line graph of bipartite,
//! complement of one, bicograph) with constructive, revalidatable
//! certificates.

mod basic;
mod berge;
mod coloring;
mod perfect;

pub use basic::{
    classify_basic, complete_bipartite, line_graph, recognize_bicograph, recognize_bipartite,
    recognize_line_of_bipartite, validate_basic_cert, validate_bicograph, BasicCert,
    BicographCert, LineGraphError, LineRoot,
};
pub use berge::{berge_witness, is_berge, BergeWitness, Side};
pub use coloring::{chromatic_number, clique_number, max_clique};
pub use perfect::{is_perfect, is_perfect_bounded, ImperfectWitness, PerfectError, PerfectionReport};
