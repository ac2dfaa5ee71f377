//! Detectors for the structure zoo used in staging the decomposition proof:
//! prisms, the double diamond and the two small line graphs, wheels,
//! appearances of K4, and the nested class ladder F1..F11.

mod appearance;
mod fixed;
mod ladder;
mod prism;
mod wheel;

pub use appearance::{
    find_appearances_k4, subdivision_of_k4_profile, AppearanceError, AppearanceK4,
    DEFAULT_SUBSET_BUDGET,
};
pub use fixed::{contains_fixed, find_induced_embedding, fixed_graph, FixedGraph};
pub use ladder::{f_ladder, has_pseudowheel, F8Mode, FLadderReport, Flag, LadderError, LadderOptions};
pub use prism::{build_prism, find_prisms, validate_prism, Prism, PrismKind};
pub use wheel::{find_wheels, has_odd_wheel, has_wheel, validate_wheel, Wheel};
