//! Topological containment of wheel graphs in small graphs.
//!
//! The crate decides whether a graph contains a subdivision of the wheel
//! `W_k` ([`find_k_wheel`]), recognizes `W_k`-subdivisions directly
//! ([`is_k_wheel`]), and generates the "exception" graphs that case analyses
//! for `W_k` characterizations have to treat by hand ([`wheelproof`],
//! [`exception_generator`]). Searches are exhaustive and meant for graphs
//! with a few dozen edges at most.

pub mod connectivity;
pub mod generate;
pub mod graph;
pub mod io;
pub mod isomorphism;
pub mod search;
pub mod wheel;

pub use connectivity::{bridges, components_minus, is_2connected, is_3connected, is_connected};
pub use generate::{
    candidate_count, exception_generator, split_regions, wheelproof, wheelproof_with, Attachment, ExceptionList,
    Generation, GenerationError, GenerationOptions, GenerationStats, SkipMode,
};
pub use graph::{make_wheel, Graph, GraphError, VertexId, VertexSet};
pub use io::{parse_edge_list, to_dot, write_edge_list, ParseError};
pub use isomorphism::{is_isomorphic, iso_classes, IsoClass, IsoClassSummary};
pub use search::{find_k_wheel, find_k_wheel_with, EdgeCursor, SearchConfig, SearchOutcome, SearchRun, Witness};
pub use wheel::{contract_degree_two, is_k_wheel};
