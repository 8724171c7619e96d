//! Domination parameters of graphs: variants, verification, probabilistic
//! upper bounds, randomized constructions that attain them, and an exact
//! oracle for small graphs.

pub mod bounds;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod spec;
pub mod tuner;
pub mod verify;

pub use bounds::{BoundForms, BoundReport};
pub use construct::{
    construct, construct_parametric, construct_rs, construct_total_rs, Construction, ConstructionResult, Witness,
};
pub use error::{Error, Result};
pub use exact::{exact, exact_function_number, exact_set_number, ExactLimits, ExactResult, FunctionLimits};
pub use graph::{generate, read_graph, write_graph, Graph, GraphFamily, GraphFamilySpec, GraphFormat};
pub use spec::DominationSpec;
pub use verify::{verify_function, verify_set, VerifyReport, VertexFunction};
