//! Exhaustive ground truth for tiny parameters: homogeneity verification,
//! isomorph-free enumeration and exact quasi-Ramsey values.

mod canon;
mod enumerate;
mod search;
mod verify;

pub use canon::{canonical_code, canonical_code_exhaustive, canonical_form, canonical_graph, Canonical, MAX_CANON_ORDER};
pub use enumerate::{count_graphs, enumerate_graphs, enumerate_graphs_with_ceiling, GraphStream, DEFAULT_CEILING};
pub use search::{exact_fixed, exact_variable, ExactConfig, ExactResult, DEFAULT_BUDGET};
pub use verify::{
    is_homogeneous, verify_no_homogeneous_fixed, verify_no_homogeneous_variable, Claim, LowerBoundCertificate,
    SetWitness, ThresholdFn,
};
