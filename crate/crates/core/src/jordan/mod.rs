//! Compositions and Jordan partitions `lambda(m, n, p)`.

mod recursion;
mod types;

pub use recursion::{
    classify_case, composition, is_standard, jordan_partition, lambda_from_composition,
    radix_params, reverse, standard_predicate_p2, JordanSolver, TraceStep, DEFAULT_MAX_BLOCK,
};
pub use types::{BlockPair, CaseId, Composition, JordanDecomposition, Prime, RadixParams};
