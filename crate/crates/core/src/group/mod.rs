//! Constructions: Frobenius modules, solvable recipes V ⋊ (U ⋊ W), explicit
//! groups with element-order scans, and the symbolic evaluator for A ⋊ (H × K).

mod explicit;
mod frobenius;
mod recipe;
mod symbolic;
mod witness;

pub use explicit::{
    pgc_of_explicit, realize_explicit, realize_explicit_seeded, Element, ExplicitGroup, DEFAULT_ORDER_BOUND,
};
pub use frobenius::{build_frobenius_module, build_frobenius_module_with, FrobeniusModuleSpec, DEFAULT_FIELD_BITS};
pub use recipe::{
    build_solvable_recipe, plan_solvable_recipe, EFactor, ScalarAction, SolvableRecipe, UComponent, VComponent,
};
pub use symbolic::{pgc_semidirect_symbolic, AModule};
pub use witness::{realize_psl_symbolic, PslWitness};

use crate::data::DataError;
use crate::graph::GraphError;
use crate::primes::Prime;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("field F_{q}^{d} exceeds 2^{max_bits} elements")]
    FieldTooLarge { q: u64, d: u64, max_bits: u32 },
    #[error("acting prime and characteristic are both {0}")]
    SamePrime(Prime),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("group order {order} exceeds the bound {bound}")]
    OrderBoundExceeded { order: u128, bound: u64 },
    #[error("disjointness violated: {0}")]
    DisjointnessViolation(String),
    #[error("recipe contains the nonsolvable factor {0}; only its symbolic pgc is available")]
    SymbolicOnly(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("group axiom check failed: {0}")]
    AxiomFailure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Data(#[from] DataError),
}
