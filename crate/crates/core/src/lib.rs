//! Exact computation of metric dimension throttling numbers.
//!
//! A sensor of radius `r` reads `min(dist, r + 1)` to every landmark; the
//! throttling number of a graph is the least `r + k` such that `k` landmarks
//! with radius `r` give every target (vertex, edge, or vertex subset) a
//! distinct reading vector. This crate computes those numbers exactly by
//! branch-and-bound over distinguisher constraints and compares them with
//! closed forms. The graph families and landmark configurations they are
//! studied on are generated here as well.

pub mod bitset;
pub mod checks;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod resolve;
pub mod solver;

pub use bitset::VertexSet;
pub use constructions::{Configuration, ReductionOutput};
pub use error::{Error, Result};
pub use families::{classify_extremal, is_extremal_thdim, th_formula, ExtremalClass, FormulaValue};
pub use graph::{
    all_pairs_distances, generate, parse_family, DistanceMatrix, ExtendedDistance, FamilySpec, Graph, GridFactor,
    Vertex,
};
pub use resolve::{compile_constraints, is_resolving, Constraint, ConstraintSystem, TargetFamily, Variant};
pub use solver::{
    exhaustive_min_resolving, export_ip, min_hitting_set, throttling_number, throttling_number_for,
    truncated_dimension, DimValue, SolveBudget, SolveOutcome, SolveStatus, ThrottlingResult,
};
