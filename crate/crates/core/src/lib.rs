//! Combinatorics of the major index on involution conjugacy classes.
//!
//! The building blocks are integer [partitions](partition) viewed as Young
//! diagrams, [standard Young tableaux](tableau) with their descent
//! statistics, [permutations](permutation) with the RSK correspondence,
//! and exact [q-polynomial](qpoly) arithmetic for the generating-function
//! side of the same counts. On top of those, [majrange] computes the
//! extrema of the major index per shape and per conjugacy class, runs the
//! diagram traversal certifying that the whole range is attained, and
//! checks the prediction against exhaustive enumeration.

pub mod error;
pub mod majrange;
pub mod partition;
pub mod permutation;
pub mod qpoly;
pub mod tableau;

pub use error::Error;
pub use majrange::{
    algorithm_step, algorithm_trace, class_bounds, missing_values, shape_bounds, shape_gap_ok,
    verify_theorem, AlgorithmStep, ClassBounds, EnumerationMethod, GapAnnotation, MajBounds,
    TraceEntry, VerificationReport,
};
pub use partition::{
    enumerate_partitions, enumerate_shapes_with_odd_columns, Cell, HookClass, Partition,
};
pub use permutation::{enumerate_involutions, rsk_inverse, Permutation, TableauPair};
pub use qpoly::{q_factorial, q_int, stanley_maj_poly, QPolynomial};
pub use tableau::{count_syt, enumerate_syt, maj_histogram, StandardTableau};
