//! Boolean intervals in the weak order of Coxeter groups.
//!
//! An interval `[v, w]` in the right weak order is Boolean exactly when
//! `w = v * s_1 * ... * s_k` for pairwise commuting generators none of which is
//! a right descent of `v`. Boolean intervals above `v` are therefore counted by
//! the independent sets of the Coxeter graph with `Des(v)` deleted, and the
//! rank-`k` total of a finite group is `i_k(graph) * |W| / 2^k`.
//!
//! The crate implements that correspondence for the classical families, the
//! closed-form counts built on it (Fibonacci, Lucas and the type-D sequence),
//! exponential generating functions for types C and D, and a brute-force weak
//! order used to cross-check every formula.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod genfunc;
pub mod graph;
pub mod group;
pub mod independent;
pub mod oeis;
pub mod sequences;
pub mod verify;
pub mod weak_order;

pub use enumeration::{
    booleans_above, count_above, count_above_descent_set, count_table, global_rank_count,
    group_order, AboveInterval, CountTable,
};
pub use error::{Error, Result};
pub use genfunc::{egf_total, expand_egf, recurrence_table, QPoly, RationalSeries};
pub use graph::{
    build_matrix, graph_from_matrix, ComponentClass, ComponentShape, CoxeterGraph, CoxeterMatrix,
    CoxeterType, Family, GeneratorId, RelationOrder,
};
pub use group::{all_elements, DescentSet, GroupElement, MirroredPermutation};
pub use independent::{
    count_by_size, enumerate_independent_sets, fork_count, path_count, IndependenceProfile,
};
pub use oeis::{compare as compare_oeis, OeisComparison};
pub use sequences::{binomial, d_number, fibonacci, lucas, sequence, SequenceKind};
pub use verify::{verify, CheckOutcome, VerifyReport};
pub use weak_order::{
    build_weak_order, count_elements_avoiding_descents, enumerate_boolean_intervals,
    is_boolean_oracle, is_boolean_tenner, BooleanIntervalRecord, BooleanIntervals, WeakOrderPoset,
};
