//! Curling numbers of integer strings and graph degree sequences.
//!
//! - [`seqcore`]: curling number of a string, its rearranged variant, and the
//!   append-and-extend process.
//! - [`degseq`]: invariants of a degree sequence grouped into runs of equal
//!   degree (curling number, identity curling subsequence count, curling
//!   index, compound curling number), unions and edge deletion.
//! - [`graphs`]: simple graphs and digraphs, the standard families, Jaco
//!   graphs, set-graphs and Rasta graphs, plus the edge-list format.
//! - [`summand`]: distinct-part summand sets, the splitting chain and the
//!   Rasta compound series.

pub mod degseq;
pub mod error;
pub mod graphs;
pub mod seqcore;
pub mod summand;

pub use degseq::{
    cn_graph, compound_cn, curling_index, edge_deletion_prediction, group_degrees, ic_graph,
    merge_union, union_compound_formula, Arrangement, DeletionOrdering, GraphInvariants,
    IdentityString, Run, UnionCompound,
};
pub use error::{CurlError, Result};
pub use graphs::{degree_sequence, delete_edge, DiGraph, SimpleGraph};
pub use seqcore::{
    cn_rearranged, cn_string, extend_once, factorize_max, verify_conjecture,
    verify_conjecture_with, ConjectureOptions, CurlingTrace, Factorization, IntString,
};
pub use summand::{
    enumerate_summand_sets, greedy_summand_chain, l_star, max_product_summand,
    rasta_compound_series, split2, StepBudget, SummandSet,
};
