//! Exact Turán and Ramsey numbers for paths, stars and two broom-like tree families,
//! with constructive lower-bound witnesses and exhaustive search oracles for small orders.

pub mod embed;
pub mod error;
pub mod expr;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod ramsey;
pub mod tree;
pub mod turan;
pub mod verify;
pub mod witness;

pub use embed::{contains_tree, TreePattern};
pub use error::{Error, Result};
pub use expr::GraphExpr;
pub use format::{from_dot, from_graph6, to_dot, to_graph6};
pub use graph::{Adjacency, Graph, MAX_ORDER};
pub use oracle::{ex_brute, ramsey_brute, scan_conjecture, Conjecture, SearchBudget};
pub use ramsey::{ramsey_bounds, ramsey_bounds_for_graph, RamseyBounds, Statement};
pub use tree::{Tree, TreeFamily};
pub use witness::{build_witness, validate_witness, Claim, Construction, LeftGraph, Witness};
