//! Free left-handed skew Boolean intersection algebras (SBIAs).
//!
//! Elements of the free algebra over generators `x1 … xn` are represented by
//! canonical normal forms: admissible families of pointed partitions of
//! non-empty subsets of `{1 … n}`. Two terms denote the same element exactly
//! when their normal forms coincide, which decides the word problem.
//!
//! The crate also carries the finite models used to check that engine
//! independently (primitive algebras `(k+1)_L` and their products), the
//! combinatorics of the finite free algebras, and the partition tree.
//!
//! ```
//! use sbia::{normalize, parse, Universe};
//!
//! let n = Universe::new(2);
//! let lhs = normalize(&parse("x1 ^ x2 ^ x1").unwrap(), n).unwrap();
//! let rhs = normalize(&parse("x1 ^ x2").unwrap(), n).unwrap();
//! assert_eq!(lhs, rhs);
//! ```

pub mod algebra;
pub mod cli;
mod error;
pub mod free_algebra;
pub mod laws;
pub mod models;
pub mod normal_forms;
pub mod partitions;
pub mod terms;

pub use algebra::Sbia;
pub use error::{Error, Result};
pub use free_algebra::{
    enumerate_atoms, export_tree, generable, stats, tree_children, tree_level, FreeAlgebraStats,
    TreeFormat, TreeVertex,
};
pub use models::{
    embed_in_product, oracle_equal, witness, Assignment, PrimitiveModel, ProductModel,
};
pub use normal_forms::{normalize, FreeAlgebra, NormalForm};
pub use partitions::{bell, stirling2, Injection, Partition, PointedPartition, Universe};
pub use terms::{elementary_term, evaluate, parse, Term};
