//! Exact-arithmetic combinatorial Hopf algebras on interval partitions,
//! permutations, and vincular permutation patterns.
//!
//! The crate provides three layers:
//!
//! - [`combinatorics`]: interval partitions, compositions, permutations, and
//!   the set operations relating them (cliques, restriction, gluing,
//!   refinement order, standardization).
//! - the algebra modules [`partition_hopf`], [`word_iso`], [`perm_hopf`] and
//!   [`vincular_hopf`]: products and coproducts over the free rational module
//!   of [`freealg`], all computed by explicit enumeration in exact
//!   arithmetic.
//! - [`signatures`] and [`hopf_tools`]: the occurrence-counting functionals
//!   with their closed-form evaluators, the Takeuchi antipode, and a harness
//!   that machine-checks the algebraic laws (character property, Chen's
//!   identity, bialgebra compatibility, antipode axioms).

pub mod combinatorics;
pub mod error;
pub mod freealg;
pub mod guard;
pub mod hopf_tools;
pub mod partition_hopf;
pub mod perm_hopf;
pub mod signatures;
pub mod vincular_hopf;
pub mod word_iso;

pub use combinatorics::{Composition, LabeledIntervalPartition, PartialOrderResult, Permutation};
pub use error::{Error, Result};
pub use freealg::{LinComb, Rational, Tensor2, Tensor3};
pub use vincular_hopf::VincularPattern;
pub use word_iso::IntWord;
