//! Constructive graph algorithms whose answers come with checkable witnesses.
//!
//! Every graph is simple and lives on the dense vertex set `0..n` unless a
//! [`graphcore::MultiGraph`] is asked for. Exact counts use [`Count`] and exact
//! fractions use [`Rational`].

pub mod coloring;
pub mod connectivity;
pub mod degseq;
pub mod error;
pub mod families;
pub mod graphcore;
pub mod io;
pub mod linalg;
pub mod matching;
pub mod morphism;
pub mod planar;
pub mod transform;
pub mod traversal;
pub mod trees;

pub use error::{Error, Result};
pub use graphcore::{build, AnyGraph, Graph, Mode, MultiGraph};

/// Exact non-negative counts (spanning trees, labelled graphs).
pub type Count = num_bigint::BigInt;

/// Exact ratios such as toughness or the Caro–Wei sum.
pub type Rational = num_rational::Ratio<i64>;
