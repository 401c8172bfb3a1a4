//! Skeleton ideals of G-parking function ideals.
//!
//! For a simple graph `G` on `{0, 1, ..., n}` with sink `0`, the library builds
//! the monomial ideals `M_G^(k)` generated by `m_σ` for `|σ| <= k + 1`, counts
//! and lists their standard monomials, and computes minimal graded Betti numbers
//! in two independent ways: from reduced homology of upper Koszul complexes
//! ([`betti`]) and from labeled cell decompositions induced by a pair of
//! tropical hyperplanes ([`tropical`]).
//!
//! All arithmetic is exact. Data-parallel sweeps go through [`par`], which uses
//! rayon when the `parallel` feature is enabled and plain iterators otherwise.

pub mod betti;
pub mod chipfire;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod guard;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod par;
pub mod power;
pub mod qpoly;
pub mod standard;
pub mod tropical;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use matrix::IntMatrix;
pub use monomial::{Monomial, MonomialIdeal};
pub use par::Exec;
pub use qpoly::QPolynomial;
