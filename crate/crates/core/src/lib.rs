//! Decorated graph complexes attached to spaces of long knots in `R^n`.
//!
//! Graphs have a distinguished oriented circle, external vertices on it and
//! at-least-trivalent internal vertices off it. Two decoration conventions
//! ("odd" and "even", after the parity of `n`) determine how relabelings act
//! by signs. On top of canonical forms this crate provides the coboundary,
//! canonical bases, exact cohomology, the framed extension, Bar-Natan graphs
//! with gl(N) weights, and the face-vanishing checks that justify the
//! coboundary's terms.

pub mod coboundary;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod faces;
pub mod framed;
pub mod graph;
pub mod homology;
pub mod json;
pub mod perm;
pub mod standard;
pub mod vector;
pub mod verify;
pub mod weights;

pub use coboundary::{contract, delta, delta_vector, ContractionSite};
pub use error::{GraphError, Result};
pub use graph::{Canon, DecoratedGraph, Edge, Parity, Violation};
pub use vector::{GraphTerm, GraphVector, Rational};
