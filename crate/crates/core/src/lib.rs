//! Stability of polynomials with respect to convex cones.
//!
//! A polynomial `f ∈ C[z_1, …, z_n]` is K-stable when it has no root whose
//! imaginary part lies in the relative interior of the cone `K`. Taking `K`
//! to be the nonnegative orthant recovers ordinary stability; taking the cone
//! of positive semidefinite matrices, with the entries of a symmetric matrix
//! as variables, gives psd-stability.
//!
//! The crate provides exact sparse polynomial arithmetic ([`poly`]), the
//! symmetric-matrix transforms ([`symmat`]), a randomized falsifier
//! ([`stabcheck`]), the catalogue of stability preservers ([`preservers`]),
//! support combinatorics ([`combinat`]) and text and report formats.

pub mod combinat;
pub mod corpus;
pub mod error;
pub mod poly;
pub mod preservers;
pub mod report;
pub mod space;
pub mod stabcheck;
pub mod symmat;
pub mod text;
pub mod univariate;

pub use error::{CombinatError, ParseError, PolyError, PreserverError, StabError, SymError};
pub use poly::{ExponentVector, Polynomial, Weights};
pub use space::Space;
pub use stabcheck::{ConeSpec, FalsifierConfig, StabilityVerdict};
pub use symmat::SymVarSpace;
pub use univariate::UnivariatePoly;
