//! The lattices `S(n,r)` of canonical strings over a signed alphabet, their
//! Hasse diagrams and rank counts, exact weight functions, and weighted
//! boolean maps with the extremal counts derived from them.
//!
//! Arithmetic on weight values is generic over [`Scalar`], any exact ordered
//! field; [`Rational`] (arbitrary precision) is the default and
//! [`Rational64`] a faster fixed-width alternative for small inputs.

pub mod boolmaps;
pub mod counting;
pub mod error;
pub mod feasibility;
pub mod hasse;
pub mod lattice;
pub mod scalar;
pub mod weights;

pub use boolmaps::{
    analyze, check_axioms, enumerate_wbm, gamma, gamma_d, gamma_tilde, gamma_tilde_d,
    is_representable, psi, wb_vs_rwb_report, Axiom, AxiomReport, BooleanMap, EnumerationLimits,
    GammaReport, Label, LatticeIndex, Representability, Variant,
};
pub use error::{Error, ErrorKind, ParseError, Result, ValidationError};
pub use hasse::{build, GenOrder, HasseDiagram};
pub use lattice::{enumerate, enumerate_d_slice, LatticeParams, Symbol, Word};
pub use scalar::Scalar;
pub use weights::NrFunction;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Rational over `i64`; overflows on large eliminations.
pub type Rational64 = num_rational::Rational64;

/// Weight function with [`Rational`] values.
pub type WeightFunction = NrFunction<Rational>;
