//! Exact-arithmetic toolkit for affine-descent shuffle measures on Weyl
//! groups of types A and C, and for the map from semisimple conjugacy
//! classes of the corresponding finite matrix groups to Weyl-group
//! conjugacy classes via polynomial factorization over finite fields.
//!
//! Everything on the verification path is computed over arbitrary-precision
//! rationals; the only floating point in the crate is the clearly flagged
//! exploratory spectrum report in [`cellini`].
//!
//! Module layout:
//!
//! - [`numtheory`]: Ramanujan sums, Von Sterneck counts, q-binomials,
//!   restricted partition and necklace counts.
//! - [`weyl`]: permutations and signed permutations with descent, cyclic
//!   descent and cycle statistics.
//! - [`root_datum`]: root systems of types A and C and the lattice-point
//!   counts behind the shuffle measures.
//! - [`cellini`]: the probability elements `x_k`, their closed forms,
//!   convolution, class pushforward and the left-multiplication matrix.
//! - [`finite_field`]: small finite fields, polynomial factorization, the
//!   two involutions and the counting lemmas.
//! - [`ss_classes`]: semisimple class enumeration for SL/Sp and the map to
//!   Weyl-group class labels.
//! - [`shuffles`]: physical shuffle models, the standardization map and
//!   necklace bijection, unimodal permutations and the eta map.
//! - [`affine`]: F-stable alcove points and the element-level refinement of
//!   the class map.
//! - [`harness`]: reproducible verification reports and the suite runner.

pub mod affine;
pub mod cellini;
mod error;
pub mod finite_field;
pub mod harness;
pub mod numtheory;
pub mod rational;
pub mod root_datum;
pub mod shuffles;
pub mod ss_classes;
pub mod weyl;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
