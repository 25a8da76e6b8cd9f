//! Decision procedures and invariants for S-gap shifts.
//!
//! An S-gap shift `X(S)` is the binary subshift in which every maximal run of
//! `0`s between two `1`s has a length belonging to a fixed set `S ⊆ ℕ₀`.
//! This crate works with finitely representable gap sets ([`GapSet`]) and
//! provides:
//!
//! - [`gapset`]: parsing, canonical forms and the dynamical classification
//!   (finite type, sofic, almost finite type, periodic finite type, mixing,
//!   almost specification) together with the conjugacy criterion.
//! - [`language`]: word-level ground truth. Admissibility, block counts,
//!   periodic-point enumeration, zeta functions and sliding block codes.
//! - [`cover`]: residual sets, the minimal right-resolving presentation,
//!   closing delays, period classes and spectral radius.
//! - [`entropy`]: the gap equation, exact entropy for sofic gap sets and
//!   monotone bounds for sampled families.
//! - [`cfrac`]: exact continued fractions and the correspondence between gap
//!   sets and nonnegative reals.
//!
//! Numerical routines are generic over [`Scalar`] (`f32` or `f64`); exact
//! arithmetic uses [`Rational`] and [`QuadraticSurd`].

// `!(x > y)` is deliberate: NaN has to fail the range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cfrac;
pub mod cover;
pub mod entropy;
mod error;
pub mod gapset;
pub mod language;
mod scalar;

pub use cfrac::{CFNumber, ExactReal, QuadraticSurd};
pub use cover::LabeledGraph;
pub use error::{Error, Result};
pub use gapset::{Classification, GapSet, Verdict};
pub use language::{SlidingBlockCode, Word, ZetaData};
pub use scalar::Scalar;

/// Elements of a gap set and lengths of zero runs.
pub type Gap = u64;

/// Exact rationals used by the continued-fraction layer.
pub type Rational = num_rational::Ratio<i128>;

/// Double-precision entropy result, the default used by the CLI.
pub type Entropy64 = entropy::Entropy<f64>;

/// Single-precision entropy result.
pub type Entropy32 = entropy::Entropy<f32>;

/// Double-precision entropy bracket for sampled gap sets.
pub type EntropyBounds64 = entropy::EntropyBounds<f64>;
