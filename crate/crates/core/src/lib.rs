//! Exact translation between straight-line trajectories on the square torus
//! and their two-letter symbolic codings.
//!
//! Rational slopes correspond to periodic cutting sequences and quadratic
//! irrational slopes to Sturmian prefixes. The crate keeps two independent
//! routes to every answer: an algebraic one built on continued fractions and
//! shear/flip rewriting, and a geometric one that enumerates grid crossings
//! with exact arithmetic. No floating point is used anywhere.
//!
//! - [`rational`], [`surd`], [`cf`]: exact numbers and continued fractions
//! - [`words`]: finite, periodic and streaming two-letter words with the
//!   combinatorics toolkit (factors, complexity, balance, validity)
//! - [`transforms`]: shears, flips and their matrix calculus
//! - [`bridge`]: the slope <-> sequence translation
//! - [`geometry`]: exact billiard simulation, unfolding and crossing
//!   enumeration, the ground truth the algebra is tested against
//! - [`render`]: deterministic SVG figures

#![forbid(unsafe_code)]

pub mod bridge;
pub mod cf;
pub mod error;
pub mod geometry;
pub mod rational;
pub mod render;
pub mod surd;
pub mod transforms;
pub mod words;

pub use cf::ContinuedFraction;
pub use error::{Error, Result};
pub use rational::Rational;
pub use surd::QuadraticSurd;
pub use words::{FiniteWord, Letter, PeriodicWord, WordStream};
