//! Exact arithmetic for quadratic surds and Euclidean ratio theory.
//!
//! The crate decides, in exact arbitrary-precision arithmetic and with
//! no floating point anywhere near a verdict:
//!
//! * whether the square root of an integer or of a ratio is rational
//!   ([`propositions::prop_a_decide`], [`propositions::prop_b_decide`]),
//!   with proof traces walking the Elements Book VII chain
//!   (VII.13, VII.20, VII.22, VII.24) and the X.9 criterion;
//! * whether two quadratic surds are commensurable
//!   ([`surd::commensurable`]), reporting the exact quotient or the
//!   exact ratio of their squares;
//! * the square/oblong dichotomy of the integers and its rectangle
//!   representations ([`integers`]);
//! * the geometric-mean construction that squares a rectangle, with
//!   every length relation verified exactly and rendered to SVG
//!   ([`construction`], [`svg`]).
//!
//! The types are deliberate about what they are not: a [`Ratio`] is a
//! relation in lowest terms, not a number, and a [`Surd`] is a positive
//! canonical `(p/q)\u{b7}\u{221a}k`, so rationality and commensurability are
//! structural properties rather than numeric approximations.

pub mod construction;
pub mod error;
pub mod integers;
pub mod propositions;
pub mod ratio;
pub mod surd;
pub mod svg;
pub mod trace;

pub use construction::{Coord, Figure, LengthClaim, Point};
pub use error::Error;
pub use integers::{IntegerClass, Natural, RectRep, SquarefreeDecomposition};
pub use propositions::{GapWitness, LessonEntry, LessonReport, LessonVerdict, RootVerdict};
pub use ratio::Ratio;
pub use surd::{CommensurabilityResult, Surd};
pub use trace::{ProofTrace, StepTag, TraceStep, Witness};
