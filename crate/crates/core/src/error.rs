use thiserror::Error;

/// Errors reported by the library.
///
/// Most operations are total on their domain; the variants here cover
/// precondition violations, invariant checks that are deliberately loud,
/// malformed figures, and text parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Zero is rejected everywhere: the arithmetic here has no zero.
    #[error("zero is not admitted as a number here")]
    Zero,

    /// `alternate` was called on four numbers that do not form a proportion.
    #[error("not a proportion: {a}:{b} is not the same ratio as {c}:{d}")]
    NotAProportion { a: String, b: String, c: String, d: String },

    /// The integrality lemma requires its inputs to be coprime.
    #[error("precondition violated: gcd({m}, {n}) = {gcd} != 1")]
    NotCoprime { m: String, n: String, gcd: String },

    /// Squaring a reduced ratio produced parts with a common factor.
    /// This cannot happen for correct arithmetic; the check is built in
    /// so a failure would be loud.
    #[error("invariant violated: gcd({num}^2, {den}^2) = {gcd} != 1 after squaring a reduced ratio")]
    SquaresShareFactor { num: String, den: String, gcd: String },

    /// A certification request asserted an equality that does not hold.
    #[error("claim false: {lhs} != {rhs}")]
    ClaimFalse { lhs: String, rhs: String },

    /// A proof trace must contain at least one step.
    #[error("proof trace has no steps")]
    EmptyTrace,

    /// A segment, circle, or claim references a point label that is not
    /// defined in the figure.
    #[error("figure references undefined point label {label:?}")]
    UnknownLabel { label: String },

    /// Two coordinates mix distinct radical kernels; their exact
    /// combination is outside the supported coordinate field.
    #[error("coordinates mix distinct kernels \u{221a}{left} and \u{221a}{right}")]
    MixedKernels { left: String, right: String },

    /// A squared length came out irrational, so the claimed relation is
    /// not decidable in rational arithmetic.
    #[error("squared length of segment {a}{b} is not rational")]
    IrrationalSquaredLength { a: String, b: String },

    /// Two points of a claimed segment coincide.
    #[error("segment {a}{b} is degenerate")]
    DegenerateSegment { a: String, b: String },

    /// Text did not parse as a natural number (>= 1).
    #[error("cannot parse {input:?} as a positive integer")]
    ParseNatural { input: String },

    /// Text did not parse as a ratio `p/q`.
    #[error("cannot parse {input:?} as a ratio")]
    ParseRatio { input: String },

    /// Text did not parse as a surd `(p/q)\u{b7}\u{221a}k`.
    #[error("cannot parse {input:?} as a surd")]
    ParseSurd { input: String },

    /// Text is not a recognized proposition tag.
    #[error("unknown proposition tag {input:?}")]
    ParseTag { input: String },
}
