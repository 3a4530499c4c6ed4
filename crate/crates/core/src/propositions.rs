//! Executable theorems with proof traces.
//!
//! Two statements that look interchangeable are kept deliberately apart:
//!
//! * the root-of-an-integer statement ([`prop_a_decide`]): the square
//!   root of an integer is rational iff the integer is a perfect square;
//! * the X.9 statement ([`prop_b_decide`]): the square root of a ratio
//!   is rational iff the ratio is of a square number to a square number.
//!
//! Neither contains the other. What bridges them for integer inputs is
//! the integrality lemma ([`integrality_lemma`]): a reduced fraction
//! whose square is an integer has denominator 1. The traces emitted here
//! make that bridge a visible, testable step.

use crate::error::Error;
use crate::integers::{classify, gcd, is_perfect_square, isqrt, IntegerClass, Natural};
use crate::ratio::{is_square_to_square, Ratio};
use crate::surd::Surd;
use crate::trace::{ProofTrace, StepTag, TraceStep};

/// The numbers of Theodorus's lesson: the odd integers from 3 up to but
/// not including 17. Which numbers the lesson actually covered is
/// disputed; this is the reading implemented here, and an alternative
/// reading is a one-line change.
pub const THEODORUS_LESSON_NUMBERS: [u64; 7] = [3, 5, 7, 9, 11, 13, 15];

/// Outcome of a square-root rationality decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootVerdict {
    Rational(Ratio),
    Irrational,
}

impl RootVerdict {
    pub fn is_rational(&self) -> bool {
        matches!(self, RootVerdict::Rational(_))
    }
}

fn trace(steps: Vec<TraceStep>) -> ProofTrace {
    ProofTrace::new(steps).expect("built with at least one step")
}

/// Decides whether the square root of an integer is rational.
///
/// The verdict follows the dichotomy directly: square integers have an
/// integer root, oblong integers have none, and the trace records why no
/// fractional root can fill the gap.
pub fn prop_a_decide(n: &Natural) -> (RootVerdict, ProofTrace) {
    match classify(n) {
        IntegerClass::Square { side } => {
            let root = Ratio::from_natural(side.clone());
            let steps = vec![
                TraceStep::new(
                    StepTag::Dichotomy,
                    format!("{n} is a square integer: {side} \u{d7} {side}"),
                    vec![n.clone().into(), side.clone().into()],
                ),
                TraceStep::new(
                    StepTag::PropA,
                    format!("\u{221a}{n} = {root} is rational"),
                    vec![root.clone().into()],
                ),
            ];
            (RootVerdict::Rational(root), trace(steps))
        }
        IntegerClass::Oblong { small, large } => {
            let (floor, _) = isqrt(n);
            let steps = vec![
                TraceStep::new(
                    StepTag::Dichotomy,
                    format!("{n} is an oblong integer: {small} \u{d7} {large} with unequal sides"),
                    vec![n.clone().into(), small.into(), large.into()],
                ),
                TraceStep::new(
                    StepTag::Integrality,
                    format!(
                        "{floor}\u{b2} < {n} < {next}\u{b2}, so \u{221a}{n} is no integer; \
                         and a reduced fraction m/q with q > 1 squares to the non-integer \
                         m\u{b2}/q\u{b2}, so no rational root exists",
                        next = Natural::new(floor.magnitude() + 1u32).expect("positive")
                    ),
                    vec![n.clone().into(), floor.into()],
                ),
                TraceStep::new(
                    StepTag::PropA,
                    format!("\u{221a}{n} is irrational"),
                    vec![Surd::sqrt_of_integer(n).into()],
                ),
            ];
            (RootVerdict::Irrational, trace(steps))
        }
    }
}

/// The bridge lemma, executable: for coprime `m, n`, the ratio
/// `m^2 / n^2` is an integer iff `n = 1`.
///
/// The trace walks the Book VII chain: the pair is least in its ratio
/// (VII.22), the squares stay coprime (VII.24), and the least pair of an
/// integer ratio has denominator 1 (VII.20).
pub fn integrality_lemma(m: &Natural, n: &Natural) -> Result<(bool, ProofTrace), Error> {
    let g = gcd(m, n);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            m: m.to_string(),
            n: n.to_string(),
            gcd: g.to_string(),
        });
    }
    let m_sq = m.square();
    let n_sq = n.square();
    let g_sq = gcd(&m_sq, &n_sq);
    if !g_sq.is_one() {
        return Err(Error::SquaresShareFactor {
            num: m.to_string(),
            den: n.to_string(),
            gcd: g_sq.to_string(),
        });
    }

    let verdict = n.is_one();
    let last = if verdict {
        TraceStep::new(
            StepTag::Vii20,
            format!("{m_sq}/{n_sq} in lowest terms is the integer {m_sq}: n\u{b2}=1"),
            vec![m_sq.clone().into(), n_sq.clone().into()],
        )
    } else {
        TraceStep::new(
            StepTag::Vii20,
            format!(
                "{m_sq}/{n_sq} is in lowest terms with n\u{b2} = {n_sq} > 1, \
                 so it is no integer"
            ),
            vec![m_sq.clone().into(), n_sq.clone().into()],
        )
    };
    let steps = vec![
        TraceStep::new(
            StepTag::Vii22,
            format!("{m}/{n} is in lowest terms: the least pair with its ratio"),
            vec![m.clone().into(), n.clone().into()],
        ),
        TraceStep::new(
            StepTag::Vii24,
            format!("squares of coprime numbers are coprime: gcd({m_sq}, {n_sq}) = 1"),
            vec![m_sq.into(), n_sq.into()],
        ),
        last,
    ];
    Ok((verdict, trace(steps)))
}

/// Certifies a true claim `(claim_num / claim_den)^2 = r` by deriving
/// that the reduced denominator is 1 and `r` is the square of the
/// reduced numerator.
///
/// A false claim is rejected with the failing equality
/// (`claim_num^2 != r * claim_den^2`).
pub fn prop_a_certify(
    r: &Natural,
    claim_num: &Natural,
    claim_den: &Natural,
) -> Result<ProofTrace, Error> {
    let lhs = claim_num.square();
    let rhs = r * &claim_den.square();
    if lhs != rhs {
        return Err(Error::ClaimFalse {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    let g = gcd(claim_num, claim_den);
    let reduced = Ratio::new(claim_num.clone(), claim_den.clone());
    let (m, q) = (reduced.num().clone(), reduced.den().clone());
    debug_assert!(q.is_one(), "a true claim reduces to an integer root");
    let m_sq = m.square();
    let q_sq = q.square();

    let steps = vec![
        TraceStep::new(
            StepTag::Vii22,
            format!("the claimed root {claim_num}/{claim_den} reduces to {m}/{q}, dividing both by {g}"),
            vec![m.clone().into(), q.clone().into(), g.into()],
        ),
        TraceStep::new(
            StepTag::Vii24,
            format!("squares of coprime numbers are coprime: gcd({m_sq}, {q_sq}) = 1"),
            vec![m_sq.clone().into(), q_sq.clone().into()],
        ),
        TraceStep::new(
            StepTag::Vii20,
            format!("{r}/1 = {m_sq}/{q_sq} between least pairs, so by minimality r = {m_sq} and q\u{b2} = 1"),
            vec![r.clone().into(), m_sq.into()],
        ),
        TraceStep::new(
            StepTag::PropA,
            format!("{r} = {m}\u{b2} is a perfect square with side {m}"),
            vec![r.clone().into(), m.into()],
        ),
    ];
    Ok(trace(steps))
}

/// Decides whether the square root of a ratio is rational, by the X.9
/// criterion: the ratio must be of a square number to a square number.
///
/// For integral inputs the trace additionally carries the INTEGRALITY
/// step: X.9 on its own speaks of rational roots, and only the
/// integrality lemma turns those into integer conclusions.
pub fn prop_b_decide(r: &Ratio) -> (RootVerdict, ProofTrace) {
    let (num, den) = (r.num(), r.den());
    let square_to_square = is_square_to_square(num, den);

    let mut steps = Vec::new();
    let verdict = if square_to_square {
        let p = isqrt(num).0;
        let q = isqrt(den).0;
        let root = Ratio::new(p, q);
        steps.push(TraceStep::new(
            StepTag::X9,
            format!(
                "{r} is the ratio of the square {num} to the square {den}; \
                 the sides are commensurable: \u{221a}({r}) = {root}"
            ),
            vec![r.clone().into(), root.clone().into()],
        ));
        RootVerdict::Rational(root)
    } else {
        steps.push(TraceStep::new(
            StepTag::X9,
            format!(
                "{r} is not a ratio of a square number to a square number; \
                 the sides are incommensurable and \u{221a}({r}) is irrational"
            ),
            vec![r.clone().into()],
        ));
        RootVerdict::Irrational
    };

    if r.is_integral() {
        let step = match &verdict {
            RootVerdict::Rational(root) => TraceStep::new(
                StepTag::Integrality,
                format!(
                    "for the integer {num} the rational root is forced whole: a reduced \
                     root with denominator > 1 cannot square to an integer, so {root} \
                     has denominator 1"
                ),
                vec![root.clone().into()],
            ),
            RootVerdict::Irrational => TraceStep::new(
                StepTag::Integrality,
                format!(
                    "deciding the integer {num} by its reduced pair leans on the same \
                     lemma: a rational root would be forced whole, and no integer \
                     squares to {num}"
                ),
                vec![num.clone().into()],
            ),
        };
        steps.push(step);
    }

    (verdict, trace(steps))
}

/// The integer-root variant: true iff the square root of `n` is an
/// integer. Coincides with [`is_perfect_square`] by definition; this is
/// the self-evident reading, where the rationality statement is not.
pub fn prop_a_prime(n: &Natural) -> bool {
    isqrt(n).1
}

/// The two conclusions for one integer, side by side, with the lemma
/// that bridges them named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub n: Natural,
    /// What X.9 alone yields for `n/1`: the rational whose square is
    /// `n`, when there is one.
    pub square_of_rational: Option<Ratio>,
    /// What the integer statement yields: is `n` a perfect square?
    pub perfect_square: bool,
    pub report: String,
}

/// Runs both deciders on one integer and reports the two conclusions
/// and the INTEGRALITY bridge between them.
///
/// X.9 concludes only "square of a rational"; it takes the integrality
/// lemma to sharpen that to "perfect square", and the report names that
/// step explicitly.
pub fn gap_witness(n: &Natural) -> GapWitness {
    let as_ratio = Ratio::from_natural(n.clone());
    let (b_verdict, _) = prop_b_decide(&as_ratio);
    let square_of_rational = match b_verdict {
        RootVerdict::Rational(root) => Some(root),
        RootVerdict::Irrational => None,
    };
    let perfect_square = is_perfect_square(n);

    let b_line = match &square_of_rational {
        Some(root) => format!("X.9 on {n}/1: {n} is the square of the rational {root}"),
        None => format!("X.9 on {n}/1: {n} is not the square of any rational"),
    };
    let a_line = if perfect_square {
        format!("integer statement on {n}: {n} is a perfect square")
    } else {
        format!("integer statement on {n}: {n} is not a perfect square")
    };
    let bridge_line = if perfect_square {
        "bridge: INTEGRALITY \u{2014} X.9 yields only a rational root; the integrality \
         lemma (a reduced root of an integer has denominator 1) turns it into the \
         integer conclusion"
    } else {
        "bridge: INTEGRALITY \u{2014} the negative reading leans on the same lemma: a \
         rational root of an integer would be forced whole, and none exists"
    };
    debug_assert_eq!(square_of_rational.is_some(), perfect_square);

    GapWitness {
        n: n.clone(),
        square_of_rational,
        perfect_square,
        report: format!("n = {n}\n{b_line}\n{a_line}\n{bridge_line}"),
    }
}

/// One entry of the lesson report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LessonEntry {
    pub n: Natural,
    pub verdict: LessonVerdict,
}

/// Either a whole root or a power: an irrational side whose square is
/// commensurable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LessonVerdict {
    Rational { root: Natural },
    Power { surd: Surd },
}

/// The lesson report over [`THEODORUS_LESSON_NUMBERS`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LessonReport {
    pub entries: Vec<LessonEntry>,
}

/// Walks the lesson range case by case, the way the lesson itself did.
pub fn theodorus_lesson() -> LessonReport {
    let entries = THEODORUS_LESSON_NUMBERS
        .iter()
        .map(|&value| {
            let n = Natural::try_from(value).expect("lesson numbers are positive");
            let surd = Surd::sqrt_of_integer(&n);
            let verdict = match surd.rational_value() {
                Some(root) => {
                    debug_assert!(root.is_integral());
                    LessonVerdict::Rational { root: root.num().clone() }
                }
                None => LessonVerdict::Power { surd },
            };
            LessonEntry { n, verdict }
        })
        .collect();
    LessonReport { entries }
}

/// Splits `1..=limit` into the perfect squares `P` and the rest `R`.
///
/// The images under square root land in the rationals exactly for `P`:
/// that is the partition the rationality statement formalizes.
pub fn partition_integers(limit: &Natural) -> (Vec<Natural>, Vec<Natural>) {
    let mut squares = Vec::new();
    let mut rest = Vec::new();
    let mut next_root: u64 = 1;
    let mut next_square = num::BigUint::from(1u32);
    let mut i = num::BigUint::from(1u32);
    while i <= *limit.magnitude() {
        let n = Natural::new(i.clone()).expect("i >= 1");
        if i == next_square {
            squares.push(n);
            next_root += 1;
            next_square = num::BigUint::from(next_root) * num::BigUint::from(next_root);
        } else {
            rest.push(n);
        }
        i += 1u32;
    }
    (squares, rest)
}
