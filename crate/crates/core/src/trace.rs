//! Proof traces: ordered derivation steps tagged with the proposition
//! they instantiate, each carrying exact witness values.
//!
//! Traces serialize two ways: a line-oriented text form
//! `TAG | statement | witnesses` and a JSON document with one object per
//! step, which is what the CLI emits in structured mode.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;
use crate::integers::Natural;
use crate::ratio::Ratio;
use crate::surd::Surd;

/// The closed set of derivation tags a trace step may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepTag {
    /// Elements VII.13: the terms of a proportion may be alternated.
    Vii13,
    /// Elements VII.20: the least pair in a ratio divides every pair in
    /// that ratio, the same number of times.
    Vii20,
    /// Elements VII.22: numbers prime to one another are the least of
    /// those having their ratio.
    Vii22,
    /// Elements VII.24: if two numbers are coprime, so are their squares.
    Vii24,
    /// Elements X.9: commensurable in length iff the squares are as a
    /// square number to a square number.
    X9,
    /// The root-of-an-integer statement itself.
    PropA,
    /// The integer-root variant: sqrt(n) is an integer iff n is a square.
    PropAPrime,
    /// The bridge lemma: a reduced fraction whose square is an integer
    /// has denominator 1.
    Integrality,
    /// The split of the integers into squares and oblongs.
    Dichotomy,
}

impl StepTag {
    pub const ALL: [StepTag; 9] = [
        StepTag::Vii13,
        StepTag::Vii20,
        StepTag::Vii22,
        StepTag::Vii24,
        StepTag::X9,
        StepTag::PropA,
        StepTag::PropAPrime,
        StepTag::Integrality,
        StepTag::Dichotomy,
    ];

    pub fn label(self) -> &'static str {
        match self {
            StepTag::Vii13 => "VII.13",
            StepTag::Vii20 => "VII.20",
            StepTag::Vii22 => "VII.22",
            StepTag::Vii24 => "VII.24",
            StepTag::X9 => "X.9",
            StepTag::PropA => "PROP-A",
            StepTag::PropAPrime => "PROP-A'",
            StepTag::Integrality => "INTEGRALITY",
            StepTag::Dichotomy => "DICHOTOMY",
        }
    }
}

impl fmt::Display for StepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for StepTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StepTag::ALL
            .into_iter()
            .find(|tag| tag.label() == s)
            .ok_or_else(|| Error::ParseTag { input: s.to_owned() })
    }
}

/// An exact value attached to a trace step. Never a float.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Natural(Natural),
    Ratio(Ratio),
    Surd(Surd),
}

impl Witness {
    fn kind(&self) -> &'static str {
        match self {
            Witness::Natural(_) => "natural",
            Witness::Ratio(_) => "ratio",
            Witness::Surd(_) => "surd",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Natural(n) => write!(f, "{n}"),
            Witness::Ratio(r) => write!(f, "{r}"),
            Witness::Surd(s) => write!(f, "{s}"),
        }
    }
}

impl From<Natural> for Witness {
    fn from(n: Natural) -> Self {
        Witness::Natural(n)
    }
}

impl From<Ratio> for Witness {
    fn from(r: Ratio) -> Self {
        Witness::Ratio(r)
    }
}

impl From<Surd> for Witness {
    fn from(s: Surd) -> Self {
        Witness::Surd(s)
    }
}

/// One derivation step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub tag: StepTag,
    pub statement: String,
    pub witnesses: Vec<Witness>,
}

impl TraceStep {
    pub fn new(tag: StepTag, statement: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        TraceStep { tag, statement: statement.into(), witnesses }
    }

    fn to_json(&self) -> Value {
        json!({
            "tag": self.tag.label(),
            "statement": self.statement,
            "witnesses": self
                .witnesses
                .iter()
                .map(|w| json!({ "kind": w.kind(), "value": w.to_string() }))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let witnesses = self
            .witnesses
            .iter()
            .map(Witness::to_string)
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{} | {} | {}", self.tag, self.statement, witnesses)
    }
}

/// An ordered, non-empty list of derivation steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    steps: Vec<TraceStep>,
}

impl ProofTrace {
    /// Builds a trace, rejecting the empty step list.
    pub fn new(steps: Vec<TraceStep>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::EmptyTrace);
        }
        Ok(ProofTrace { steps })
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn contains_tag(&self, tag: StepTag) -> bool {
        self.steps.iter().any(|step| step.tag == tag)
    }

    /// Line-oriented text form, one `TAG | statement | witnesses` per step.
    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(TraceStep::to_string)
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// JSON array with one object per step; witness values are carried
    /// as their exact text forms.
    pub fn to_json(&self) -> Value {
        Value::Array(self.steps.iter().map(TraceStep::to_json).collect())
    }
}
