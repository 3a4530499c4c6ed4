//! Command-line front end: classification, rationality and
//! commensurability decisions, the lesson report, constructions, and the
//! oracle agreement check.
//!
//! Exit codes are a stable contract: 0 for an affirmative verdict,
//! 1 for a negative verdict, 2 for input errors, 3 for I/O errors.

mod expr;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dunamis::construction::{square_the_rectangle, verify_figure};
use dunamis::integers::{
    classify, factorize, isqrt, rectangle_representations, IntegerClass, Natural,
};
use dunamis::propositions::{
    prop_a_decide, prop_b_decide, theodorus_lesson, LessonVerdict, RootVerdict,
};
use dunamis::ratio::Ratio;
use dunamis::surd::{commensurable, CommensurabilityResult, Surd};
use dunamis::svg::figure_to_svg;
use dunamis::ProofTrace;

use expr::{parse_sqrt_expr, parse_surd_expr, SqrtExpr};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dunamis",
    version,
    about = "Exact decisions about square roots: rationality, commensurability, and the constructions behind them",
    after_help = "surd expressions: `sqrt N`, `sqrt P/Q`, or `(P/Q)*sqrt(K)`; exact values print as `(p/q)\u{b7}\u{221a}k`\nexit codes: 0 affirmative verdict, 1 negative verdict, 2 input error, 3 I/O error"
)]
struct Cli {
    /// Output format: human-readable text or a machine-readable JSON document
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Include the proof trace in the output
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an integer as square or oblong, with all its rectangle
    /// representations
    Classify {
        /// A positive integer
        n: String,
    },
    /// Decide whether a square root is rational: `decide sqrt N` or
    /// `decide sqrt P/Q`
    Decide {
        /// Expression words, e.g. `sqrt 18/8`
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
    },
    /// Decide whether two surds are commensurable
    Commensurable {
        /// Left surd expression, e.g. "sqrt 18"
        left: String,
        /// Right surd expression, e.g. "sqrt 8"
        right: String,
    },
    /// Print the lesson report: the odd integers from 3 up to 17
    /// (excluded), each root judged rational or a power
    Lesson,
    /// Build the squaring of the 1\u{d7}n rectangle, verify it exactly, and
    /// write it as SVG
    Construct {
        /// A positive integer
        n: String,
        /// Output path for the SVG document
        #[arg(short, long)]
        out: PathBuf,
        /// Rendering scale in units per unit length (rendering only;
        /// exact values are untouched)
        #[arg(long, default_value_t = 60.0)]
        scale: f64,
    },
    /// Check the three-way rationality oracle agreement over 1..=limit
    OracleCheck {
        /// Upper bound of the checked range
        limit: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { format: cli.format, trace: cli.trace };
    let code = match cli.command {
        Command::Classify { n } => cmd_classify(&n, &out),
        Command::Decide { expr } => cmd_decide(&expr.join(" "), &out),
        Command::Commensurable { left, right } => cmd_commensurable(&left, &right, &out),
        Command::Lesson => cmd_lesson(&out),
        Command::Construct { n, out: path, scale } => cmd_construct(&n, &path, scale, &out),
        Command::OracleCheck { limit } => cmd_oracle_check(&limit, &out),
    };
    ExitCode::from(code)
}

struct Output {
    format: Format,
    trace: bool,
}

impl Output {
    fn structured(&self) -> bool {
        self.format == Format::Structured
    }

    fn emit_json(&self, value: Value) {
        println!("{value}");
    }
}

fn input_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    eprintln!("usage: run `dunamis --help` for the accepted forms");
    EXIT_INPUT
}

/// Ratios with denominator 1 print as plain integers in text output;
/// structured output keeps the canonical `p/q`.
fn pretty_ratio(r: &Ratio) -> String {
    if r.is_integral() {
        r.num().to_string()
    } else {
        r.to_string()
    }
}

fn pretty_surd(s: &Surd) -> String {
    match s.rational_value() {
        Some(r) => pretty_ratio(&r),
        None => s.to_string(),
    }
}

fn print_trace_text(trace: &ProofTrace) {
    println!("trace:");
    for line in trace.to_text().lines() {
        println!("  {line}");
    }
}

fn cmd_classify(n_text: &str, out: &Output) -> u8 {
    let n: Natural = match n_text.parse() {
        Ok(n) => n,
        Err(_) => return input_error(&format!("{n_text:?} is not a positive integer")),
    };
    let class = classify(&n);
    let reps = rectangle_representations(&n);
    let membership = if matches!(class, IntegerClass::Square { .. }) { "P" } else { "R" };

    if out.structured() {
        let class_json = match &class {
            IntegerClass::Square { side } => json!({ "kind": "square", "side": side.to_string() }),
            IntegerClass::Oblong { small, large } => json!({
                "kind": "oblong",
                "small": small.to_string(),
                "large": large.to_string(),
            }),
        };
        out.emit_json(json!({
            "command": "classify",
            "n": n.to_string(),
            "class": class_json,
            "membership": membership,
            "representations": reps
                .iter()
                .map(|r| json!([r.a.to_string(), r.b.to_string()]))
                .collect::<Vec<_>>(),
        }));
    } else {
        println!("n: {n}");
        println!("class: {class}");
        let listed = reps
            .iter()
            .map(|r| format!("{}\u{d7}{}", r.a, r.b))
            .collect::<Vec<_>>()
            .join(", ");
        println!("representations: {listed}");
        println!("membership: {membership}");
    }
    EXIT_OK
}

fn cmd_decide(expr_text: &str, out: &Output) -> u8 {
    let expr = match parse_sqrt_expr(expr_text) {
        Ok(expr) => expr,
        Err(message) => return input_error(&message),
    };
    let (verdict, trace) = match &expr {
        SqrtExpr::Integer(n) => prop_a_decide(n),
        SqrtExpr::Ratio(r) => prop_b_decide(r),
    };
    let value = expr.to_surd();

    if out.structured() {
        let mut doc = json!({
            "command": "decide",
            "expression": expr_text,
            "verdict": match &verdict {
                RootVerdict::Rational(_) => "rational",
                RootVerdict::Irrational => "irrational",
            },
            "value": value.to_string(),
        });
        if let RootVerdict::Rational(root) = &verdict {
            doc["root"] = Value::String(root.to_string());
        }
        if out.trace {
            doc["trace"] = trace.to_json();
        }
        out.emit_json(doc);
    } else {
        println!("expression: {expr_text}");
        match &verdict {
            RootVerdict::Rational(root) => {
                println!("verdict: rational {}", pretty_ratio(root));
            }
            RootVerdict::Irrational => {
                println!("verdict: irrational");
                println!("value: {value}");
            }
        }
        if out.trace {
            print_trace_text(&trace);
        }
    }
    match verdict {
        RootVerdict::Rational(_) => EXIT_OK,
        RootVerdict::Irrational => EXIT_NEGATIVE,
    }
}

fn cmd_commensurable(left_text: &str, right_text: &str, out: &Output) -> u8 {
    let left = match parse_surd_expr(left_text) {
        Ok(s) => s,
        Err(message) => return input_error(&message),
    };
    let right = match parse_surd_expr(right_text) {
        Ok(s) => s,
        Err(message) => return input_error(&message),
    };
    let outcome = commensurable(&left, &right);

    if out.structured() {
        let mut doc = json!({
            "command": "commensurable",
            "left": left.to_string(),
            "right": right.to_string(),
        });
        match &outcome {
            CommensurabilityResult::Commensurable { ratio } => {
                doc["verdict"] = Value::String("commensurable".into());
                doc["ratio"] = Value::String(ratio.to_string());
            }
            CommensurabilityResult::Incommensurable { square_ratio } => {
                doc["verdict"] = Value::String("incommensurable".into());
                doc["square-ratio"] = Value::String(square_ratio.to_string());
            }
        }
        out.emit_json(doc);
    } else {
        println!("left: {left}");
        println!("right: {right}");
        match &outcome {
            CommensurabilityResult::Commensurable { ratio } => {
                println!("verdict: commensurable {ratio}");
            }
            CommensurabilityResult::Incommensurable { square_ratio } => {
                println!("verdict: incommensurable");
                println!("square-ratio: {square_ratio}");
            }
        }
    }
    match outcome {
        CommensurabilityResult::Commensurable { .. } => EXIT_OK,
        CommensurabilityResult::Incommensurable { .. } => EXIT_NEGATIVE,
    }
}

fn cmd_lesson(out: &Output) -> u8 {
    let report = theodorus_lesson();
    if out.structured() {
        out.emit_json(json!({
            "command": "lesson",
            "entries": report
                .entries
                .iter()
                .map(|entry| match &entry.verdict {
                    LessonVerdict::Rational { root } => json!({
                        "n": entry.n.to_string(),
                        "verdict": "rational",
                        "root": root.to_string(),
                    }),
                    LessonVerdict::Power { surd } => json!({
                        "n": entry.n.to_string(),
                        "verdict": "power",
                        "value": surd.to_string(),
                    }),
                })
                .collect::<Vec<_>>(),
        }));
    } else {
        for entry in &report.entries {
            match &entry.verdict {
                LessonVerdict::Rational { root } => {
                    println!("{:>2}  rational {root}", entry.n.to_string());
                }
                LessonVerdict::Power { surd } => {
                    println!("{:>2}  power {surd}", entry.n.to_string());
                }
            }
        }
    }
    EXIT_OK
}

fn cmd_construct(n_text: &str, path: &Path, scale: f64, out: &Output) -> u8 {
    let n: Natural = match n_text.parse() {
        Ok(n) => n,
        Err(_) => return input_error(&format!("{n_text:?} is not a positive integer")),
    };
    if !(scale.is_finite() && scale > 0.0) {
        return input_error("scale must be a positive number");
    }

    let figure = square_the_rectangle(&n);
    match verify_figure(&figure) {
        Ok(true) => {}
        other => {
            eprintln!("error: constructed figure failed verification: {other:?}");
            return EXIT_NEGATIVE;
        }
    }
    let side = figure
        .segment_length("H", "D")
        .expect("verified figure has its mean segment");

    let svg = figure_to_svg(&figure, scale);
    if let Err(e) = std::fs::write(path, svg) {
        eprintln!("error: cannot write {}: {e}", path.display());
        return EXIT_IO;
    }

    if out.structured() {
        out.emit_json(json!({
            "command": "construct",
            "n": n.to_string(),
            "side": side.to_string(),
            "path": path.display().to_string(),
        }));
    } else {
        println!("side: {}", pretty_surd(&side));
        println!("written: {}", path.display());
    }
    EXIT_OK
}

fn cmd_oracle_check(limit_text: &str, out: &Output) -> u8 {
    let limit: Natural = match limit_text.parse() {
        Ok(n) => n,
        Err(_) => return input_error(&format!("{limit_text:?} is not a positive integer")),
    };

    let started = Instant::now();
    let one = Natural::one();
    let mut mismatches = 0u64;
    let mut checked = 0u64;
    let mut n = Natural::one();
    while n <= limit {
        let by_kernel = Surd::sqrt_of_integer(&n).kernel().is_one();
        let by_isqrt = isqrt(&n).1;
        let by_parity = factorize(&n).iter().all(|(_, e)| e % 2 == 0);
        if by_kernel != by_isqrt || by_isqrt != by_parity {
            mismatches += 1;
        }
        checked += 1;
        n = &n + &one;
    }
    let elapsed = started.elapsed();

    if out.structured() {
        out.emit_json(json!({
            "command": "oracle-check",
            "limit": limit.to_string(),
            "checked": checked,
            "mismatches": mismatches,
        }));
    } else {
        println!("checked: {checked}");
        println!("mismatches: {mismatches}");
        println!("elapsed: {elapsed:?}");
    }
    if mismatches == 0 { EXIT_OK } else { EXIT_NEGATIVE }
}
