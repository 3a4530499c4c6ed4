//! The surd-expression grammar accepted on the command line:
//! `sqrt N`, `sqrt P/Q`, or `(P/Q)*sqrt(K)` (the canonical rendering
//! `(p/q)\u{b7}\u{221a}k` is accepted too).

use dunamis::integers::Natural;
use dunamis::ratio::Ratio;
use dunamis::surd::Surd;

/// A square-root request, keeping the integer/ratio distinction: they
/// are decided by different statements and carry different traces.
pub enum SqrtExpr {
    Integer(Natural),
    Ratio(Ratio),
}

impl SqrtExpr {
    pub fn to_surd(&self) -> Surd {
        match self {
            SqrtExpr::Integer(n) => Surd::sqrt_of_integer(n),
            SqrtExpr::Ratio(r) => Surd::sqrt_of_ratio(r),
        }
    }
}

/// Parses `sqrt N` or `sqrt P/Q`.
pub fn parse_sqrt_expr(text: &str) -> Result<SqrtExpr, String> {
    let bad = || format!("cannot parse {text:?}: expected `sqrt N` or `sqrt P/Q`");
    let rest = text.trim().strip_prefix("sqrt").ok_or_else(bad)?;
    if !rest.starts_with(char::is_whitespace) {
        return Err(bad());
    }
    let body = rest.trim();
    if body.contains('/') {
        let ratio: Ratio = body.parse().map_err(|_| bad())?;
        Ok(SqrtExpr::Ratio(ratio))
    } else {
        let n: Natural = body.parse().map_err(|_| bad())?;
        Ok(SqrtExpr::Integer(n))
    }
}

/// Parses any surd expression: the `sqrt` forms or a coefficient form
/// `(P/Q)*sqrt(K)`.
pub fn parse_surd_expr(text: &str) -> Result<Surd, String> {
    if let Ok(expr) = parse_sqrt_expr(text) {
        return Ok(expr.to_surd());
    }
    text.trim().parse::<Surd>().map_err(|_| {
        format!("cannot parse {text:?}: expected `sqrt N`, `sqrt P/Q`, or `(P/Q)*sqrt(K)`")
    })
}
