//! Euclidean ratio theory over the naturals.
//!
//! A [`Ratio`] is a relation between two numbers, not a number: it is
//! stored as the least pair with that relation and no arithmetic with
//! plain integers is exposed. The operations here are the Book VII
//! fragment the crate needs: reduction to the minimal pair, the
//! same-ratio test, alternation, the VII.20 divisibility property, and
//! squaring with its coprimality check built in.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::integers::{gcd, is_perfect_square, Natural};

/// A ratio of naturals in lowest terms.
///
/// Invariant: `gcd(num, den) = 1`, enforced by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: Natural,
    den: Natural,
}

impl Ratio {
    /// Reduces `a : b` to the least pair in the same ratio.
    ///
    /// The returned parts divide `a` and `b` with a common quotient,
    /// which is the VII.20 property made concrete (see [`vii20_divides`]).
    pub fn new(a: Natural, b: Natural) -> Ratio {
        let g = gcd(&a, &b);
        Ratio {
            num: a.exact_div(&g).expect("gcd divides a"),
            den: b.exact_div(&g).expect("gcd divides b"),
        }
    }

    /// The unit ratio `1/1`.
    pub fn unit() -> Ratio {
        Ratio { num: Natural::one(), den: Natural::one() }
    }

    pub fn from_natural(n: Natural) -> Ratio {
        Ratio { num: n, den: Natural::one() }
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    pub fn is_unit(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True iff the ratio is a whole number, i.e. the denominator is 1.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Squares the ratio part by part.
    ///
    /// The result is *not* re-reduced. Squares of coprime numbers are
    /// again coprime (Elements VII.24, Gauss's lemma); the method checks
    /// that and reports a violation as an error instead of silently
    /// normalizing, so an arithmetic bug here would be loud.
    pub fn square(&self) -> Result<Ratio, Error> {
        let num = self.num.square();
        let den = self.den.square();
        let g = gcd(&num, &den);
        if !g.is_one() {
            return Err(Error::SquaresShareFactor {
                num: self.num.to_string(),
                den: self.den.to_string(),
                gcd: g.to_string(),
            });
        }
        Ok(Ratio { num, den })
    }

    pub fn mul(&self, other: &Ratio) -> Ratio {
        Ratio::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Ratio) -> Ratio {
        Ratio::new(&self.num * &other.den, &self.den * &other.num)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Parses `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseRatio { input: s.to_owned() };
        let t = s.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let num: Natural = p.parse().map_err(|_| bad())?;
                let den: Natural = q.parse().map_err(|_| bad())?;
                Ok(Ratio::new(num, den))
            }
            None => {
                let num: Natural = t.parse().map_err(|_| bad())?;
                Ok(Ratio::from_natural(num))
            }
        }
    }
}

/// Same-ratio test: `a : b :: c : d` iff `a*d = b*c`.
///
/// Cross-multiplication realizes Euclid's definition VII def. 20 ("the
/// same multiple, the same part, or the same parts"); for naturals the
/// two are equivalent, and cross-multiplication is total and exact.
pub fn same_ratio(a: &Natural, b: &Natural, c: &Natural, d: &Natural) -> bool {
    a * d == b * c
}

/// Alternation (Elements VII.13): from `a : b :: c : d` conclude
/// `a : c :: b : d`.
///
/// Calling this on four numbers that are not in proportion is a
/// precondition violation and reported as an error.
pub fn alternate(a: &Natural, b: &Natural, c: &Natural, d: &Natural) -> Result<bool, Error> {
    if !same_ratio(a, b, c, d) {
        return Err(Error::NotAProportion {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            d: d.to_string(),
        });
    }
    Ok(same_ratio(a, c, b, d))
}

/// The VII.20 divisibility property: with `(m, n)` the least pair in the
/// ratio `a : b`, the least parts measure `a` and `b` the same number of
/// times. Returns that common quotient `q`, so `a = q*m` and `b = q*n`.
pub fn vii20_divides(a: &Natural, b: &Natural) -> Natural {
    let reduced = Ratio::new(a.clone(), b.clone());
    let q = a
        .exact_div(reduced.num())
        .expect("the reduced numerator divides a");
    debug_assert_eq!(&q * reduced.den(), *b);
    q
}

/// True iff `a : b` is the ratio of a square number to a square number,
/// i.e. both parts of the reduced pair are perfect squares.
pub fn is_square_to_square(a: &Natural, b: &Natural) -> bool {
    let reduced = Ratio::new(a.clone(), b.clone());
    is_perfect_square(reduced.num()) && is_perfect_square(reduced.den())
}
