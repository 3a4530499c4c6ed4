//! Arbitrary-size natural numbers and the square/oblong dichotomy.
//!
//! Everything here works on integers >= 1: the unit counts as a number,
//! zero and negatives do not exist. [`Natural`] enforces that at every
//! constructor, so the operations in this module are total.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num::{BigUint, One, Zero};

use crate::error::Error;

/// A positive integer of arbitrary size.
///
/// The invariant `value >= 1` is checked on every constructor path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    /// Wraps a big integer, rejecting zero.
    pub fn new(value: BigUint) -> Result<Self, Error> {
        if value.is_zero() {
            Err(Error::Zero)
        } else {
            Ok(Natural(value))
        }
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// The underlying magnitude.
    pub fn magnitude(&self) -> &BigUint {
        &self.0
    }

    pub fn square(&self) -> Natural {
        Natural(&self.0 * &self.0)
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Natural) -> Option<Natural> {
        let (q, r) = num::Integer::div_rem(&self.0, &divisor.0);
        if r.is_zero() {
            Some(Natural(q))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Natural) -> bool {
        (&other.0 % &self.0).is_zero()
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self, Error> {
        Natural::new(BigUint::from(value))
    }
}

impl Mul for &Natural {
    type Output = Natural;

    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl Add for &Natural {
    type Output = Natural;

    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let digits: BigUint = s.trim().parse().map_err(|_| Error::ParseNatural {
            input: s.to_owned(),
        })?;
        Natural::new(digits).map_err(|_| Error::ParseNatural {
            input: s.to_owned(),
        })
    }
}

/// The dichotomy of the integers: squares and oblongs.
///
/// A square integer is the product of an equal side by itself; every other
/// integer is encompassed by a greater and a less side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerClass {
    Square { side: Natural },
    Oblong { small: Natural, large: Natural },
}

impl fmt::Display for IntegerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegerClass::Square { side } => write!(f, "square side {side}"),
            IntegerClass::Oblong { small, large } => write!(f, "oblong {small}\u{d7}{large}"),
        }
    }
}

/// One rectangle with integer sides `a <= b` whose area is the represented
/// integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectRep {
    pub a: Natural,
    pub b: Natural,
}

/// The decomposition `n = square_part^2 * kernel` with `kernel` squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub square_part: Natural,
    pub kernel: Natural,
}

/// Integer square root: returns `(root, exact)` with
/// `root^2 <= n < (root + 1)^2` and `exact` iff `root^2 = n`.
///
/// Newton iteration starting from a power of two above the root; the loop
/// is strictly decreasing until it crosses the floor.
pub fn isqrt(n: &Natural) -> (Natural, bool) {
    let value = n.magnitude();
    let mut x: BigUint = BigUint::one() << value.bits().div_ceil(2);
    loop {
        let y: BigUint = (&x + value / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    let exact = &x * &x == *value;
    let root = Natural::new(x).expect("floor sqrt of a positive integer is positive");
    (root, exact)
}

/// True iff `n = p^2` for some integer `p`.
pub fn is_perfect_square(n: &Natural) -> bool {
    isqrt(n).1
}

/// Classifies `n` as a square or an oblong integer.
///
/// The oblong witness is the divisor pair minimizing `b - a`, the most
/// nearly square rectangle; primes get the unit-sided rectangle `(1, n)`.
pub fn classify(n: &Natural) -> IntegerClass {
    let (root, exact) = isqrt(n);
    if exact {
        return IntegerClass::Square { side: root };
    }
    let mut d = root.magnitude().clone();
    while !(n.magnitude() % &d).is_zero() {
        d -= BigUint::one();
    }
    let small = Natural::new(d).expect("1 divides everything, so the scan stops above zero");
    let large = n
        .exact_div(&small)
        .expect("scan stopped on a divisor");
    IntegerClass::Oblong { small, large }
}

/// All rectangles `(a, b)` with `a <= b` and `a * b = n`, sorted by `a`.
pub fn rectangle_representations(n: &Natural) -> Vec<RectRep> {
    let (root, _) = isqrt(n);
    let mut out = Vec::new();
    let mut d = BigUint::one();
    while d <= *root.magnitude() {
        if (n.magnitude() % &d).is_zero() {
            let a = Natural::new(d.clone()).expect("d >= 1");
            let b = n.exact_div(&a).expect("d divides n");
            out.push(RectRep { a, b });
        }
        d += BigUint::one();
    }
    out
}

/// Greatest common divisor by the Euclidean algorithm.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    let mut x = a.magnitude().clone();
    let mut y = b.magnitude().clone();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    Natural::new(x).expect("gcd of positive integers is positive")
}

/// Prime factorization by trial division, sorted by prime.
///
/// `n = 1` yields the empty product. This is the arithmetic oracle the
/// rest of the crate is checked against: unique factorization decides
/// perfect squares by exponent parity.
pub fn factorize(n: &Natural) -> Vec<(Natural, u32)> {
    let mut m = n.magnitude().clone();
    let mut out = Vec::new();
    let mut push = |p: BigUint, e: u32| {
        out.push((Natural::new(p).expect("prime factor is positive"), e));
    };

    let two = BigUint::from(2u32);
    let mut e = 0u32;
    while (&m % &two).is_zero() {
        m /= &two;
        e += 1;
    }
    if e > 0 {
        push(two.clone(), e);
    }

    let mut d = BigUint::from(3u32);
    while &d * &d <= m {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            push(d.clone(), e);
        }
        d += &two;
    }
    if !m.is_one() {
        push(m, 1);
    }
    out
}

/// Splits `n` as `square_part^2 * kernel` with `kernel` squarefree.
///
/// The kernel is what matters: it is `1` exactly for perfect squares and
/// it determines the commensurability class of the square root.
pub fn squarefree_decompose(n: &Natural) -> SquarefreeDecomposition {
    let mut square_part = BigUint::one();
    let mut kernel = BigUint::one();
    for (p, e) in factorize(n) {
        if e / 2 > 0 {
            square_part *= p.magnitude().pow(e / 2);
        }
        if e % 2 == 1 {
            kernel *= p.magnitude();
        }
    }
    SquarefreeDecomposition {
        square_part: Natural::new(square_part).expect("product of positives"),
        kernel: Natural::new(kernel).expect("product of positives"),
    }
}
