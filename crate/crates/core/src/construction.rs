//! Geometric-mean constructions with exact coordinates.
//!
//! The engine reproduces the classical squaring of a rectangle: put the
//! two sides `a` and `b` end to end on a line, draw the semicircle on
//! the whole as diameter, and erect the perpendicular where the sides
//! meet. The perpendicular meets the circle at height `sqrt(a*b)` \u{2014} the
//! altitude relation in the right triangle inscribed in the semicircle.
//!
//! Coordinates are exact values `r + s\u{b7}\u{221a}k` with `r`, `s` rational and
//! `k` squarefree, so every claimed length relation is decided in exact
//! arithmetic on squared lengths; nothing is ever compared through
//! floating point.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::integers::Natural;
use crate::propositions::THEODORUS_LESSON_NUMBERS;
use crate::ratio::Ratio;
use crate::surd::Surd;

fn big(n: &Natural) -> BigInt {
    BigInt::from(n.magnitude().clone())
}

fn rational(r: &Ratio) -> BigRational {
    BigRational::new(big(r.num()), big(r.den()))
}

/// Converts a positive rational back into a [`Ratio`].
fn ratio_of(value: &BigRational) -> Option<Ratio> {
    if !value.is_positive() {
        return None;
    }
    let num = Natural::new(value.numer().magnitude().clone()).ok()?;
    let den = Natural::new(value.denom().magnitude().clone()).ok()?;
    Some(Ratio::new(num, den))
}

/// An exact coordinate `rational + radical * sqrt(kernel)`.
///
/// Normal form: the kernel is squarefree, and a vanishing radical part
/// forces kernel 1, so rationals have one representation. Coordinates of
/// one figure share a single kernel, which keeps sums and products
/// closed and exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coord {
    rational: BigRational,
    radical: BigRational,
    kernel: Natural,
}

impl Coord {
    pub fn zero() -> Coord {
        Coord {
            rational: BigRational::zero(),
            radical: BigRational::zero(),
            kernel: Natural::one(),
        }
    }

    pub fn from_ratio(r: &Ratio) -> Coord {
        Coord {
            rational: rational(r),
            radical: BigRational::zero(),
            kernel: Natural::one(),
        }
    }

    pub fn from_surd(s: &Surd) -> Coord {
        if let Some(value) = s.rational_value() {
            return Coord::from_ratio(&value);
        }
        Coord {
            rational: BigRational::zero(),
            radical: rational(s.coeff()),
            kernel: s.kernel().clone(),
        }
    }

    fn normalize(mut self) -> Coord {
        if self.radical.is_zero() || self.kernel.is_one() {
            let radical = std::mem::replace(&mut self.radical, BigRational::zero());
            self.rational += radical * BigRational::from_integer(big(&self.kernel));
            self.kernel = Natural::one();
        }
        self
    }

    fn join_kernel(&self, other: &Coord) -> Result<Natural, Error> {
        if self.radical.is_zero() {
            Ok(other.kernel.clone())
        } else if other.radical.is_zero() || self.kernel == other.kernel {
            Ok(self.kernel.clone())
        } else {
            Err(Error::MixedKernels {
                left: self.kernel.to_string(),
                right: other.kernel.to_string(),
            })
        }
    }

    fn add(&self, other: &Coord) -> Result<Coord, Error> {
        let kernel = self.join_kernel(other)?;
        Ok(Coord {
            rational: &self.rational + &other.rational,
            radical: &self.radical + &other.radical,
            kernel,
        }
        .normalize())
    }

    fn sub(&self, other: &Coord) -> Result<Coord, Error> {
        let kernel = self.join_kernel(other)?;
        Ok(Coord {
            rational: &self.rational - &other.rational,
            radical: &self.radical - &other.radical,
            kernel,
        }
        .normalize())
    }

    fn mul(&self, other: &Coord) -> Result<Coord, Error> {
        let kernel = self.join_kernel(other)?;
        let k = BigRational::from_integer(big(&kernel));
        Ok(Coord {
            rational: &self.rational * &other.rational + &self.radical * &other.radical * k,
            radical: &self.rational * &other.radical + &self.radical * &other.rational,
            kernel,
        }
        .normalize())
    }

    fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    /// Decimal approximation, for rendering only.
    pub fn approx(&self) -> f64 {
        let rational = self.rational.to_f64().unwrap_or(f64::NAN);
        let radical = self.radical.to_f64().unwrap_or(f64::NAN);
        let kernel = BigRational::from_integer(big(&self.kernel))
            .to_f64()
            .unwrap_or(f64::NAN);
        rational + radical * kernel.sqrt()
    }

    /// Exact text form: `0`, `3/2`, `(1/1)\u{b7}\u{221a}3`, or a sum of both parts.
    pub fn exact_text(&self) -> String {
        let radical_text = |coeff: &BigRational, kernel: &Natural| {
            format!("({}/{})\u{b7}\u{221a}{kernel}", coeff.numer(), coeff.denom())
        };
        if self.radical.is_zero() {
            return self.rational.to_string();
        }
        if self.rational.is_zero() {
            return radical_text(&self.radical, &self.kernel);
        }
        format!(
            "{} + {}",
            self.rational,
            radical_text(&self.radical, &self.kernel)
        )
    }
}

/// A point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

/// A circle with a named center and an exact radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: String,
    pub radius: Surd,
}

/// A decidable exact claim about lengths in a figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthClaim {
    /// The square on `square_side` equals, in area, the rectangle whose
    /// sides are the two named segments.
    SquareEqualsRectangle {
        square_side: (String, String),
        rect_sides: [(String, String); 2],
    },
    /// The named segment has exactly this value.
    SegmentHasValue { side: (String, String), value: Surd },
}

/// A figure: named exact points, segments and circles drawn between
/// them, and the claims the figure is supposed to witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Figure {
    points: BTreeMap<String, Point>,
    segments: Vec<(String, String)>,
    circles: Vec<Circle>,
    claims: Vec<LengthClaim>,
}

impl Figure {
    pub fn new() -> Figure {
        Figure::default()
    }

    pub fn add_point(&mut self, label: impl Into<String>, point: Point) {
        self.points.insert(label.into(), point);
    }

    pub fn add_segment(&mut self, a: impl Into<String>, b: impl Into<String>) {
        self.segments.push((a.into(), b.into()));
    }

    pub fn add_circle(&mut self, center: impl Into<String>, radius: Surd) {
        self.circles.push(Circle { center: center.into(), radius });
    }

    pub fn add_claim(&mut self, claim: LengthClaim) {
        self.claims.push(claim);
    }

    pub fn points(&self) -> impl Iterator<Item = (&str, &Point)> {
        self.points.iter().map(|(label, p)| (label.as_str(), p))
    }

    pub fn point(&self, label: &str) -> Option<&Point> {
        self.points.get(label)
    }

    pub fn segments(&self) -> &[(String, String)] {
        &self.segments
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn claims(&self) -> &[LengthClaim] {
        &self.claims
    }

    fn lookup(&self, label: &str) -> Result<&Point, Error> {
        self.points
            .get(label)
            .ok_or_else(|| Error::UnknownLabel { label: label.to_owned() })
    }

    /// Exact squared distance between two named points.
    ///
    /// Errors on a dangling label, on coinciding points, and on the
    /// (geometrically possible, never constructed here) case of an
    /// irrational squared length.
    pub fn squared_distance(&self, a: &str, b: &str) -> Result<Ratio, Error> {
        let pa = self.lookup(a)?;
        let pb = self.lookup(b)?;
        let dx = pa.x.sub(&pb.x)?;
        let dy = pa.y.sub(&pb.y)?;
        let sq = dx.mul(&dx)?.add(&dy.mul(&dy)?)?;
        if !sq.is_rational() {
            return Err(Error::IrrationalSquaredLength { a: a.to_owned(), b: b.to_owned() });
        }
        ratio_of(&sq.rational).ok_or(Error::DegenerateSegment { a: a.to_owned(), b: b.to_owned() })
    }

    /// Exact length of a named segment, as a canonical surd.
    pub fn segment_length(&self, a: &str, b: &str) -> Result<Surd, Error> {
        Ok(Surd::sqrt_of_ratio(&self.squared_distance(a, b)?))
    }

    fn claim_holds(&self, claim: &LengthClaim) -> Result<bool, Error> {
        match claim {
            LengthClaim::SegmentHasValue { side, value } => {
                let length = self.segment_length(&side.0, &side.1)?;
                Ok(length == *value)
            }
            LengthClaim::SquareEqualsRectangle { square_side, rect_sides } => {
                let square_area = self.squared_distance(&square_side.0, &square_side.1)?;
                let side_one = self.segment_length(&rect_sides[0].0, &rect_sides[0].1)?;
                let side_two = self.segment_length(&rect_sides[1].0, &rect_sides[1].1)?;
                Ok(Surd::from_ratio(square_area) == side_one.mul(&side_two))
            }
        }
    }
}

/// Checks a figure: all referenced labels must exist (a dangling label
/// is an error, not a falsified claim), and every claim must hold as an
/// exact identity.
pub fn verify_figure(figure: &Figure) -> Result<bool, Error> {
    for (a, b) in figure.segments() {
        figure.lookup(a)?;
        figure.lookup(b)?;
    }
    for circle in figure.circles() {
        figure.lookup(&circle.center)?;
    }
    for claim in figure.claims() {
        if !figure.claim_holds(claim)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Label of the segment carrying the constructed mean.
pub const MEAN_SEGMENT: (&str, &str) = ("H", "D");

/// Builds the mean construction for two rational lengths `a` and `b`:
/// `O`, `H`, `B` collinear with `|OH| = a` and `|HB| = b`, the circle on
/// diameter `OB` about its midpoint `M`, and `D` on the circle straight
/// above `H`. The inscribed triangle `OBD` has its right angle at `D`,
/// and the altitude `HD` is the side of the square equal to the
/// rectangle `a \u{d7} b`: the figure claims `|HD| = sqrt(a*b)` exactly.
pub fn geometric_mean_figure(a: &Ratio, b: &Ratio) -> Figure {
    let mean = Surd::sqrt_of_ratio(&a.mul(b));
    let xa = rational(a);
    let diameter = &xa + rational(b);
    let radius = BigRational::new(diameter.numer().clone(), diameter.denom() * BigInt::from(2));

    let at = |x: BigRational| Point {
        x: Coord { rational: x, radical: BigRational::zero(), kernel: Natural::one() },
        y: Coord::zero(),
    };

    let mut figure = Figure::new();
    figure.add_point("O", at(BigRational::zero()));
    figure.add_point("H", at(xa.clone()));
    figure.add_point("B", at(diameter));
    figure.add_point("M", at(radius.clone()));
    figure.add_point(
        "D",
        Point { x: Coord { rational: xa, radical: BigRational::zero(), kernel: Natural::one() }, y: Coord::from_surd(&mean) },
    );

    figure.add_segment("O", "B");
    figure.add_segment("O", "D");
    figure.add_segment("D", "B");
    figure.add_segment("H", "D");

    let radius = ratio_of(&radius).expect("radius of positive lengths is positive");
    figure.add_circle("M", Surd::from_ratio(radius));

    figure.add_claim(LengthClaim::SegmentHasValue {
        side: (MEAN_SEGMENT.0.into(), MEAN_SEGMENT.1.into()),
        value: mean,
    });
    figure
}

/// Squares the `1 \u{d7} n` rectangle: the mean construction for `(n, 1)`
/// with the square of side `sqrt(n)` erected on the mean segment `HD`
/// (corners `E` and `F` to its right), claiming that this square equals
/// the rectangle `OH \u{d7} HB` in area.
pub fn square_the_rectangle(n: &Natural) -> Figure {
    let mut figure = geometric_mean_figure(&Ratio::from_natural(n.clone()), &Ratio::unit());

    let h = figure.point("H").expect("mean construction defines H").clone();
    let d = figure.point("D").expect("mean construction defines D").clone();
    let side = d.y.sub(&h.y).expect("same kernel within one figure");

    let far_x = h.x.add(&side).expect("same kernel within one figure");
    figure.add_point("E", Point { x: far_x.clone(), y: d.y.clone() });
    figure.add_point("F", Point { x: far_x, y: h.y.clone() });
    figure.add_segment("D", "E");
    figure.add_segment("E", "F");
    figure.add_segment("F", "H");

    figure.add_claim(LengthClaim::SquareEqualsRectangle {
        square_side: ("H".into(), "D".into()),
        rect_sides: [("O".into(), "H".into()), ("H".into(), "B".into())],
    });
    figure
}

/// One verified squaring per lesson entry, in lesson order.
pub fn theodorus_sequence() -> Vec<Figure> {
    THEODORUS_LESSON_NUMBERS
        .iter()
        .map(|&value| {
            let n = Natural::try_from(value).expect("lesson numbers are positive");
            let figure = square_the_rectangle(&n);
            debug_assert_eq!(verify_figure(&figure), Ok(true));
            figure
        })
        .collect()
}
