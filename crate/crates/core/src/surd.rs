//! Canonical quadratic surds and exact commensurability decisions.
//!
//! A [`Surd`] is a positive value `(p/q)\u{b7}\u{221a}k` with the kernel `k`
//! squarefree. Canonicalization makes rationality a structural property
//! (`k = 1`) and makes commensurability of two surds decidable by kernel
//! equality \u{2014} a fact this crate does not assume but checks against the
//! square-to-square criterion in its tests.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::integers::{squarefree_decompose, Natural};
use crate::ratio::Ratio;

/// A positive quadratic surd `coeff * sqrt(kernel)` in canonical form:
/// the coefficient is a ratio in lowest terms and the kernel is squarefree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: Ratio,
    kernel: Natural,
}

impl Surd {
    /// The square root of an integer, canonicalized: `sqrt(s^2 * k)`
    /// becomes `(s/1)\u{b7}\u{221a}k`. Squaring the result gives back `n` exactly.
    pub fn sqrt_of_integer(n: &Natural) -> Surd {
        let parts = squarefree_decompose(n);
        Surd {
            coeff: Ratio::from_natural(parts.square_part),
            kernel: parts.kernel,
        }
    }

    /// The square root of a ratio: `sqrt(p/q) = sqrt(p*q) / q`, then
    /// canonicalized.
    pub fn sqrt_of_ratio(r: &Ratio) -> Surd {
        let parts = squarefree_decompose(&(r.num() * r.den()));
        Surd {
            coeff: Ratio::new(parts.square_part, r.den().clone()),
            kernel: parts.kernel,
        }
    }

    /// A rational value viewed as a surd with kernel 1.
    pub fn from_ratio(r: Ratio) -> Surd {
        Surd { coeff: r, kernel: Natural::one() }
    }

    pub fn coeff(&self) -> &Ratio {
        &self.coeff
    }

    pub fn kernel(&self) -> &Natural {
        &self.kernel
    }

    /// The exact rational value when there is one: the surd is rational
    /// iff its kernel is 1.
    pub fn rational_value(&self) -> Option<Ratio> {
        self.kernel.is_one().then(|| self.coeff.clone())
    }

    /// The exact square, always rational: `coeff^2 * kernel`.
    ///
    /// That the square of an irrational length is still a ratio of
    /// numbers is the defining property of a power.
    pub fn square(&self) -> Ratio {
        Ratio::new(
            &self.coeff.num().square() * &self.kernel,
            self.coeff.den().square(),
        )
    }

    /// Scales by a positive rational; the kernel is untouched.
    pub fn scale(&self, c: &Ratio) -> Surd {
        Surd {
            coeff: self.coeff.mul(c),
            kernel: self.kernel.clone(),
        }
    }

    /// Exact product of two surds, canonicalized:
    /// `sqrt(j) * sqrt(k) = sqrt(j*k)` and the product kernel is reduced
    /// by extracting its square part.
    pub fn mul(&self, other: &Surd) -> Surd {
        let parts = squarefree_decompose(&(&self.kernel * &other.kernel));
        Surd {
            coeff: self
                .coeff
                .mul(&other.coeff)
                .mul(&Ratio::from_natural(parts.square_part)),
            kernel: parts.kernel,
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}/{})\u{b7}\u{221a}{}",
            self.coeff.num(),
            self.coeff.den(),
            self.kernel
        )
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Surd {
    type Err = Error;

    /// Parses the canonical rendering `(p/q)\u{b7}\u{221a}k` and its ASCII
    /// spelling `(p/q)*sqrt(k)`. The value is re-canonicalized, so any
    /// positive `p/q` and `k` are accepted.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseSurd { input: s.to_owned() };
        let t = s.trim();
        let rest = t.strip_prefix('(').ok_or_else(bad)?;
        let (coeff_text, tail) = rest.split_once(')').ok_or_else(bad)?;
        let kernel_text = if let Some(k) = tail.strip_prefix("\u{b7}\u{221a}") {
            k
        } else if let Some(k) = tail.strip_prefix("*sqrt(") {
            k.strip_suffix(')').ok_or_else(bad)?
        } else {
            return Err(bad());
        };
        let coeff: Ratio = coeff_text.parse().map_err(|_| bad())?;
        let kernel: Natural = kernel_text.parse().map_err(|_| bad())?;
        Ok(Surd::sqrt_of_integer(&kernel).scale(&coeff))
    }
}

/// Outcome of a commensurability decision.
///
/// Commensurable surds have an exact rational quotient; incommensurable
/// ones still have squares in a rational ratio, which is reported instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommensurabilityResult {
    Commensurable { ratio: Ratio },
    Incommensurable { square_ratio: Ratio },
}

/// Decides whether two surds have a common measure.
///
/// In canonical form this is kernel equality; the quotient of
/// commensurable surds is the quotient of their coefficients.
pub fn commensurable(s1: &Surd, s2: &Surd) -> CommensurabilityResult {
    if s1.kernel() == s2.kernel() {
        CommensurabilityResult::Commensurable {
            ratio: s1.coeff().div(s2.coeff()),
        }
    } else {
        CommensurabilityResult::Incommensurable {
            square_ratio: s1.square().div(&s2.square()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::try_from(n).unwrap()
    }

    fn rat(a: u64, b: u64) -> Ratio {
        Ratio::new(nat(a), nat(b))
    }

    fn sqrt(n: u64) -> Surd {
        Surd::sqrt_of_integer(&nat(n))
    }

    #[test]
    fn sqrt_of_integer_examples() {
        // 18 = 3^2 * 2
        assert_eq!(sqrt(18).to_string(), "(3/1)\u{b7}\u{221a}2");
        assert_eq!(sqrt(9).to_string(), "(3/1)\u{b7}\u{221a}1");
        assert_eq!(sqrt(2).to_string(), "(1/1)\u{b7}\u{221a}2");
    }

    #[test]
    fn sqrt_of_ratio_examples() {
        let s = Surd::sqrt_of_ratio(&rat(9, 4));
        assert_eq!(s.rational_value(), Some(rat(3, 2)));
        let u = Surd::sqrt_of_ratio(&Ratio::unit());
        assert_eq!(u.rational_value(), Some(Ratio::unit()));
        // sqrt(1/2) = sqrt(2)/2, and its square is 1/2 again
        let h = Surd::sqrt_of_ratio(&rat(1, 2));
        assert_eq!(h.to_string(), "(1/2)\u{b7}\u{221a}2");
        assert_eq!(h.square(), rat(1, 2));
    }

    #[test]
    fn rational_value_examples() {
        assert_eq!(
            Surd::from_ratio(rat(3, 2)).rational_value(),
            Some(rat(3, 2))
        );
        assert_eq!(sqrt(2).rational_value(), None);
        assert_eq!(Surd::from_ratio(Ratio::unit()).rational_value(), Some(Ratio::unit()));
    }

    #[test]
    fn square_examples() {
        assert_eq!(sqrt(17).square(), rat(17, 1));
        assert_eq!(Surd::from_ratio(rat(3, 2)).square(), rat(9, 4));
        // (1/2)^2 * 2 = 2/4 = 1/2
        assert_eq!(Surd::sqrt_of_ratio(&rat(1, 2)).square(), rat(1, 2));
    }

    #[test]
    fn squaring_roundtrips_integers() {
        for n in 1u64..=500 {
            assert_eq!(sqrt(n).square(), rat(n, 1), "n = {n}");
        }
    }

    #[test]
    fn commensurable_examples() {
        assert_eq!(
            commensurable(&sqrt(18), &sqrt(8)),
            CommensurabilityResult::Commensurable { ratio: rat(3, 2) }
        );
        assert_eq!(
            commensurable(&sqrt(2), &sqrt(2)),
            CommensurabilityResult::Commensurable { ratio: Ratio::unit() }
        );
        // kernels 2 != 3; 2*3 = 6 is not a perfect square
        assert_eq!(
            commensurable(&sqrt(2), &sqrt(3)),
            CommensurabilityResult::Incommensurable { square_ratio: rat(2, 3) }
        );
    }

    #[test]
    fn commensurable_quotient_scales_back() {
        let s1 = sqrt(18);
        let s2 = sqrt(8);
        match commensurable(&s1, &s2) {
            CommensurabilityResult::Commensurable { ratio } => {
                assert_eq!(s2.scale(&ratio), s1);
            }
            other => panic!("expected commensurable, got {other:?}"),
        }
    }

    #[test]
    fn product_canonicalizes() {
        // sqrt(2) * sqrt(8) = sqrt(16) = 4
        assert_eq!(sqrt(2).mul(&sqrt(8)), Surd::from_ratio(rat(4, 1)));
        // sqrt(6) * sqrt(10) = 2 * sqrt(15)
        assert_eq!(sqrt(6).mul(&sqrt(10)), sqrt(60));
        assert_eq!(sqrt(60).to_string(), "(2/1)\u{b7}\u{221a}15");
    }

    #[test]
    fn display_parses_back() {
        for n in [2u64, 3, 9, 12, 17, 18, 48, 50] {
            let s = sqrt(n);
            let back: Surd = s.to_string().parse().unwrap();
            assert_eq!(back, s);
        }
        let scaled = sqrt(8).scale(&rat(5, 6));
        let back: Surd = scaled.to_string().parse().unwrap();
        assert_eq!(back, scaled);
    }

    #[test]
    fn ascii_form_parses() {
        assert_eq!("(1/2)*sqrt(2)".parse::<Surd>().unwrap(), Surd::sqrt_of_ratio(&rat(1, 2)));
        // non-canonical input is canonicalized on the way in
        assert_eq!("(2/4)*sqrt(8)".parse::<Surd>().unwrap(), sqrt(2));
        assert!("(1/2)*sqrt(0)".parse::<Surd>().is_err());
        assert!("sqrt(2)".parse::<Surd>().is_err());
        assert!("(1/2)*sqrt(2".parse::<Surd>().is_err());
    }
}
