//! Exhaustive- and random-range invariants, each checked against a small
//! independent oracle written here on plain `u64` arithmetic so that the
//! library's own big-integer paths are never trusted to test themselves.

use dunamis::integers::{
    classify, factorize, gcd, is_perfect_square, isqrt, rectangle_representations,
    squarefree_decompose, IntegerClass, Natural,
};
use dunamis::propositions::{partition_integers, prop_a_certify, prop_a_decide, RootVerdict};
use dunamis::ratio::{alternate, is_square_to_square, same_ratio, vii20_divides, Ratio};
use dunamis::surd::Surd;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nat(n: u64) -> Natural {
    Natural::try_from(n).unwrap()
}

fn as_u64(n: &Natural) -> u64 {
    n.magnitude().try_into().unwrap()
}

// --- independent u64 oracles ---

fn oracle_factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn oracle_is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|x| x * x == n)
}

fn oracle_divisor_count(n: u64) -> u64 {
    oracle_factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

fn oracle_gcd_by_factorization(a: u64, b: u64) -> u64 {
    let fb = oracle_factorize(b);
    oracle_factorize(a)
        .iter()
        .map(|&(p, ea)| {
            let eb = fb.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e);
            p.pow(ea.min(eb))
        })
        .product()
}

fn oracle_is_squarefree(n: u64) -> bool {
    oracle_factorize(n).iter().all(|&(_, e)| e == 1)
}

// --- integers ---

#[test]
fn perfect_square_agrees_with_exponent_parity_up_to_1e5() {
    for n in 1u64..=100_000 {
        let by_parity = factorize(&nat(n)).iter().all(|(_, e)| e % 2 == 0);
        assert_eq!(is_perfect_square(&nat(n)), by_parity, "n = {n}");
    }
}

#[test]
fn classify_square_iff_perfect_square_up_to_1e4() {
    for n in 1u64..=10_000 {
        let class = classify(&nat(n));
        match class {
            IntegerClass::Square { side } => {
                assert!(oracle_is_square(n), "n = {n}");
                assert_eq!(as_u64(&side) * as_u64(&side), n);
            }
            IntegerClass::Oblong { small, large } => {
                assert!(!oracle_is_square(n), "n = {n}");
                assert!(small < large);
                assert_eq!(as_u64(&small) * as_u64(&large), n);
            }
        }
    }
}

#[test]
fn rectangle_representations_up_to_1e4() {
    for n in 1u64..=10_000 {
        let reps = rectangle_representations(&nat(n));
        assert!(!reps.is_empty(), "n = {n}");
        for rep in &reps {
            assert!(rep.a <= rep.b);
            assert_eq!(as_u64(&rep.a) * as_u64(&rep.b), n, "n = {n}");
        }
        let expected_len = oracle_divisor_count(n).div_ceil(2);
        assert_eq!(reps.len() as u64, expected_len, "n = {n}");
    }
}

#[test]
fn squarefree_decomposition_roundtrips_up_to_1e5() {
    for n in 1u64..=100_000 {
        let parts = squarefree_decompose(&nat(n));
        let back = as_u64(&parts.square_part).pow(2) * as_u64(&parts.kernel);
        assert_eq!(back, n, "n = {n}");
        assert!(oracle_is_squarefree(as_u64(&parts.kernel)), "n = {n}");
    }
}

#[test]
fn gcd_agrees_with_factorization_gcd_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let a = rng.gen_range(1u64..=100_000);
        let b = rng.gen_range(1u64..=100_000);
        assert_eq!(
            as_u64(&gcd(&nat(a), &nat(b))),
            oracle_gcd_by_factorization(a, b),
            "a = {a}, b = {b}"
        );
    }
}

// --- ratio ---

#[test]
fn vii20_least_parts_measure_both_terms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let a = rng.gen_range(1u64..=1_000_000);
        let b = rng.gen_range(1u64..=1_000_000);
        let reduced = Ratio::new(nat(a), nat(b));
        let q = vii20_divides(&nat(a), &nat(b));
        assert_eq!(&q * reduced.num(), nat(a), "a = {a}, b = {b}");
        assert_eq!(&q * reduced.den(), nat(b), "a = {a}, b = {b}");
    }
}

#[test]
fn squares_of_coprime_pairs_stay_coprime() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let a = rng.gen_range(1u64..=100_000);
        let b = rng.gen_range(1u64..=100_000);
        let g = oracle_gcd_by_factorization(a, b);
        let (m, n) = (a / g, b / g);
        assert_eq!(
            gcd(&nat(m).square(), &nat(n).square()),
            nat(1),
            "m = {m}, n = {n}"
        );
        // the squaring path performs the same check internally
        assert!(Ratio::new(nat(m), nat(n)).square().is_ok());
    }
}

#[test]
fn alternation_holds_on_constructed_proportions() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1_000 {
        let m = rng.gen_range(1u64..=500);
        let n = rng.gen_range(1u64..=500);
        let k = rng.gen_range(1u64..=500);
        let j = rng.gen_range(1u64..=500);
        assert_eq!(
            alternate(&nat(k * m), &nat(k * n), &nat(j * m), &nat(j * n)),
            Ok(true),
            "m={m} n={n} k={k} j={j}"
        );
    }
}

#[test]
fn square_to_square_characterizations_agree_up_to_300() {
    // reduced-parts-both-squares versus product-is-a-square
    for a in 1u64..=300 {
        for b in 1u64..=300 {
            assert_eq!(
                is_square_to_square(&nat(a), &nat(b)),
                oracle_is_square(a * b),
                "a = {a}, b = {b}"
            );
        }
    }
}

#[test]
fn same_ratio_is_an_equivalence_up_to_50() {
    // same_ratio(p, q) coincides with equality of the reduced classes,
    // which makes it reflexive, symmetric, and transitive at once.
    let pairs: Vec<(u64, u64)> = (1u64..=50)
        .flat_map(|a| (1u64..=50).map(move |b| (a, b)))
        .collect();
    let class = |&(a, b): &(u64, u64)| {
        let g = oracle_gcd_by_factorization(a, b);
        (a / g, b / g)
    };
    for p in &pairs {
        for q in &pairs {
            let related = same_ratio(&nat(p.0), &nat(p.1), &nat(q.0), &nat(q.1));
            assert_eq!(related, class(p) == class(q), "p = {p:?}, q = {q:?}");
        }
    }
}

// --- surd ---

#[test]
fn canonicalization_squares_back_up_to_1e4() {
    for n in 1u64..=10_000 {
        let s = Surd::sqrt_of_integer(&nat(n));
        assert_eq!(s.square(), Ratio::from_natural(nat(n)), "n = {n}");
    }
}

// --- propositions ---

#[test]
fn root_rationality_agrees_with_factorization_oracle_up_to_1e5() {
    for n in 1u64..=100_000 {
        let (verdict, trace) = prop_a_decide(&nat(n));
        let all_even = oracle_factorize(n).iter().all(|&(_, e)| e % 2 == 0);
        assert_eq!(verdict.is_rational(), all_even, "n = {n}");
        assert!(!trace.steps().is_empty());
    }
}

#[test]
fn certification_accepts_exactly_the_true_claims() {
    for r in 1u64..=400 {
        for num in 1u64..=40 {
            for den in 1u64..=40 {
                let truth = num * num == r * den * den;
                let outcome = prop_a_certify(&nat(r), &nat(num), &nat(den));
                assert_eq!(outcome.is_ok(), truth, "r={r} claim {num}/{den}");
            }
        }
    }
}

#[test]
fn partition_counts_squares_by_isqrt() {
    for limit in 1u64..=1_000 {
        let (p, r) = partition_integers(&nat(limit));
        let (root, _) = isqrt(&nat(limit));
        assert_eq!(p.len() as u64, as_u64(&root), "limit = {limit}");
        assert_eq!(p.len() + r.len(), limit as usize);
        for square in &p {
            let (verdict, _) = prop_a_decide(square);
            assert!(matches!(verdict, RootVerdict::Rational(_)));
        }
    }
}

#[test]
fn partition_rest_has_irrational_roots() {
    let (_, rest) = partition_integers(&nat(2_000));
    for n in rest {
        let (verdict, _) = prop_a_decide(&n);
        assert_eq!(verdict, RootVerdict::Irrational, "n = {n}");
    }
}
