use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use dunamis::construction::{square_the_rectangle, verify_figure};
use dunamis::integers::{factorize, isqrt, Natural};
use dunamis::propositions::{prop_a_decide, prop_b_decide};
use dunamis::ratio::Ratio;
use dunamis::surd::{commensurable, Surd};
use dunamis::svg::figure_to_svg;

fn nat(n: u64) -> Natural {
    Natural::try_from(n).unwrap()
}

fn bench_integers(c: &mut Criterion) {
    let mut group = c.benchmark_group("integers");
    for n in [97u64, 9_699_690, 2_147_483_647] {
        group.bench_with_input(BenchmarkId::new("factorize", n), &nat(n), |b, n| {
            b.iter(|| factorize(black_box(n)));
        });
        group.bench_with_input(BenchmarkId::new("isqrt", n), &nat(n), |b, n| {
            b.iter(|| isqrt(black_box(n)));
        });
    }
    group.finish();
}

fn bench_decisions(c: &mut Criterion) {
    let mut group = c.benchmark_group("decisions");
    group.bench_function("prop_a_decide/1..=1000", |b| {
        let inputs: Vec<Natural> = (1u64..=1000).map(nat).collect();
        b.iter(|| {
            for n in &inputs {
                black_box(prop_a_decide(n));
            }
        });
    });
    group.bench_function("prop_b_decide/18:8", |b| {
        let r = Ratio::new(nat(18), nat(8));
        b.iter(|| black_box(prop_b_decide(black_box(&r))));
    });
    group.bench_function("commensurable/sqrt18-sqrt8", |b| {
        let s1 = Surd::sqrt_of_integer(&nat(18));
        let s2 = Surd::sqrt_of_integer(&nat(8));
        b.iter(|| black_box(commensurable(black_box(&s1), black_box(&s2))));
    });
    group.finish();
}

fn bench_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    group.bench_function("square_the_rectangle/17", |b| {
        let n = nat(17);
        b.iter(|| black_box(square_the_rectangle(black_box(&n))));
    });
    group.bench_function("verify_figure/17", |b| {
        let figure = square_the_rectangle(&nat(17));
        b.iter(|| black_box(verify_figure(black_box(&figure))));
    });
    group.bench_function("figure_to_svg/17", |b| {
        let figure = square_the_rectangle(&nat(17));
        b.iter(|| black_box(figure_to_svg(black_box(&figure), 100.0)));
    });
    group.finish();
}

criterion_group!(benches, bench_integers, bench_decisions, bench_construction);
criterion_main!(benches);
