use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;

use radind_core::cyclotomic::{enumerate_vanishing_sums, vandermonde_det_identity};
use radind_core::finite_field::{build_tower, construct_independent_set, verify_linear_independence};
use radind_core::interval::eval_radical_sum;
use radind_core::number::factor;
use radind_core::radicals::sierpinski_degree;
use radind_core::search::{near_miss_search, SearchConfig};
use radind_core::RadicalTerm;

fn number(c: &mut Criterion) {
    c.bench_function("factor 3^16-1", |b| b.iter(|| factor(black_box(43_046_720))));
    c.bench_function("factor 2^61-1 times 3", |b| {
        b.iter(|| factor(black_box(((1u64 << 61) - 1) * 3)))
    });
}

fn interval(c: &mut Criterion) {
    let terms = [
        RadicalTerm::new(1, 433, 6),
        RadicalTerm::new(1, 972, 6),
        RadicalTerm::new(-1, 42089, 6),
    ];
    let width = BigRational::new(BigInt::from(1), BigInt::from(10).pow(40));
    c.bench_function("witness enclosure to 1e-40", |b| {
        b.iter(|| eval_radical_sum(black_box(&terms), &width).unwrap())
    });
}

fn radicals(c: &mut Criterion) {
    c.bench_function("sierpinski degree n=40", |b| b.iter(|| sierpinski_degree(black_box(40)).unwrap()));
}

fn cyclotomic(c: &mut Criterion) {
    let mut g = c.benchmark_group("cyclotomic");
    g.sample_size(10);
    g.bench_function("vandermonde det n=12", |b| b.iter(|| vandermonde_det_identity(black_box(12)).unwrap()));
    g.bench_function("vanishing sums n=12 B=2 k<=6", |b| {
        b.iter(|| enumerate_vanishing_sums(black_box(12), 2, 6).unwrap())
    });
    g.finish();
}

fn finite_field(c: &mut Criterion) {
    let tower = build_tower(3, 2, 16).unwrap();
    let set = construct_independent_set(&tower).unwrap();
    let x = tower.generator_pow(31_415_926);
    tower.discrete_log(&x).unwrap();
    let mut g = c.benchmark_group("finite_field");
    g.bench_function("discrete log in GF(3^16)", |b| b.iter(|| tower.discrete_log(black_box(&x)).unwrap()));
    g.bench_function("exhaustive verification (3,2,16)", |b| {
        b.iter(|| verify_linear_independence(&tower, black_box(&set.elements)))
    });
    g.sample_size(10);
    g.bench_function("build tower (3,2,16)", |b| b.iter(|| build_tower(3, 2, 16).unwrap()));
    g.finish();
}

fn search(c: &mut Criterion) {
    let config = SearchConfig {
        x_max: 200,
        y_max: 200,
        exp_min: 2,
        exp_max: 10,
        worker_count: 1,
        ..SearchConfig::default()
    };
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("near miss x,y<=200 exps 2..10", |b| b.iter(|| near_miss_search(black_box(&config)).unwrap()));
    g.finish();
}

criterion_group!(benches, number, interval, radicals, cyclotomic, finite_field, search);
criterion_main!(benches);
