use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cantor_swaps::address::Address;
use cantor_swaps::algorithms::{decompose_swap, run_suite, suite_by_name};
use cantor_swaps::element::VElement;
use cantor_swaps::presentations::{genset_uv, SwapTable};
use cantor_swaps::words::parse;

fn addr(s: &str) -> Address {
    s.parse().unwrap()
}

fn bench_compose(c: &mut Criterion) {
    let uv = genset_uv();
    let u = uv.image("u").unwrap().clone();
    let v = uv.image("v").unwrap().clone();
    c.bench_function("compose_uv_pair", |b| {
        b.iter(|| black_box(&u).compose(black_box(&v)))
    });
    c.bench_function("power_u6", |b| b.iter(|| black_box(&u).power(6)));
}

fn bench_eval(c: &mut Criterion) {
    let uv = genset_uv();
    let word = parse("(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)").unwrap();
    c.bench_function("eval_c_formula", |b| b.iter(|| uv.eval(black_box(&word)).unwrap()));
}

fn bench_canonicalize(c: &mut Criterion) {
    // a fully expanded identity at depth 8: 256 mergeable pairs
    let mut pairs = Vec::new();
    for bits in 0..256u16 {
        let s: String = (0..8).map(|i| if bits >> i & 1 == 0 { '0' } else { '1' }).collect();
        pairs.push((addr(&s), addr(&s)));
    }
    c.bench_function("canonicalize_depth8_identity", |b| {
        b.iter(|| VElement::from_pairs(black_box(pairs.clone())).unwrap())
    });
}

fn bench_decompose(c: &mut Criterion) {
    c.bench_function("decompose_swap_000_11", |b| {
        b.iter(|| decompose_swap(black_box(&addr("000")), black_box(&addr("11"))).unwrap())
    });
}

fn bench_suites(c: &mut Criterion) {
    let p3 = suite_by_name("p3").unwrap().unwrap();
    c.bench_function("suite_p3", |b| b.iter(|| run_suite(black_box(&p3))));
    c.bench_function("swap_table_build", |b| b.iter(|| SwapTable::build().unwrap()));
}

criterion_group!(
    benches,
    bench_compose,
    bench_eval,
    bench_canonicalize,
    bench_decompose,
    bench_suites
);
criterion_main!(benches);
