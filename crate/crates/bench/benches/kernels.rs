use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qpmut::coeff::{Coeff, Rational, Ring};
use qpmut::jacdim::{dimension_profile, jacobi_generators, transfer_to_primes};
use qpmut::qp_mutation::{find_matching_for, mutate_qp};
use qpmut::quiver::mutate_quiver;
use qpmut::reddening::search_reddening;
use qpmut::x7::{f0, make_wp, verify_nondegeneracy_round, x7};

fn profiles(c: &mut Criterion) {
    let p = jacobi_generators(&f0::<Rational>(3), true).unwrap();
    let mut g = c.benchmark_group("profile_f0_r6");
    g.sample_size(20);
    g.bench_function("Q", |b| {
        b.iter(|| dimension_profile(black_box(&p), 6, Ring::Rationals).unwrap())
    });
    g.bench_function("F2", |b| {
        b.iter(|| dimension_profile(black_box(&p), 6, Ring::PrimeField(2)).unwrap())
    });
    g.finish();
    c.bench_function("lattice_f0_r5", |b| {
        b.iter(|| transfer_to_primes(black_box(&p), 5, None).unwrap())
    });
}

fn mutation(c: &mut Criterion) {
    let q = x7();
    let w0 = make_wp::<Rational>(&[], 12);
    let m = find_matching_for(&q, &w0, 0).unwrap();
    c.bench_function("quiver_mutate_x7", |b| {
        b.iter(|| mutate_quiver(black_box(&q), 0).unwrap())
    });
    c.bench_function("qp_mutate_x7_w0", |b| {
        b.iter(|| mutate_qp(black_box(&q), &w0, &m).unwrap())
    });
    let p = [Rational::from_i64(1)];
    c.bench_function("verify_round_x", |b| {
        b.iter(|| verify_nondegeneracy_round(black_box(&p), 12).unwrap())
    });
}

fn reddening(c: &mut Criterion) {
    let q = x7();
    let mut g = c.benchmark_group("reddening");
    g.sample_size(10);
    g.bench_function("x7_depth5", |b| {
        b.iter(|| search_reddening(black_box(&q), 5).unwrap())
    });
    g.finish();
}

criterion_group!(kernels, profiles, mutation, reddening);
criterion_main!(kernels);
