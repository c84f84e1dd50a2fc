//! End-to-end timing of the certification pipeline stages.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use linkcert_core::augment::augment;
use linkcert_core::certify::{certify_hyperbolic, certify_no_exceptional};
use linkcert_core::diagram::{is_prime, is_twist_reduced, parse_diagram};
use linkcert_core::normalsurf::enumerate_normal_curves;
use linkcert_core::polyhedra::{decompose, verify_angled};
use linkcert_core::{families, oracle};

fn bench_parse(c: &mut Criterion) {
    let text = families::pretzel(&[8, 9, 10, 7, 6]).unwrap().to_pd_string();
    c.bench_function("parse_pd_40_crossings", |b| {
        b.iter(|| parse_diagram(&text).unwrap())
    });
}

fn bench_predicates(c: &mut Criterion) {
    let d = families::pretzel(&[8, 9, 10, 7, 6]).unwrap();
    c.bench_function("is_prime_40_crossings", |b| b.iter(|| is_prime(&d).unwrap()));
    c.bench_function("is_twist_reduced_40_crossings", |b| {
        b.iter(|| is_twist_reduced(&d).unwrap())
    });
    c.bench_function("prime_oracle_40_crossings", |b| {
        b.iter(|| oracle::prime_violations(&d))
    });
}

fn bench_decompose(c: &mut Criterion) {
    let d = families::pretzel(&[8, 9, 10, 7, 6]).unwrap();
    let aug = augment(&d).unwrap();
    c.bench_function("decompose_5_regions", |b| b.iter(|| decompose(&aug).unwrap()));
    let dec = decompose(&aug).unwrap();
    c.bench_function("cusp_tori_5_regions", |b| b.iter(|| dec.cusp_tori().unwrap()));
    c.bench_function("verify_angled_5_regions", |b| {
        b.iter(|| verify_angled(&dec, 8))
    });
}

fn bench_certify(c: &mut Criterion) {
    let knot = families::pretzel(&[7, 7, 7, 6]).unwrap();
    c.bench_function("certify_hyp_link", |b| {
        b.iter_batched(|| knot.clone(), |d| certify_hyperbolic(&d), BatchSize::SmallInput)
    });
    c.bench_function("certify_no_exceptional_both_routes", |b| {
        b.iter_batched(|| knot.clone(), |d| certify_no_exceptional(&d), BatchSize::SmallInput)
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let d = families::double_twist(6, 6).unwrap();
    let dec = decompose(&augment(&d).unwrap()).unwrap();
    c.bench_function("enumerate_normal_curves_octahedron", |b| {
        b.iter(|| enumerate_normal_curves(&dec.complex, 100))
    });
}

criterion_group!(
    benches,
    bench_parse,
    bench_predicates,
    bench_decompose,
    bench_certify,
    bench_enumeration
);
criterion_main!(benches);
