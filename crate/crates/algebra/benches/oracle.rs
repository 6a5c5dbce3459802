use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gbei_algebra::complex::SimplicialComplex;
use gbei_algebra::groebner::GbLimits;
use gbei_algebra::ideal::build_ideal;
use gbei_algebra::initial::initial_ideal;
use gbei_algebra::monomial::MonomialOrder;
use gbei_algebra::oracle::projective_dimension;
use gbei_core::{fixtures, Caps, Exec, SimpleGraph};
use std::hint::black_box;

fn complex_of(m: usize, g: &SimpleGraph) -> SimplicialComplex {
    let ord = MonomialOrder::default_for(m * g.n());
    let init = initial_ideal(&build_ideal(m, g, &ord).unwrap(), &GbLimits::default()).unwrap();
    SimplicialComplex::stanley_reisner(&init).unwrap()
}

fn pd_scan(c: &mut Criterion) {
    let caps = Caps::default();
    for (name, m, g) in [
        ("cycle6_m2", 2, SimpleGraph::cycle(6).unwrap()),
        ("cycle4_m3", 3, SimpleGraph::cycle(4).unwrap()),
        ("fig5_m2", 2, fixtures::fig5()),
    ] {
        let complex = complex_of(m, &g);
        let mut group = c.benchmark_group(format!("pd_scan/{name}"));
        group.sample_size(10);
        for (label, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
            group.bench_function(BenchmarkId::from_parameter(label), |b| {
                b.iter(|| projective_dimension(black_box(&complex), &caps, exec).unwrap())
            });
        }
        group.finish();
    }
}

fn groebner(c: &mut Criterion) {
    let g = fixtures::fig5();
    let ord = MonomialOrder::default_for(2 * g.n());
    let ideal = build_ideal(2, &g, &ord).unwrap();
    c.bench_function("groebner/fig5_m2", |b| {
        b.iter(|| ideal.groebner_basis(&GbLimits::default()).unwrap())
    });
}

criterion_group!(benches, pd_scan, groebner);
criterion_main!(benches);
