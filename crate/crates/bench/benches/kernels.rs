use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use chhs_bench::{amalgam_instance, octahedron_instance, random_instance};
use chhs_core::metric::{four_point_twice, DELTA_VERTEX_CAP};
use chhs_core::{verify_chhs, ClassIndex, VerifyOptions};

fn four_point(c: &mut Criterion) {
    let mut group = c.benchmark_group("four_point");
    group.sample_size(10);
    for n in [40, 80, 160] {
        let (_, w) = random_instance(n, 0.15, 1);
        let metric = w.augmented_graph().metric();
        let len = metric.len();
        group.bench_with_input(BenchmarkId::from_parameter(n), &metric, |b, m| {
            b.iter(|| four_point_twice(black_box(m.distances()), len))
        });
    }
    group.finish();
}

fn maximal_cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximal_cliques");
    for n in [30, 60, 120] {
        let (x, _) = random_instance(n, 0.3, 2);
        let labels: Vec<String> = x.labels().to_vec();
        let edges: Vec<(String, String)> =
            x.edges().iter().map(|&(a, b)| (labels[a].clone(), labels[b].clone())).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &(labels, edges), |b, (l, e)| {
            b.iter(|| {
                let pairs: Vec<(&str, &str)> = e.iter().map(|(p, q)| (p.as_str(), q.as_str())).collect();
                chhs_core::FlagComplex::build(black_box(l), &pairs).unwrap().maximal_simplices().len()
            })
        });
    }
    group.finish();
}

fn class_index(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_index");
    for n in [20, 40, 80] {
        let (x, _) = random_instance(n, 0.3, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| ClassIndex::new(black_box(x)).unwrap().len())
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_chhs");
    group.sample_size(10);
    let opts = VerifyOptions { delta_cap: DELTA_VERTEX_CAP, ..VerifyOptions::default() };
    let cases = [
        ("octahedron-4", octahedron_instance(4)),
        ("amalgam-2", amalgam_instance(2)),
        ("random-40", random_instance(40, 0.3, 4)),
    ];
    for (name, (x, w)) in &cases {
        group.bench_function(*name, |b| b.iter(|| verify_chhs(black_box(x), w, &opts).unwrap().verdict));
    }
    group.finish();
}

criterion_group!(kernels, four_point, maximal_cliques, class_index, verify);
criterion_main!(kernels);
