use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use modbranch::branching::crystal_graph;
use modbranch::hall::hall_number_with;
use modbranch::realizations::{enumerate_flotw, RealizationTag};
use modbranch::{Exec, Multicharge, Multisegment};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn hall_numbers(c: &mut Criterion) {
    let psi = Multisegment::from_heads(2, &[(0, 2), (1, 2)]);
    let phi = Multisegment::from_heads(2, &[(0, 1), (1, 1)]);
    let mut g = c.benchmark_group("hall_number");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, "p=31"), &exec, |b, &exec| {
            b.iter(|| hall_number_with(exec, black_box(&psi), &phi, &phi, 31).unwrap())
        });
    }
    g.finish();
}

fn flotw_enumeration(c: &mut Criterion) {
    let v = Multicharge::new(4, vec![0, 1]).unwrap();
    let mut g = c.benchmark_group("enumerate_flotw");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, "n=12"), &exec, |b, &exec| {
            b.iter(|| enumerate_flotw(black_box(&v), 12, exec).unwrap())
        });
    }
    g.finish();
}

fn crystal_graphs(c: &mut Criterion) {
    let tag = RealizationTag::Uglov(Multicharge::new(3, vec![0, 1]).unwrap());
    let mut g = c.benchmark_group("crystal_graph");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, "depth=9"), &exec, |b, &exec| {
            b.iter(|| crystal_graph(black_box(&tag), 9, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, hall_numbers, flotw_enumeration, crystal_graphs);
criterion_main!(benches);
