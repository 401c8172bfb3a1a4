use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use parkideal::betti::{betti_table_with, Field};
use parkideal::monomial::skeleton_ideal;
use parkideal::standard::{inversion_polynomial_with, standard_count_with};
use parkideal::tropical::{enumerate_cells_with, Arrangement};
use parkideal::{Exec, Graph};
use std::hint::black_box;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn standard_monomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("standard_count");
    for n in [5usize, 6] {
        let ideal = skeleton_ideal(&Graph::complete(n + 1).unwrap(), 1).unwrap();
        for (name, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(name, n), &ideal, |b, m| {
                b.iter(|| standard_count_with(black_box(m), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn tu_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("tu_weighted_count");
    group.sample_size(10);
    let g = Graph::complete(6).unwrap();
    for (name, exec) in POLICIES {
        group.bench_function(name, |b| b.iter(|| black_box(&g).tu_weighted_count_with(exec).unwrap()));
    }
    group.finish();
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    group.sample_size(10);
    let ideal = skeleton_ideal(&Graph::complete(6).unwrap(), 1).unwrap();
    for (name, exec) in POLICIES {
        group.bench_function(name, |b| {
            b.iter(|| betti_table_with(black_box(&ideal), Field::Rational, exec).unwrap())
        });
    }
    group.finish();
}

fn tropical_cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_cells");
    group.sample_size(10);
    let arr = Arrangement::generic(6).unwrap();
    for (name, exec) in POLICIES {
        group.bench_function(name, |b| {
            b.iter(|| enumerate_cells_with(black_box(&arr), exec).unwrap())
        });
    }
    group.finish();
}

fn forests(c: &mut Criterion) {
    let mut group = c.benchmark_group("inversion_polynomial");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_function(name, |b| {
            b.iter(|| inversion_polynomial_with(black_box(6), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, standard_monomials, tu_count, betti, tropical_cells, forests);
criterion_main!(benches);
