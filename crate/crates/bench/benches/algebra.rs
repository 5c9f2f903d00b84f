use std::hint::black_box;

use cgwd_core::analysis::{
    commutant_basis, decompose, default_r0, invariant_subspaces, verify_representation,
    CoxeterGraphD,
};
use cgwd_core::corpus::{named_reps, t_module};
use criterion::{criterion_group, criterion_main, Criterion};

fn relations(c: &mut Criterion) {
    let reps = named_reps();
    let graph = CoxeterGraphD::new(4).unwrap();
    c.bench_function("verify all corpus representations", |b| {
        b.iter(|| {
            for rep in &reps {
                black_box(verify_representation(rep, &graph).unwrap());
            }
        })
    });
}

fn commutant(c: &mut Criterion) {
    let rep = t_module();
    c.bench_function("symbolic commutant of M+N", |b| {
        b.iter(|| black_box(commutant_basis(&rep)))
    });
}

fn meataxe(c: &mut Criterion) {
    let reps = named_reps();
    let big = reps.last().unwrap();
    let r0 = default_r0();
    let mut group = c.benchmark_group("meataxe");
    group.sample_size(20);
    group.bench_function("decompose degree-10 sum", |b| {
        b.iter(|| black_box(decompose(big, &r0, 0).unwrap()))
    });
    group.bench_function("invariant subspaces of M+N", |b| {
        let rep = t_module();
        b.iter(|| black_box(invariant_subspaces(&rep, &r0).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, relations, commutant, meataxe);
criterion_main!(benches);
