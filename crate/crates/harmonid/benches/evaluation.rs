//! Criterion benches: the two exact series evaluation orders against each
//! other, and sequential versus rayon-parallel sweep execution.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use harmonid::catalog;
use harmonid::harness::{bench_payload, run_identity, SweepConfig};
use harmonid_core::hypergeom::{pfq_exact, pfq_exact_incremental};

fn evaluation_orders(c: &mut Criterion) {
    let mut group = c.benchmark_group("pfq_evaluation_order");
    group.sample_size(10);
    for n in [50u64, 200] {
        let spec = bench_payload(n);
        group.bench_with_input(BenchmarkId::new("naive", n), &spec, |b, spec| {
            b.iter(|| pfq_exact(spec).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("incremental", n), &spec, |b, spec| {
            b.iter(|| pfq_exact_incremental(spec).unwrap())
        });
    }
    group.finish();
}

fn sweep_execution(c: &mut Criterion) {
    let entry = catalog::find("thm_b").expect("catalog entry");
    let base = SweepConfig {
        n_max: 8,
        rational_samples: 6,
        ..SweepConfig::default()
    };
    let mut group = c.benchmark_group("sweep_execution");
    group.sample_size(10);

    let sequential = SweepConfig {
        jobs: 1,
        ..base.clone()
    };
    group.bench_function("sequential", |b| {
        b.iter(|| run_identity(&entry, &sequential).unwrap())
    });

    #[cfg(feature = "parallel")]
    {
        let parallel = SweepConfig { jobs: 0, ..base };
        group.bench_function("parallel", |b| {
            b.iter(|| run_identity(&entry, &parallel).unwrap())
        });
    }

    group.finish();
}

criterion_group!(benches, evaluation_orders, sweep_execution);
criterion_main!(benches);
