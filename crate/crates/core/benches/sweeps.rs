use criterion::{criterion_group, criterion_main, Criterion};
use hfkit_core::checks::{correspondence, mewos, ordinals, sets};
use hfkit_core::Exec;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        group.bench_function(format!("ordinal_oracle/{label}"), |b| b.iter(|| ordinals::oracle_agreement(exec, 4)));
        group.bench_function(format!("mewo_order_laws/{label}"), |b| b.iter(|| mewos::order_laws(exec, 3)));
        group.bench_function(format!("ordinal_transport/{label}"), |b| b.iter(|| correspondence::ordinal_transport(exec, 5)));
        group.bench_function(format!("graph_random/{label}"), |b| b.iter(|| sets::graph_random(exec, 0, 1000, 8)));
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
