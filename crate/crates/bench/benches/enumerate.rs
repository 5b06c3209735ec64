use criterion::{BenchmarkId, Criterion};
use orbicover_bench::{presentation, GROUPS};
use orbicover_core::groups::{abelianization, enumerate, Strategy};

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("todd_coxeter");
    group.sample_size(10);
    for spec in GROUPS {
        let p = presentation(spec);
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let id = BenchmarkId::new(format!("{strategy:?}"), spec);
            group.bench_with_input(id, &p, |b, p| b.iter(|| enumerate(p, 2_000_000, strategy).outcome));
        }
    }
    group.finish();

    let p = presentation("B2(3,3,2,2)");
    c.bench_function("abelianization B2(3,3,2,2)", |b| b.iter(|| abelianization(&p)));
}
