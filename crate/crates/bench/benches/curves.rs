use criterion::{BenchmarkId, Criterion};
use orbicover_core::curves::{build_orbit, intersection_census};
use orbicover_core::exact::rat;

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_orbit_census");
    group.sample_size(10);
    for s in [3u32, 5, 7] {
        let lines = build_orbit(&rat(1), &rat(2), &rat(5), s).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(s), &lines, |b, lines| {
            b.iter(|| intersection_census(lines).unwrap().off_triangle_orbits)
        });
    }
    group.finish();
}
