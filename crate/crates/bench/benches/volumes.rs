use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lpdm_core::oracle;
use lpdm_core::order::count_maximal_chains;
use lpdm_core::polytope::hrep;
use lpdm_core::triangulation::{triangulate_toric, volume};
use lpdm_core::{LpdmSpec, SubsetMask};

fn alternating(n: usize) -> SubsetMask {
    SubsetMask::from_members(n, (1..n).step_by(2)).unwrap()
}

fn toric(n: usize) -> LpdmSpec {
    let s = alternating(n);
    LpdmSpec::new(s, s.with(n)).unwrap()
}

fn wide(n: usize) -> LpdmSpec {
    LpdmSpec::new(SubsetMask::of(n, &[2]), SubsetMask::full(n).without(1)).unwrap()
}

fn volumes(c: &mut Criterion) {
    let mut g = c.benchmark_group("volume");
    for n in [4, 6, 8, 10] {
        let m = wide(n);
        g.bench_with_input(BenchmarkId::new("triangulation", n), &m, |b, m| b.iter(|| volume(black_box(m))));
    }
    for n in [4, 5, 6] {
        let h = hrep(&wide(n));
        g.bench_with_input(BenchmarkId::new("ehrhart", n), &h, |b, h| b.iter(|| oracle::ehrhart_volume(black_box(h))));
    }
    g.finish();
}

fn chains(c: &mut Criterion) {
    let mut g = c.benchmark_group("toric");
    for n in [6, 8, 10, 12] {
        let m = toric(n);
        g.bench_with_input(BenchmarkId::new("count_chains", n), &m, |b, m| {
            b.iter(|| count_maximal_chains(&m.lower(), &m.upper()))
        });
    }
    for n in [5, 6, 7] {
        let m = toric(n);
        g.bench_with_input(BenchmarkId::new("simplices", n), &m, |b, m| b.iter(|| triangulate_toric(black_box(m))));
    }
    g.finish();
}

criterion_group!(benches, volumes, chains);
criterion_main!(benches);
