//! Sequential against parallel execution on the three hot paths: diagram
//! products, cell representations and the diamond operators.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tl_seminormal::klr::{DiamondFamily, KlrContext, Side};
use tl_seminormal::par::Exec;
use tl_seminormal::tlcore::CellRep;
use tl_seminormal::wenzl::{jones_wenzl, JwCache};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn jones_wenzl_from_scratch(c: &mut Criterion) {
    let mut g = c.benchmark_group("jones_wenzl");
    g.sample_size(10);
    for n in [7usize, 9] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| jones_wenzl(black_box(n), &JwCache::with_exec(exec)))
            });
        }
    }
    g.finish();
}

fn cell_representation(c: &mut Criterion) {
    let mut g = c.benchmark_group("cell_rep");
    g.sample_size(10);
    let cache = JwCache::new();
    for n in [8usize, 10] {
        let x = jones_wenzl(n, &cache);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &x, |b, x| b.iter(|| CellRep::of_with(black_box(x), exec)));
        }
    }
    g.finish();
}

fn diamond_family(c: &mut Criterion) {
    let mut g = c.benchmark_group("diamonds");
    g.sample_size(10);
    for n in [11usize, 12] {
        for (name, exec) in MODES {
            let ctx = KlrContext::with_exec(n, 3, exec).expect("p = 3 is prime");
            g.bench_with_input(BenchmarkId::new(name, n), &ctx, |b, ctx| {
                b.iter(|| DiamondFamily::new(black_box(ctx), Side::Left).expect("n >= p"))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, jones_wenzl_from_scratch, cell_representation, diamond_family);
criterion_main!(benches);
