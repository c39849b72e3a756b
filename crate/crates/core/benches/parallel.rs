use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monodromy_core::braidrep::{BraidGen, Level, TkContext};
use monodromy_core::cli::{cmd_scan, RunOptions};
use monodromy_core::fusion::{block_dimension, verlinde_dimension, BlockSpec};
use monodromy_core::modular::{build_modular, modular_image_finite};
use monodromy_core::orderlab::{group_closure, ClosureMode};
use monodromy_core::par::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn lvl(l: u32) -> Level {
    Level::new(l).unwrap()
}

fn closures(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure");
    g.sample_size(10);
    let ctx = TkContext::get(lvl(8));
    let gens = vec![ctx.generator(BraidGen::G1).clone(), ctx.generator(BraidGen::G2).clone()];
    let rep = build_modular(lvl(4));
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("braid_linear_l8", name), &exec, |b, &e| {
            b.iter(|| group_closure(&gens, 20_000, ClosureMode::Linear, e).unwrap().order())
        });
        g.bench_with_input(BenchmarkId::new("modular_l4", name), &exec, |b, &e| {
            b.iter(|| modular_image_finite(&rep, 20_000, e).unwrap().order)
        });
    }
    g.finish();
}

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = RunOptions { exec, ..RunOptions::default() };
        g.bench_with_input(BenchmarkId::new("levels_1_30", name), &opts, |b, o| {
            b.iter(|| cmd_scan(1, 30, o).unwrap())
        });
    }
    g.finish();
}

fn fusion_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("fusion_sweep");
    g.sample_size(10);
    let specs: Vec<BlockSpec> = (1..=6u32)
        .flat_map(|l| {
            (0..(l + 1).pow(4)).map(move |k| {
                let w: Vec<u32> = (0..4).map(|i| (k / (l + 1).pow(i)) % (l + 1)).collect();
                BlockSpec::new(1, &w, lvl(l)).unwrap()
            })
        })
        .collect();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("genus1_four_points", name), &exec, |b, &e| {
            b.iter(|| e.map(&specs, |s| verlinde_dimension(s).unwrap() == block_dimension(s)))
        });
    }
    g.finish();
}

criterion_group!(benches, closures, scans, fusion_sweep);
criterion_main!(benches);
