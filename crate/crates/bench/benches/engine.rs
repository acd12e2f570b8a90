//! Criterion benchmarks for the hot paths: reducibility decisions, packet
//! assembly over the preset battery, stability subset enumeration, and exact
//! formal-degree arithmetic.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sp4llc_core::characters::LabelGroup;
use sp4llc_core::galois::{
    self,
    presets::{preset, preset_names},
};
use sp4llc_core::induction::{decide_reducibility, InducedRep};
use sp4llc_core::rootdata::Group;
use sp4llc_core::stability::{
    minimal_stable_subsets, sp4_candidates, Context, SignConvention,
};
use sp4llc_core::supercuspidal::{
    depth_zero_by_name, formal_degree_delta_eta2, formal_degree_depth_zero,
};

fn bench_reducibility(c: &mut Criterion) {
    let lg = LabelGroup::standard();
    let inputs: Vec<InducedRep> = [
        ("nu^{2}", "nu"),
        ("nu * eta2", "eta2"),
        ("eta2", "nu^{1/3} * eta"),
        ("eta2", "eta"),
    ]
    .iter()
    .map(|(a, b)| {
        InducedRep::principal_series(
            Group::GSp4,
            lg.parse_char(a).unwrap(),
            lg.parse_char(b).unwrap(),
            lg.one(),
        )
        .unwrap()
    })
    .collect();
    c.bench_function("decide_reducibility_4_cases", |b| {
        b.iter(|| {
            for rep in &inputs {
                black_box(decide_reducibility(black_box(rep)).unwrap());
            }
        })
    });
}

fn bench_packets(c: &mut Criterion) {
    let lg = LabelGroup::standard();
    let params: Vec<_> =
        preset_names().iter().map(|n| preset(n, &lg).unwrap()).collect();
    c.bench_function("assemble_all_preset_packets", |b| {
        b.iter(|| {
            for p in &params {
                black_box(galois::assemble_packet(black_box(p)).unwrap());
            }
        })
    });
}

fn bench_stability(c: &mut Criterion) {
    let cands = sp4_candidates(SignConvention::PlusForEta2);
    c.bench_function("minimal_stable_subsets_8_candidates", |b| {
        b.iter(|| {
            black_box(
                minimal_stable_subsets(black_box(&cands), Context::NearS).unwrap(),
            )
        })
    });
}

fn bench_formal_degrees(c: &mut Criterion) {
    let reps: Vec<_> = [
        (Group::GSp4, "pi_beta_theta10_chi"),
        (Group::GSp4, "pi_alpha_eta2_chi"),
        (Group::Sp4, "pi_beta_theta10"),
        (Group::Sp4, "pi_alpha_theta"),
    ]
    .iter()
    .map(|(g, n)| depth_zero_by_name(*g, n).unwrap())
    .collect();
    c.bench_function("formal_degrees_exact", |b| {
        b.iter(|| {
            for rep in &reps {
                black_box(formal_degree_depth_zero(black_box(rep)).unwrap());
            }
            black_box(formal_degree_delta_eta2());
        })
    });
}

criterion_group!(
    benches,
    bench_reducibility,
    bench_packets,
    bench_stability,
    bench_formal_degrees
);
criterion_main!(benches);
