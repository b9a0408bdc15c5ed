use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use jinv_core::chow::{admissible_tuples, kac_signature, GroupLabel};
use jinv_core::liealg::{Family, RootSystem, DEFAULT_WEYL_CAP};
use jinv_core::steinberg::steinberg_table;
use jinv_core::{charmap_image, cocenter, LatticeChoice};

fn weyl_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_weyl");
    group.sample_size(10);
    for (family, n) in [(Family::D, 4), (Family::B, 5), (Family::D, 6)] {
        let rs = RootSystem::new(family, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&rs), &rs, |b, rs| {
            b.iter(|| rs.enumerate_weyl(DEFAULT_WEYL_CAP).unwrap().len())
        });
    }
    group.finish();
}

fn steinberg(c: &mut Criterion) {
    let mut group = c.benchmark_group("steinberg_table");
    group.sample_size(10);
    for n in [4, 5, 6] {
        let rs = RootSystem::new(Family::D, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&rs), &rs, |b, rs| {
            b.iter(|| steinberg_table(rs, DEFAULT_WEYL_CAP).unwrap().len())
        });
    }
    group.finish();
}

fn lattices(c: &mut Criterion) {
    let d8 = RootSystem::new(Family::D, 8).unwrap();
    c.bench_function("cocenter D8", |b| b.iter(|| cocenter(black_box(&d8)).order()));
    c.bench_function("charmap D8 half_spin_plus", |b| {
        b.iter(|| charmap_image(black_box(&d8), LatticeChoice::HalfSpinPlus, 2).unwrap().dim())
    });
}

fn admissible(c: &mut Criterion) {
    let mut group = c.benchmark_group("admissible_tuples");
    for g in [GroupLabel::Pgo(4), GroupLabel::So(16), GroupLabel::Pgo(8)] {
        let sig = kac_signature(g).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(g), &sig, |b, sig| {
            b.iter(|| admissible_tuples(sig).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, weyl_enumeration, steinberg, lattices, admissible);
criterion_main!(benches);
