use criterion::{criterion_group, criterion_main, Criterion};
use pargap_core::{
    build_root_system, build_structure_constants, hasse_length2, run_query,
    submax_dimension, verify_tables, Family, LieType, Parabolic,
};

fn e8() -> LieType {
    LieType { family: Family::E, rank: 8 }
}

fn root_system_e8(c: &mut Criterion) {
    c.bench_function("build_root_system E8", |b| {
        b.iter(|| build_root_system(e8()).unwrap())
    });
}

fn hasse_e8_full_flag(c: &mut Criterion) {
    let rs = build_root_system(e8()).unwrap();
    let p = Parabolic::new((1..=8).collect(), 8).unwrap();
    c.bench_function("hasse_length2 E8 full flag", |b| {
        b.iter(|| hasse_length2(&rs, &p).unwrap())
    });
}

fn submax_e8_p8(c: &mut Criterion) {
    let rs = build_root_system(e8()).unwrap();
    let p = Parabolic::new(vec![8], 8).unwrap();
    c.bench_function("submax_dimension E8/P8", |b| {
        b.iter(|| submax_dimension(&rs, &p).unwrap())
    });
}

fn query_c6_triple_flag(c: &mut Criterion) {
    let t = LieType { family: Family::C, rank: 6 };
    c.bench_function("run_query C6/P{1,2,5}", |b| {
        b.iter(|| run_query(t, &[1, 2, 5], false).unwrap())
    });
}

fn structure_constants_f4(c: &mut Criterion) {
    let t = LieType { family: Family::F, rank: 4 };
    c.bench_function("build_structure_constants F4", |b| {
        b.iter(|| build_structure_constants(t).unwrap())
    });
}

fn tables_rank_4(c: &mut Criterion) {
    c.bench_function("verify_tables rank 4", |b| {
        b.iter(|| verify_tables(4).unwrap())
    });
}

criterion_group!(
    benches,
    root_system_e8,
    hasse_e8_full_flag,
    submax_e8_p8,
    query_c6_triple_flag,
    structure_constants_f4,
    tables_rank_4,
);
criterion_main!(benches);
