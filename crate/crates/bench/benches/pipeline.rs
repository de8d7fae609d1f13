//! Pipeline benchmarks on the largest bundled fixture and on a seeded
//! random graph: validation, blob enumeration, pretree construction with
//! its betweenness tables, exhaustive axiom verification, realization, and
//! the block-cut oracle comparison.

use criterion::{criterion_group, criterion_main, Criterion};

use septree::{maximal_inseparable_sets, realize, validate, CutSystem, Pretree};
use septree_cli::blockcut;
use septree_cli::fixtures;
use septree_cli::randgen;

fn fixture_system(name: &str) -> CutSystem {
    let f = fixtures::by_name(name).expect("fixture exists");
    CutSystem::new(f.space, f.cuts).expect("fixture validates")
}

fn bench_pipeline(c: &mut Criterion) {
    let f = fixtures::by_name("path21").unwrap();
    c.bench_function("validate path21", |b| {
        b.iter(|| validate(&f.space, &f.cuts).unwrap())
    });

    c.bench_function("maximal inseparable sets path21", |b| {
        let cs = fixture_system("path21");
        b.iter(|| maximal_inseparable_sets(&cs).unwrap())
    });

    c.bench_function("pretree construction path21", |b| {
        b.iter(|| Pretree::new(fixture_system("path21")).unwrap())
    });

    let pretree = Pretree::new(fixture_system("path21")).unwrap();
    c.bench_function("axiom verification path21", |b| {
        b.iter(|| {
            let report = pretree.verify_axioms();
            assert!(report.is_ok());
        })
    });

    c.bench_function("realize path21", |b| b.iter(|| realize(&pretree).unwrap()));

    let graph = randgen::battery(7, 1, 12, 12).pop().unwrap();
    c.bench_function("blockcut oracle n=12", |b| {
        b.iter(|| {
            let cmp = blockcut::compare_with_pipeline(&graph).unwrap();
            assert!(cmp.is_match());
        })
    });
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);
