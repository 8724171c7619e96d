use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use multidom::exact::{exact_function_number, exact_set_number, FunctionLimits, DEFAULT_SET_LIMIT};
use multidom::{generate, verify_set, Construction, DominationSpec, Graph, GraphFamily, GraphFamilySpec};

fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GraphFamilySpec::new(GraphFamily::Gnp { n, p }, seed)).unwrap()
}

fn exact_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact set");
    for n in [12usize, 16, 20] {
        let g = gnp(n, 0.3, 1);
        let spec = DominationSpec::KTuple { k: 2 };
        if spec.check_feasible(&g).is_err() {
            continue;
        }
        group.bench_with_input(BenchmarkId::new("ktuple:2", n), &g, |b, g| {
            b.iter(|| exact_set_number(black_box(g), &spec, DEFAULT_SET_LIMIT).unwrap())
        });
    }
    group.finish();

    let g = gnp(10, 0.4, 2);
    let spec = DominationSpec::BraceK { k: 2 };
    c.bench_function("exact bracek:2 n=10", |b| {
        b.iter(|| exact_function_number(black_box(&g), &spec, FunctionLimits::default()).unwrap())
    });
}

fn constructions(c: &mut Criterion) {
    let g = gnp(200, 0.1, 3);
    let mut group = c.benchmark_group("construction trial n=200");
    for spec in [DominationSpec::KTuple { k: 2 }, DominationSpec::BraceK { k: 2 }, DominationSpec::TotalK { k: 1 }] {
        let construction = Construction::new(&g, &spec).unwrap();
        group.bench_function(spec.to_string(), |b| {
            let mut index = 0;
            b.iter(|| {
                index += 1;
                construction.trial(black_box(9), index)
            })
        });
    }
    group.finish();

    let spec = DominationSpec::KTuple { k: 2 };
    let set: Vec<usize> = (0..g.n()).step_by(2).collect();
    c.bench_function("verify_set n=200", |b| b.iter(|| verify_set(black_box(&g), &spec, black_box(&set)).unwrap()));
}

criterion_group!(benches, exact_search, constructions);
criterion_main!(benches);
