use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diagram_bench::{presentation, thompson_family, unreduced_diagrams, COMMUTATIVE, DUNCE, Q};
use diagram_core::canonical::{equal_diagrams, normal_form, reduce};
use diagram_core::groupops::{absolutely_reduce, conjugate};
use diagram_core::oracle::{all_reductions, OrbitBounds};
use diagram_core::rewrite::{equal_mod_p, kb_complete, KbBudget};
use diagram_core::thompson::{embed_f, f_generators, verify_canonical_pair, EmbedOptions};
use diagram_core::Caps;

fn reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for (name, text) in [("dunce", DUNCE), ("Q", Q), ("ab=ba", COMMUTATIVE)] {
        let p = presentation(text);
        for cells in [8, 32, 128] {
            let ds = unreduced_diagrams(&p, 16, cells, 1);
            group.bench_with_input(BenchmarkId::new(name, cells), &ds, |b, ds| {
                b.iter(|| ds.iter().map(|d| reduce(&p, black_box(d)).unwrap().cells()).sum::<usize>())
            });
        }
    }
    group.finish();

    let p = presentation(Q);
    let ds = unreduced_diagrams(&p, 16, 32, 2);
    c.bench_function("normal_form/Q/32", |b| {
        b.iter(|| ds.iter().map(|d| normal_form(&p, black_box(d)).unwrap().cells()).sum::<usize>())
    });
}

fn oracle(c: &mut Criterion) {
    let p = presentation(DUNCE);
    let ds = unreduced_diagrams(&p, 8, 8, 3);
    let bounds = OrbitBounds::default();
    c.bench_function("oracle/all_reductions/8", |b| {
        b.iter(|| ds.iter().map(|d| all_reductions(&p, black_box(d), &bounds).unwrap().len()).sum::<usize>())
    });
}

fn thompson(c: &mut Criterion) {
    let p = presentation(DUNCE);
    let xs = thompson_family(12);
    c.bench_function("thompson/conjugate_x12_by_x0", |b| b.iter(|| conjugate(&p, black_box(&xs[12]), &xs[0]).unwrap()));
    c.bench_function("thompson/equal_x11_x12", |b| b.iter(|| equal_diagrams(&p, &xs[11], &xs[12]).unwrap()));
    c.bench_function("thompson/absolutely_reduce_x8", |b| b.iter(|| absolutely_reduce(&p, &xs[8]).unwrap()));
    let (y0, y1) = f_generators();
    c.bench_function("thompson/verify_canonical_pair", |b| {
        b.iter(|| verify_canonical_pair(&p, black_box(&y0), &y1).unwrap())
    });
    let q = presentation(Q);
    let ab = q.parse_word("a b").unwrap();
    c.bench_function("thompson/embed_f_Q_ab", |b| {
        b.iter(|| embed_f(&q, black_box(&ab), EmbedOptions::default()).unwrap())
    });
}

fn word_problem(c: &mut Criterion) {
    let p = presentation(COMMUTATIVE);
    let u = p.parse_word("a a a b b b a b").unwrap();
    let v = p.parse_word("b b b b a a a a").unwrap();
    c.bench_function("wp/bfs_commutative_8", |b| b.iter(|| equal_mod_p(&p, black_box(&u), &v, Caps::default())));
    let hard = presentation("letters: a b\nrule: a b a = b a b\n");
    let budget = KbBudget { max_rules: 40, max_steps: 2000 };
    c.bench_function("wp/kb_braid_budget", |b| b.iter(|| kb_complete(black_box(&hard), budget).is_err()));
}

criterion_group!(benches, reduction, oracle, thompson, word_problem);
criterion_main!(benches);
