use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use flexia::wire::{self, Function, Query};
use flexia::{Engine, Pos};
use flexia_bench::{fixture_lemmas, load_fixture, ADJECTIVES, NOUNS, VERBS};

fn hand_picked(c: &mut Criterion) {
    let engine = Engine::builtin();
    let mut group = c.benchmark_group("paradigm");
    for (pos, lemmas) in [(Pos::Noun, NOUNS), (Pos::Adjective, ADJECTIVES), (Pos::Verb, VERBS)] {
        group.bench_with_input(BenchmarkId::new("hand-picked", pos.name()), lemmas, |b, lemmas| {
            b.iter(|| {
                for lemma in lemmas {
                    black_box(engine.paradigm(pos, lemma).ok());
                }
            })
        });
    }
    group.finish();
}

fn corpus_sample(c: &mut Criterion) {
    let engine = Engine::builtin();
    let lexicon = load_fixture().expect("fixture");
    let mut group = c.benchmark_group("corpus-sample");
    group.sample_size(20);
    for pos in [Pos::Noun, Pos::Adjective, Pos::Verb, Pos::Gerund, Pos::Imperative] {
        let lemmas = fixture_lemmas(&lexicon, pos, 200);
        group.bench_with_input(BenchmarkId::from_parameter(pos.name()), &lemmas, |b, lemmas| {
            b.iter(|| {
                for lemma in lemmas {
                    black_box(engine.paradigm(pos, lemma).ok());
                }
            })
        });
    }
    group.finish();
}

fn wire_queries(c: &mut Criterion) {
    let engine = Engine::builtin();
    let bytes = "ru_noun;машина;cr;nx\0".as_bytes();
    c.bench_function("wire/handle_bytes", |b| b.iter(|| black_box(wire::handle_bytes(&engine, bytes))));
    let query = Query::new(Function::Verb, ["изучить", "p1", "n1", "gm", "tc"]);
    c.bench_function("wire/dispatch verb", |b| b.iter(|| black_box(wire::dispatch(&engine, &query))));
}

fn synthesis(c: &mut Criterion) {
    let engine = Engine::builtin();
    c.bench_function("synthesis/formula", |b| {
        b.iter(|| black_box(engine.formula_str_to_text("2+3=5").ok()))
    });
}

criterion_group!(benches, hand_picked, corpus_sample, wire_queries, synthesis);
criterion_main!(benches);
