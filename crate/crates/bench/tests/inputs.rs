//! The bench inputs are usable before any timing is done.

use flexia::{Engine, Pos};
use flexia_bench::{fixture_lemmas, load_fixture, ADJECTIVES, NOUNS, VERBS};

#[test]
fn hand_picked_lemmas_generate() {
    let engine = Engine::builtin();
    for (pos, lemmas) in [(Pos::Noun, NOUNS), (Pos::Adjective, ADJECTIVES), (Pos::Verb, VERBS)] {
        for lemma in lemmas {
            let p = engine.paradigm(pos, lemma).unwrap_or_else(|e| panic!("{lemma}: {e}"));
            assert_eq!(p.cells.len(), flexia::benchmark_grid(pos).len(), "{lemma}");
        }
    }
}

#[test]
fn fixture_feeds_every_bench_family() {
    let lexicon = load_fixture().unwrap();
    for pos in [Pos::Noun, Pos::Adjective, Pos::Verb, Pos::Gerund, Pos::Imperative] {
        assert_eq!(fixture_lemmas(&lexicon, pos, 200).len(), 200, "{}", pos.name());
    }
}
