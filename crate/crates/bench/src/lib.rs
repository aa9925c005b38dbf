//! Inputs shared by the criterion benches.

use std::path::PathBuf;

use flexia::corpus::{self, Lexicon};
use flexia::Pos;

/// A few hand-picked lemmas per family, covering the main classes.
pub const NOUNS: &[&str] = &["машина", "стол", "окно", "день", "путь", "время", "мышь", "здание", "кофе", "рабочий"];
pub const ADJECTIVES: &[&str] = &["русский", "синий", "большой", "хороший", "новый", "мамин", "лисий"];
pub const VERBS: &[&str] = &["читать", "изучить", "нести", "печь", "любить", "рисовать", "давать", "идти", "улыбаться"];

/// The gzip corpus sample checked in next to the core crate's tests.
pub fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/opcorpora_sample.tsv.gz")
}

pub fn load_fixture() -> flexia::Result<Lexicon> {
    corpus::ingest_dump(&fixture_path())
}

/// Up to `n` sampled lemmas of one family from the fixture.
pub fn fixture_lemmas(lexicon: &Lexicon, pos: Pos, n: usize) -> Vec<String> {
    lexicon.sample(pos, Some(n), 42).into_iter().map(|e| e.lemma(lexicon).to_string()).collect()
}
