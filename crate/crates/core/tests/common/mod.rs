//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use flexia::corpus::{self, sample_entries, Lexicon};
use flexia::Pos;
use once_cell::sync::Lazy;

/// Seed of every sample drawn in the tests.
pub const SEED: u64 = 42;

pub fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/opcorpora_sample.tsv.gz")
}

/// The checked-in corpus sample: 1000 seed-42 lemmas of each family it covers.
pub static FIXTURE: Lazy<Lexicon> =
    Lazy::new(|| corpus::ingest_dump(&fixture_path()).expect("corpus fixture loads"));

/// Lemmas of the fixture sample for `pos`.
pub fn fixture_lemmas(pos: Pos) -> Vec<String> {
    FIXTURE.sample(pos, None, SEED).into_iter().map(|e| e.lemma(&FIXTURE).to_string()).collect()
}

/// `n` lemmas drawn from the fixture sample for `pos`.
pub fn random_lemmas(pos: Pos, n: usize, seed: u64) -> Vec<String> {
    sample_entries(fixture_lemmas(pos), Some(n), seed)
}

/// Adverbs of the fixture that have degrees of comparison at all.
pub fn gradable_adverbs() -> Vec<String> {
    fixture_lemmas(Pos::Adverb)
        .into_iter()
        .filter(|a| a.chars().count() > 2 && (a.ends_with('о') || a.ends_with('е')))
        .collect()
}

pub mod checks;
