//! Acceptance run: prints one PASS/FAIL line per criterion.
//!
//! Runs on the checked-in dictionary sample. Setting `FLEXIA_CORPUS` to a
//! full OpenCorpora dump adds the full-corpus agreement and runtime checks.
//! The process exits non-zero on a failed criterion only when
//! `FLEXIA_STRICT_ACCEPTANCE` is set, so that known shortfalls are reported
//! without breaking `cargo test`.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::checks::{self, Check};
use common::{fixture_lemmas, gradable_adverbs, random_lemmas, FIXTURE, SEED};
use flexia::corpus::{self, bench_lemmas, machine_description, sample_entries, verify, Lexicon, Mismatch};
use flexia::wire::{self, send_raw, Server};
use flexia::{Engine, Grammeme, Pos};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TIMEOUT: Duration = Duration::from_secs(10);

/// Families with dictionary agreement targets, and the published full-corpus
/// rates (percent) they are compared with.
const AGREEMENT: [(Pos, f64); 5] = [
    (Pos::Noun, 98.557),
    (Pos::Verb, 98.678),
    (Pos::Adjective, 98.489),
    (Pos::Gerund, 99.157),
    (Pos::Imperative, 95.327),
];

struct Outcome {
    id: &'static str,
    name: &'static str,
    /// `None` for a check that could not run.
    pass: Option<bool>,
    detail: String,
}

impl Outcome {
    fn new(id: &'static str, name: &'static str, pass: bool, detail: String) -> Self {
        Outcome { id, name, pass: Some(pass), detail }
    }

    fn print(&self) {
        let status = match self.pass {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        println!("{status} [{}] {}: {}", self.id, self.name, self.detail);
    }
}

fn cardinalities() -> Outcome {
    let expected = [
        (Pos::Noun, 12),
        (Pos::Verb, 24),
        (Pos::Adjective, 28),
        (Pos::Adverb, 2),
        (Pos::Ordinal, 18),
        (Pos::Cardinal, 24),
        (Pos::PresentActiveParticiple, 28),
        (Pos::PastActiveParticiple, 28),
        (Pos::PastPassiveParticiple, 28),
        (Pos::Gerund, 2),
        (Pos::Imperative, 2),
    ];
    let engine = Engine::builtin();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pass = true;
    let mut parts = Vec::new();
    for (pos, n) in expected {
        let lemmas: Vec<String> = match pos {
            Pos::Ordinal | Pos::Cardinal => (0..100).map(|_| rng.gen_range(0..=9999u32).to_string()).collect(),
            Pos::Adverb => sample_entries(gradable_adverbs(), Some(100), SEED),
            Pos::PresentActiveParticiple | Pos::PastActiveParticiple | Pos::PastPassiveParticiple => {
                random_lemmas(Pos::Verb, 100, SEED)
            }
            _ => random_lemmas(pos, 100, SEED),
        };
        let good = lemmas
            .iter()
            .filter(|l| engine.paradigm(pos, l).is_ok_and(|p| p.len() == n))
            .count();
        pass &= good == 100 && lemmas.len() == 100;
        parts.push(format!("{pos} {n}: {good}/{}", lemmas.len()));
    }
    Outcome::new("1", "paradigm cardinalities", pass, parts.join(", "))
}

fn wire_example() -> Outcome {
    let server = Server::bind("127.0.0.1:0", Engine::builtin()).and_then(Server::spawn);
    let server = match server {
        Ok(s) => s,
        Err(e) => return Outcome::new("2", "wire byte-exactness", false, format!("cannot start server: {e}")),
    };
    let start = Instant::now();
    let reply = send_raw(server.addr(), "ru_noun;машина;cr;nx\0".as_bytes(), TIMEOUT);
    let elapsed = start.elapsed();
    match reply {
        Ok(bytes) => {
            // send_raw strips exactly one trailing zero.
            let exact = bytes == "машин".as_bytes();
            let fast = elapsed < Duration::from_millis(50);
            let detail = format!(
                "reply {:?}+0x00, round trip {:.2} ms (limit 50 ms)",
                String::from_utf8_lossy(&bytes),
                elapsed.as_secs_f64() * 1e3
            );
            Outcome::new("2", "wire byte-exactness", exact && fast, detail)
        }
        Err(e) => Outcome::new("2", "wire byte-exactness", false, format!("query failed: {e}")),
    }
}

fn sample_agreement(engine: &Engine) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (pos, _) in AGREEMENT {
        let report = verify(engine, &FIXTURE, pos, None, SEED);
        let ok = report.sampled == 1000 && report.agreement() >= 0.90;
        pass &= ok;
        parts.push(format!(
            "{pos} {:.1}%{}",
            report.agreement() * 100.0,
            if ok { "" } else { " (<90%)" }
        ));
    }
    Outcome::new("3", "agreement >= 90% on 1000 seed-42 lemmas per family", pass, parts.join(", "))
}

fn full_corpus(engine: &Engine) -> Vec<Outcome> {
    let Some(path) = std::env::var_os("FLEXIA_CORPUS").map(PathBuf::from) else {
        let skip = |id, name| Outcome { id, name, pass: None, detail: "set FLEXIA_CORPUS to a dictionary dump".into() };
        return vec![
            skip("3s", "full-corpus agreement within 5 pp of the published rates"),
            skip("3t", "full noun corpus verified within 15 min"),
        ];
    };
    let lexicon: Lexicon = match corpus::ingest_dump(&path) {
        Ok(l) => l,
        Err(e) => {
            return vec![Outcome::new("3s", "full-corpus agreement", false, format!("cannot load {}: {e}", path.display()))]
        }
    };
    let mut pass = true;
    let mut parts = Vec::new();
    let mut noun_time = Duration::ZERO;
    for (pos, published) in AGREEMENT {
        let report = verify(engine, &lexicon, pos, None, SEED);
        if pos == Pos::Noun {
            noun_time = report.elapsed;
        }
        let rate = report.agreement() * 100.0;
        let ok = (rate - published).abs() <= 5.0;
        pass &= ok;
        parts.push(format!("{pos} {rate:.3}% vs {published}%{}", if ok { "" } else { " (off by > 5 pp)" }));
    }
    let minutes = noun_time.as_secs_f64() / 60.0;
    vec![
        Outcome::new("3s", "full-corpus agreement within 5 pp of the published rates", pass, parts.join(", ")),
        Outcome::new(
            "3t",
            "full noun corpus verified within 15 min",
            minutes <= 15.0,
            format!("{:.1} s", noun_time.as_secs_f64()),
        ),
    ]
}

fn speed(engine: &Engine) -> Outcome {
    let limits = [(Pos::Noun, 20.0), (Pos::Adjective, 1.4), (Pos::Verb, 100.0)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (pos, limit_ms) in limits {
        let lemmas = fixture_lemmas(pos);
        let refs: Vec<&str> = lemmas.iter().map(String::as_str).collect();
        let report = bench_lemmas(engine, pos, &refs);
        let median = report.median.as_secs_f64() * 1e3;
        let ok = report.lemmas >= 1000 && median <= limit_ms;
        pass &= ok;
        parts.push(format!("{pos} median {median:.4} ms over {} (limit {limit_ms} ms)", report.lemmas));
    }
    let build = if cfg!(debug_assertions) { "debug build" } else { "release build" };
    parts.push(format!("{build}, {}", machine_description()));
    Outcome::new("4", "per-word paradigm speed", pass, parts.join("; "))
}

/// Runs a check over inputs and names the first failures.
fn suite<T>(name: &str, inputs: impl IntoIterator<Item = T>, check: impl Fn(T) -> Check) -> (String, usize, Vec<String>) {
    let mut runs = 0;
    let mut failures = Vec::new();
    for input in inputs {
        runs += 1;
        if let Err(e) = check(input) {
            failures.push(e);
        }
    }
    (name.to_string(), runs, failures)
}

fn random_text(rng: &mut ChaCha8Rng) -> String {
    const CHARS: &[char] = &['а', 'б', 'е', 'ё', 'Ё', 'Ж', 'к', 'о', 'я', 'Я', 'ъ', '-', ' ', '\t', 'a', 'Z', '7', '_'];
    let len = rng.gen_range(0..16);
    (0..len).map(|_| CHARS[rng.gen_range(0..CHARS.len())]).collect()
}

fn random_cyrillic(rng: &mut ChaCha8Rng) -> String {
    let len = rng.gen_range(2..12);
    (0..len)
        .map(|_| {
            let c = char::from_u32(0x430 + rng.gen_range(0..32)).unwrap();
            if rng.gen_bool(0.1) { 'ё' } else { c }
        })
        .collect()
}

fn properties(engine: &Engine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let texts: Vec<String> = (0..2000).map(|_| random_text(&mut rng)).collect();
    let words: Vec<String> = (0..1000).map(|_| random_cyrillic(&mut rng)).collect();
    let nouns = fixture_lemmas(Pos::Noun);
    let adjectives = fixture_lemmas(Pos::Adjective);
    let verbs = fixture_lemmas(Pos::Verb);
    let few = |v: &[String]| sample_entries(v.to_vec(), Some(100), SEED);
    let listed: Vec<String> = engine
        .tables()
        .get("noun_indeclinable")
        .exact_entries()
        .map(|(k, _)| k.to_string())
        .collect();
    let e = engine;
    let results = vec![
        suite("code round-trip", Grammeme::all(), checks::code_round_trip),
        suite("normalize idempotence", texts.iter().chain(&words), |t| checks::normalize_idempotent(t)),
        suite("normalize output clean", texts.iter().chain(&words), |t| checks::normalize_clean(t)),
        suite("nominative identity", nouns.iter().chain(&words), |l| checks::nominative_identity(e, l)),
        suite("indeclinable constancy", nouns.iter().chain(&listed).chain(&words), |l| {
            checks::indeclinable_constant(e, l)
        }),
        suite("adjective accusative identities", &adjectives, |l| checks::accusative_identities(e, l)),
        suite("participle accusative identities", few(&verbs), |v| checks::participle_accusative_identities(e, &v)),
        suite("past person/gender irrelevance", &verbs, |v| checks::past_irrelevance(e, v)),
        suite("reflexive closure", &verbs, |v| checks::reflexive_closure(e, v)),
        suite("agreement_class periodicity", 0..=9999u64, checks::agreement_class_periodic),
        suite("sentinel: noun paradigm", few(&nouns), |l| checks::noun_override(&l)),
        suite("sentinel: indeclinable", few(&nouns), |l| checks::indeclinable_override(&l)),
        suite("sentinel: gerund", few(&verbs), |v| checks::gerund_override(&v)),
        suite("sentinel: imperative", few(&verbs), |v| checks::imperative_override(&v)),
        suite("sentinel: verb paradigm", few(&verbs), |v| checks::verb_paradigm_override(&v)),
        suite("sentinel: passive participle", few(&verbs), |v| checks::passive_override(&v)),
        suite("sentinel: comparative", sample_entries(gradable_adverbs(), Some(100), SEED), |a| {
            checks::comparative_override(&a)
        }),
        suite("determinism", few(&nouns).into_iter().map(|l| (Pos::Noun, l))
            .chain(few(&adjectives).into_iter().map(|l| (Pos::Adjective, l)))
            .chain(few(&verbs).into_iter().map(|l| (Pos::Verb, l)))
            .chain(few(&verbs).into_iter().map(|l| (Pos::Gerund, l)))
            .chain((0..100).map(|i| (Pos::Cardinal, (i * 97).to_string()))),
            |(pos, l)| checks::deterministic(pos, &l)),
    ];
    let failed: Vec<String> = results
        .iter()
        .filter(|(_, _, f)| !f.is_empty())
        .map(|(name, runs, f)| format!("{name}: {}/{runs} violations, e.g. {}", f.len(), f[0]))
        .collect();
    let runs: usize = results.iter().map(|(_, r, _)| r).sum();
    let detail = if failed.is_empty() {
        format!("{} suites, {runs} checks, no violations", results.len())
    } else {
        failed.join("; ")
    };
    Outcome::new("5", "property suites", failed.is_empty(), detail)
}

/// A query that must be refused; the variety covers every error path.
fn malformed(rng: &mut ChaCha8Rng, i: usize) -> Vec<u8> {
    let junk = |rng: &mut ChaCha8Rng, n: usize| -> Vec<u8> { (0..n).map(|_| rng.gen_range(1..=255u8)).collect() };
    match i % 10 {
        // No terminator at all.
        0 => {
            let n = rng.gen_range(1..64);
            junk(rng, n)
        }
        // Random bytes, terminated.
        1 => {
            let n = rng.gen_range(1..64);
            let mut b = junk(rng, n);
            b.push(0);
            b
        }
        // Invalid UTF-8 inside a plausible query.
        2 => [b"ru_noun;".as_slice(), &[0xd0, 0xff, 0xfe], b";cr;nx\0"].concat(),
        // Empty and blank queries.
        3 => [b"\0".as_slice(), b" \0", b"\t \0"][rng.gen_range(0..3)].to_vec(),
        // Unknown function.
        4 => format!("x{};машина;cr;nx\0", rng.gen_range(0..1_000_000)).into_bytes(),
        // Unknown or repeated codes.
        5 => {
            let bad = ["zz", "CR", "n3", "c", "cr;cr", "nx;n1"][rng.gen_range(0..6)];
            format!("ru_noun;машина;{bad};nx\0").into_bytes()
        }
        // Missing arguments.
        6 => ["ru_noun\0", "ru_verb;читать;p1\0", "ru_adjective;\0", "ru_imperative;читать\0", "ru_adverb;быстро\0"]
            [rng.gen_range(0..5)]
            .as_bytes()
            .to_vec(),
        // Words that are not Russian.
        7 => format!("ru_noun;word{};cr;nx\0", rng.gen_range(0..1000)).into_bytes(),
        // Oversized frame.
        8 => {
            let mut b = b"ru_noun;".to_vec();
            b.extend(std::iter::repeat(b'a').take(wire::MAX_QUERY_BYTES + 10));
            b.push(0);
            b
        }
        // Numbers out of range or unparsable.
        _ => format!("ru_numeral;{};card\0", ["123456", "-5", "1e3", "x"][rng.gen_range(0..4)]).into_bytes(),
    }
}

fn robustness() -> Outcome {
    let name = "10,000 malformed queries";
    let server = match Server::bind("127.0.0.1:0", Engine::builtin()).and_then(Server::spawn) {
        Ok(s) => s,
        Err(e) => return Outcome::new("6", name, false, format!("cannot start server: {e}")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut refused, mut wrong, mut broken) = (0, Vec::new(), 0);
    for i in 0..10_000 {
        let query = malformed(&mut rng, i);
        match send_raw(server.addr(), &query, TIMEOUT) {
            Ok(reply) if reply.starts_with(b"ERR:") => refused += 1,
            Ok(reply) => wrong.push(String::from_utf8_lossy(&reply).into_owned()),
            Err(_) => broken += 1,
        }
    }
    let after = wire::query(server.addr(), "ru_noun;машина;cr;nx", TIMEOUT);
    let healthy = after.as_deref().is_ok_and(|r| r == "машин");
    let pass = refused == 10_000 && healthy;
    let mut detail = format!("{refused}/10000 answered ERR:, {broken} connection failures, then {after:?}");
    if let Some(w) = wrong.first() {
        detail.push_str(&format!(", {} non-error replies, e.g. {w:?}", wrong.len()));
    }
    Outcome::new("6", name, pass, detail)
}

fn report_fidelity(engine: &Engine) -> Outcome {
    let mut rows: Vec<Mismatch> = Vec::new();
    for (pos, _) in AGREEMENT {
        rows.extend(verify(engine, &FIXTURE, pos, None, SEED).mismatches);
    }
    let total = rows.len();
    let picked = sample_entries(rows, Some(100), SEED);
    // Standalone: a fresh engine and only the serialized row.
    let fresh = Engine::with_tables(flexia::Tables::builtin());
    let failures: Vec<String> = picked
        .iter()
        .map(|m| m.to_tsv())
        .filter(|row| !Mismatch::from_tsv(row).is_ok_and(|m| m.reproduce(&fresh)))
        .collect();
    let pass = picked.len() == 100 && failures.is_empty();
    let mut detail = format!("{}/{} sampled rows of {total} reproduce", picked.len() - failures.len(), picked.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!(", e.g. not {f:?}"));
    }
    Outcome::new("7", "mismatch rows reproduce standalone", pass, detail)
}

fn main() {
    let engine = Engine::builtin();
    let mut outcomes = vec![cardinalities(), wire_example(), sample_agreement(&engine)];
    outcomes.extend(full_corpus(&engine));
    outcomes.extend([speed(&engine), properties(&engine), robustness(), report_fidelity(&engine)]);

    println!();
    println!("acceptance criteria");
    for o in &outcomes {
        o.print();
    }
    let failed = outcomes.iter().filter(|o| o.pass == Some(false)).count();
    println!("{} passed, {failed} failed, {} skipped", outcomes.iter().filter(|o| o.pass == Some(true)).count(),
        outcomes.iter().filter(|o| o.pass.is_none()).count());
    if failed > 0 && std::env::var_os("FLEXIA_STRICT_ACCEPTANCE").is_some() {
        std::process::exit(1);
    }
}
