//! Agreement checks and timing against a loaded lexicon.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{LexEntry, Lexicon};
use crate::error::{Error, Result};
use crate::grammeme::{parse_code, FormSpec, Grammeme, Pos};
use crate::Engine;

/// Table of lemmas known to carry dictionary errors; they are reported but
/// not scored. Each line is a lemma, optionally followed by the families it
/// applies to.
const SKIP_TABLE: &str = "corpus_skip";

/// One cell where the engine disagrees with every dictionary variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub pos: Pos,
    pub lemma: String,
    pub cell: FormSpec,
    /// All dictionary variants for the cell.
    pub expected: Vec<String>,
    /// The engine's form, `None` when it reported the form absent.
    pub produced: Option<String>,
}

impl Mismatch {
    /// `pos<TAB>lemma<TAB>codes<TAB>expected|variants<TAB>produced`; an
    /// absent form is written `-`.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.pos.name(),
            self.lemma,
            self.cell.code_string(),
            self.expected.join("|"),
            self.produced.as_deref().unwrap_or("-")
        )
    }

    /// Parses a row written by [`Mismatch::to_tsv`].
    pub fn from_tsv(line: &str) -> Result<Mismatch> {
        let bad = || Error::InvalidLemma { lemma: line.to_string(), expected: "mismatch row" };
        let fields: Vec<&str> = line.trim_end_matches(['\r', '\n']).split('\t').collect();
        let [pos, lemma, codes, expected, produced] = fields[..] else { return Err(bad()) };
        let pos: Pos = pos.parse()?;
        let mut cell = FormSpec { pos: Some(pos), ..Default::default() };
        for code in codes.split(';').filter(|c| !c.is_empty()) {
            match parse_code(code)? {
                Grammeme::Person(v) => cell.person = Some(v),
                Grammeme::Number(v) => cell.number = Some(v),
                Grammeme::Gender(v) => cell.gender = Some(v),
                Grammeme::Tense(v) => cell.tense = Some(v),
                Grammeme::Case(v) => cell.case = Some(v),
                Grammeme::Animacy(v) => cell.animacy = Some(v),
                Grammeme::Degree(v) => cell.degree = Some(v),
                Grammeme::NumeralKind(v) => cell.numeral_kind = Some(v),
            }
        }
        Ok(Mismatch {
            pos,
            lemma: lemma.to_string(),
            cell,
            expected: expected.split('|').map(str::to_string).collect(),
            produced: (produced != "-").then(|| produced.to_string()),
        })
    }

    /// Regenerates the cell from the lemma alone and checks that the engine
    /// still produces the recorded form, and that it still disagrees.
    pub fn reproduce(&self, engine: &Engine) -> bool {
        let now = engine.form(&self.lemma, &self.cell).ok();
        now == self.produced && !now.as_ref().is_some_and(|f| self.expected.contains(f))
    }
}

/// Outcome for one lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaResult {
    Agreed,
    Disagreed(Vec<Mismatch>),
    /// No grid cell is attested in the dictionary.
    NoReference,
    /// The engine refused the lemma outright.
    Rejected(String),
    /// Listed in the skip table.
    Skipped,
}

#[derive(Debug, Clone, Default)]
pub struct AgreementReport {
    pub pos: Option<Pos>,
    /// Lemmas examined, including skipped and unreferenced ones.
    pub sampled: usize,
    /// Lemmas scored: agreed, disagreed or rejected.
    pub total: usize,
    pub agreed: usize,
    pub no_reference: usize,
    pub skipped: Vec<String>,
    pub rejected: Vec<(String, String)>,
    pub cells_compared: usize,
    pub cells_agreed: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl AgreementReport {
    /// Share of scored lemmas whose every attested cell matches.
    pub fn agreement(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.agreed as f64 / self.total as f64
        }
    }

    pub fn cell_agreement(&self) -> f64 {
        if self.cells_compared == 0 {
            0.0
        } else {
            self.cells_agreed as f64 / self.cells_compared as f64
        }
    }

    /// All mismatch rows with a header line.
    pub fn mismatches_tsv(&self) -> String {
        let mut out = String::from("pos\tlemma\tcell\texpected\tproduced\n");
        for m in &self.mismatches {
            out.push_str(&m.to_tsv());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = self.pos.map(Pos::name).unwrap_or("?");
        writeln!(f, "{pos}: {}/{} lemmas agree ({:.3}%)", self.agreed, self.total, 100.0 * self.agreement())?;
        writeln!(
            f,
            "  cells: {}/{} ({:.3}%)",
            self.cells_agreed,
            self.cells_compared,
            100.0 * self.cell_agreement()
        )?;
        writeln!(
            f,
            "  sampled {}, no reference {}, rejected {}, skipped {}, mismatching cells {}",
            self.sampled,
            self.no_reference,
            self.rejected.len(),
            self.skipped.len(),
            self.mismatches.len()
        )?;
        write!(f, "  elapsed {:.2?}", self.elapsed)
    }
}

fn is_skipped(engine: &Engine, lemma: &str, pos: Pos) -> bool {
    match engine.table(SKIP_TABLE).get(lemma) {
        Some(families) => families.is_empty() || families.iter().any(|f| f.parse::<Pos>().ok() == Some(pos)),
        None => false,
    }
}

/// Compares one dictionary entry with the engine's paradigm.
pub fn check_entry(engine: &Engine, lexicon: &Lexicon, entry: &LexEntry, pos: Pos) -> (LemmaResult, usize, usize) {
    let lemma = entry.lemma(lexicon);
    if is_skipped(engine, lemma, pos) {
        return (LemmaResult::Skipped, 0, 0);
    }
    let paradigm = match engine.paradigm(pos, lemma) {
        Ok(p) => p,
        Err(e) => return (LemmaResult::Rejected(e.to_string()), 0, 0),
    };
    let mut compared = 0;
    let mut agreed = 0;
    let mut mismatches = Vec::new();
    for cell in &paradigm.cells {
        let mut expected: Vec<String> = Vec::new();
        for (form, tag) in &entry.forms {
            if lexicon.tag(*tag).mapped.covers(&cell.spec) && !expected.contains(form) {
                expected.push(form.clone());
            }
        }
        if expected.is_empty() {
            continue;
        }
        compared += 1;
        let produced = cell.form.as_ref().ok();
        if produced.is_some_and(|p| expected.contains(p)) {
            agreed += 1;
        } else {
            mismatches.push(Mismatch {
                pos,
                lemma: lemma.to_string(),
                cell: cell.spec,
                expected,
                produced: produced.cloned(),
            });
        }
    }
    let result = if compared == 0 {
        LemmaResult::NoReference
    } else if mismatches.is_empty() {
        LemmaResult::Agreed
    } else {
        LemmaResult::Disagreed(mismatches)
    };
    (result, compared, agreed)
}

/// Scores the given entries in parallel.
pub fn verify_entries(engine: &Engine, lexicon: &Lexicon, pos: Pos, entries: &[&LexEntry]) -> AgreementReport {
    let start = Instant::now();
    let results: Vec<(String, (LemmaResult, usize, usize))> = entries
        .par_iter()
        .map(|e| (e.lemma(lexicon).to_string(), check_entry(engine, lexicon, e, pos)))
        .collect();
    let mut report = AgreementReport { pos: Some(pos), sampled: entries.len(), ..Default::default() };
    for (lemma, (result, compared, agreed)) in results {
        report.cells_compared += compared;
        report.cells_agreed += agreed;
        match result {
            LemmaResult::Agreed => {
                report.total += 1;
                report.agreed += 1;
            }
            LemmaResult::Disagreed(m) => {
                report.total += 1;
                report.mismatches.extend(m);
            }
            LemmaResult::Rejected(reason) => {
                report.total += 1;
                report.rejected.push((lemma, reason));
            }
            LemmaResult::NoReference => report.no_reference += 1,
            LemmaResult::Skipped => report.skipped.push(lemma),
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Scores a seed-determined sample of `n` lemmas (`None`: the whole
/// population) of `pos`.
pub fn verify(engine: &Engine, lexicon: &Lexicon, pos: Pos, n: Option<usize>, seed: u64) -> AgreementReport {
    let entries = lexicon.sample(pos, n, seed);
    verify_entries(engine, lexicon, pos, &entries)
}

/// Per-lemma timings of full paradigm generation.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub pos: Pos,
    pub lemmas: usize,
    pub median: Duration,
    pub mean: Duration,
    pub p95: Duration,
    pub max: Duration,
    pub machine: String,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} lemmas, median {:.3} ms, mean {:.3} ms, p95 {:.3} ms, max {:.3} ms [{}]",
            self.pos,
            self.lemmas,
            self.median.as_secs_f64() * 1e3,
            self.mean.as_secs_f64() * 1e3,
            self.p95.as_secs_f64() * 1e3,
            self.max.as_secs_f64() * 1e3,
            self.machine
        )
    }
}

/// Times the whole paradigm of each lemma, one at a time on this thread.
/// Lemmas the engine rejects are timed too.
pub fn bench_lemmas(engine: &Engine, pos: Pos, lemmas: &[&str]) -> BenchReport {
    let mut times: Vec<Duration> = lemmas
        .iter()
        .map(|lemma| {
            let start = Instant::now();
            let out = engine.paradigm(pos, lemma);
            let t = start.elapsed();
            std::hint::black_box(out.ok());
            t
        })
        .collect();
    times.sort_unstable();
    let pick = |q: f64| times.get(((times.len().saturating_sub(1)) as f64 * q).round() as usize).copied().unwrap_or_default();
    let total: Duration = times.iter().sum();
    BenchReport {
        pos,
        lemmas: times.len(),
        median: pick(0.5),
        mean: if times.is_empty() { Duration::ZERO } else { total / times.len() as u32 },
        p95: pick(0.95),
        max: times.last().copied().unwrap_or_default(),
        machine: machine_description(),
    }
}

/// Times a seed-determined sample of `n` lemmas of `pos`.
pub fn bench(engine: &Engine, lexicon: &Lexicon, pos: Pos, n: usize, seed: u64) -> BenchReport {
    let entries = lexicon.sample(pos, Some(n), seed);
    let lemmas: Vec<&str> = entries.iter().map(|e| e.lemma(lexicon)).collect();
    bench_lemmas(engine, pos, &lemmas)
}

/// CPU model, logical cores and OS, for labelling timings.
pub fn machine_description() -> String {
    let cpu = std::fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|info| {
            info.lines()
                .find(|l| l.starts_with("model name"))
                .and_then(|l| l.split_once(':'))
                .map(|(_, v)| v.trim().to_string())
        })
        .unwrap_or_else(|| "unknown cpu".to_string());
    let cores = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{cpu}, {cores} threads, {}-{}", std::env::consts::OS, std::env::consts::ARCH);
    out
}
