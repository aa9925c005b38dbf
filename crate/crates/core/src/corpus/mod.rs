//! Verification against the OpenCorpora dictionary.
//!
//! The dump is a sequence of blank-line-separated lemma blocks: an id line,
//! then one `FORM<TAB>TAGS` line per form, where `TAGS` is the comma-joined
//! lexeme grammemes, a space, and the comma-joined form grammemes. The same
//! format, gzip-compressed and with `#` comment lines, is used for fixtures.

mod tags;
mod verify;

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grammeme::Pos;
use crate::rulebase::{fold_text, normalize};

pub use tags::{map_tags, Mapped};
pub use verify::{bench, bench_lemmas, check_entry, machine_description, verify, verify_entries, AgreementReport, BenchReport, LemmaResult, Mismatch};

/// Part-of-speech tags of the dictionary, used to reject garbled blocks.
const KNOWN_POS: &[&str] = &[
    "NOUN", "ADJF", "ADJS", "COMP", "VERB", "INFN", "PRTF", "PRTS", "GRND", "NUMR", "ADVB", "NPRO",
    "PRED", "PREP", "CONJ", "PRCL", "INTJ",
];

/// Lexeme grammemes that keep a noun out of the common-noun population.
const NOUN_EXCLUSIONS: &[&str] = &["Name", "Surn", "Patr", "Geox", "Orgn", "Trad", "Abbr", "Init", "Pltm"];
/// Same for adjectives.
const ADJ_EXCLUSIONS: &[&str] = &["Apro", "Abbr", "Name", "Surn", "Patr", "Geox", "Orgn", "Trad", "Init"];

/// An interned tag line.
#[derive(Debug, Clone)]
pub struct CorpusTag {
    pub text: String,
    pub grammemes: Vec<String>,
    pub mapped: Mapped,
}

impl CorpusTag {
    fn parse(text: &str) -> CorpusTag {
        let grammemes: Vec<String> = text
            .split([',', ' '])
            .filter(|g| !g.is_empty())
            .map(str::to_string)
            .collect();
        let refs: Vec<&str> = grammemes.iter().map(String::as_str).collect();
        let mapped = map_tags(&refs);
        CorpusTag { text: text.to_string(), grammemes, mapped }
    }

    pub fn pos(&self) -> &str {
        self.grammemes.first().map(String::as_str).unwrap_or("")
    }

    pub fn has(&self, grammeme: &str) -> bool {
        self.grammemes.iter().any(|g| g == grammeme)
    }
}

/// One lemma block.
#[derive(Debug, Clone)]
pub struct LexEntry {
    pub id: String,
    /// Normalized forms with their tag ids, in dump order.
    pub forms: Vec<(String, u32)>,
}

impl LexEntry {
    /// The citation form: the infinitive for verbs, the first form otherwise.
    pub fn lemma<'a>(&'a self, lexicon: &'a Lexicon) -> &'a str {
        self.forms
            .iter()
            .find(|(_, t)| lexicon.tag(*t).pos() == "INFN")
            .or(self.forms.first())
            .map(|(f, _)| f.as_str())
            .unwrap_or("")
    }
}

/// A loaded dictionary (or a fixture subset of one).
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    pub entries: Vec<LexEntry>,
    tags: Vec<CorpusTag>,
    /// Blocks dropped while reading.
    pub malformed: usize,
    /// Sampled ids per population, present in fixtures.
    pub samples: HashMap<Pos, Vec<String>>,
}

impl Lexicon {
    pub fn tag(&self, id: u32) -> &CorpusTag {
        &self.tags[id as usize]
    }

    pub fn tags(&self) -> &[CorpusTag] {
        &self.tags
    }

    /// True if the entry belongs to the lemma population of `pos`.
    pub fn in_population(&self, entry: &LexEntry, pos: Pos) -> bool {
        let Some((_, first)) = entry.forms.first() else { return false };
        let head = self.tag(*first);
        let any_form = |pred: &dyn Fn(&CorpusTag) -> bool| entry.forms.iter().any(|(_, t)| pred(self.tag(*t)));
        let has_infinitive = || any_form(&|t| t.pos() == "INFN");
        match pos {
            Pos::Noun => head.pos() == "NOUN" && !NOUN_EXCLUSIONS.iter().any(|g| head.has(g)),
            Pos::Adjective => head.pos() == "ADJF" && !ADJ_EXCLUSIONS.iter().any(|g| head.has(g)),
            Pos::Adverb => head.pos() == "ADVB",
            Pos::Verb => has_infinitive(),
            Pos::Gerund => has_infinitive() && any_form(&|t| t.pos() == "GRND"),
            Pos::Imperative => has_infinitive() && any_form(&|t| t.has("impr") && t.has("excl")),
            Pos::PresentActiveParticiple => {
                has_infinitive() && any_form(&|t| t.pos() == "PRTF" && t.has("pres") && t.has("actv"))
            }
            Pos::PastActiveParticiple => {
                has_infinitive() && any_form(&|t| t.pos() == "PRTF" && t.has("past") && t.has("actv"))
            }
            Pos::PastPassiveParticiple => {
                has_infinitive() && any_form(&|t| t.pos() == "PRTF" && t.has("past") && t.has("pssv"))
            }
            Pos::Ordinal | Pos::Cardinal => false,
        }
    }

    /// Entries of the `pos` population whose lemma the engine can accept at
    /// all (Cyrillic letters and hyphens), in dump order.
    pub fn population(&self, pos: Pos) -> Vec<&LexEntry> {
        self.entries
            .iter()
            .filter(|e| self.in_population(e, pos) && normalize(e.lemma(self)).is_ok())
            .collect()
    }

    /// A seed-determined sample of `n` population entries, in dump order.
    /// Fixtures carry their own sample, which takes precedence; a smaller
    /// `n` draws from it.
    pub fn sample(&self, pos: Pos, n: Option<usize>, seed: u64) -> Vec<&LexEntry> {
        if let Some(ids) = self.samples.get(&pos) {
            let by_id: HashMap<&str, &LexEntry> = self.entries.iter().map(|e| (e.id.as_str(), e)).collect();
            let recorded = ids.iter().filter_map(|id| by_id.get(id.as_str()).copied()).collect();
            return sample_entries(recorded, n, seed);
        }
        let population = self.population(pos);
        sample_entries(population, n, seed)
    }

    fn intern(&mut self, index: &mut HashMap<String, u32>, text: &str) -> u32 {
        if let Some(&id) = index.get(text) {
            return id;
        }
        let id = self.tags.len() as u32;
        self.tags.push(CorpusTag::parse(text));
        index.insert(text.to_string(), id);
        id
    }

    /// Writes the given populations' sampled entries as a gzip fixture.
    pub fn write_fixture(&self, path: &Path, samples: &[(Pos, Vec<&LexEntry>)]) -> Result<()> {
        let io = |e: std::io::Error| Error::Io { path: path.display().to_string(), reason: e.to_string() };
        let file = File::create(path).map_err(io)?;
        let mut out = BufWriter::new(GzEncoder::new(file, Compression::best()));
        let mut written = std::collections::BTreeSet::new();
        for (pos, entries) in samples {
            let ids: Vec<&str> = entries.iter().map(|e| e.id.as_str()).collect();
            writeln!(out, "#sample\t{}\t{}", pos.name(), ids.join(",")).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
        for (_, entries) in samples {
            for e in entries {
                if !written.insert(e.id.clone()) {
                    continue;
                }
                writeln!(out, "{}", e.id).map_err(io)?;
                for (form, tag) in &e.forms {
                    writeln!(out, "{}\t{}", form.to_uppercase(), self.tag(*tag).text).map_err(io)?;
                }
                writeln!(out).map_err(io)?;
            }
        }
        out.into_inner()
            .map_err(|e| io(e.into_error()))?
            .finish()
            .map_err(io)?;
        Ok(())
    }
}

/// Picks `n` entries with a ChaCha generator seeded by `seed`; `None` or a
/// size at least the population keeps everything.
pub fn sample_entries<T>(population: Vec<T>, n: Option<usize>, seed: u64) -> Vec<T> {
    match n {
        Some(n) if n < population.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = index::sample(&mut rng, population.len(), n).into_vec();
            picked.sort_unstable();
            let mut slots: Vec<Option<T>> = population.into_iter().map(Some).collect();
            picked.into_iter().map(|i| slots[i].take().expect("indices are distinct")).collect()
        }
        _ => population,
    }
}

/// Reads a dump (plain or `.gz`).
pub fn ingest_dump(path: &Path) -> Result<Lexicon> {
    let io = |e: std::io::Error| Error::Io { path: path.display().to_string(), reason: e.to_string() };
    let file = File::open(path).map_err(io)?;
    let reader: Box<dyn Read> = if path.extension().is_some_and(|e| e == "gz") {
        Box::new(GzDecoder::new(file))
    } else {
        Box::new(file)
    };
    let lexicon = ingest_reader(BufReader::with_capacity(1 << 20, reader)).map_err(io)?;
    if lexicon.entries.is_empty() {
        return Err(Error::EmptyCorpus(path.display().to_string()));
    }
    log::info!(
        "loaded {} entries ({} tags, {} malformed blocks) from {}",
        lexicon.entries.len(),
        lexicon.tags.len(),
        lexicon.malformed,
        path.display()
    );
    Ok(lexicon)
}

/// Parses dump text from any reader. An empty result is not an error here.
pub fn ingest_reader(reader: impl BufRead) -> std::io::Result<Lexicon> {
    let mut lexicon = Lexicon::default();
    let mut index = HashMap::new();
    let mut id: Option<String> = None;
    let mut forms: Vec<(String, u32)> = Vec::new();
    let mut bad = false;

    let finish = |lexicon: &mut Lexicon, id: &mut Option<String>, forms: &mut Vec<(String, u32)>, bad: &mut bool| {
        if id.is_some() || !forms.is_empty() {
            let head_ok = forms.first().is_some_and(|(_, t)| KNOWN_POS.contains(&lexicon.tag(*t).pos()));
            if *bad || !head_ok {
                lexicon.malformed += 1;
            } else {
                let entry_id = id.take().unwrap_or_else(|| format!("#{}", lexicon.entries.len()));
                lexicon.entries.push(LexEntry { id: entry_id, forms: std::mem::take(forms) });
            }
        }
        *id = None;
        forms.clear();
        *bad = false;
    };

    for line in reader.lines() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.strip_prefix("sample\t") {
                if let Some((pos, ids)) = rest.split_once('\t') {
                    if let Ok(pos) = pos.parse::<Pos>() {
                        let ids = ids.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect();
                        lexicon.samples.insert(pos, ids);
                    }
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            finish(&mut lexicon, &mut id, &mut forms, &mut bad);
            continue;
        }
        match line.split_once('\t') {
            Some((form, tags)) => {
                let tag = lexicon.intern(&mut index, tags.trim());
                forms.push((fold_text(form.trim()), tag));
            }
            None if id.is_none() && forms.is_empty() => id = Some(line.trim().to_string()),
            None => bad = true,
        }
    }
    finish(&mut lexicon, &mut id, &mut forms, &mut bad);
    Ok(lexicon)
}
