//! Normalization, segmentation, consonant alternations and exception tables.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A normalized Russian word: lowercase, `ё` folded to `е`, no surrounding
/// whitespace. May contain internal hyphens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RussianWord(String);

impl RussianWord {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Wraps text that is already known to be normalized.
    pub(crate) fn from_normalized(text: String) -> Self {
        debug_assert!(!text.contains('ё'));
        RussianWord(text)
    }
}

impl fmt::Display for RussianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for RussianWord {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl FromStr for RussianWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        normalize(s)
    }
}

fn is_russian_letter(ch: char) -> bool {
    matches!(ch, 'а'..='я' | 'ё')
}

/// Lowercases, folds `ё` to `е` and trims. Rejects anything but Russian
/// letters and internal hyphens.
pub fn normalize(raw: &str) -> Result<RussianWord> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let text = fold_text(trimmed);
    let valid = text.chars().all(|c| is_russian_letter(c) || c == '-')
        && !text.starts_with('-')
        && !text.ends_with('-')
        && !text.contains("--");
    if !valid {
        return Err(Error::InvalidCharacters(raw.to_string()));
    }
    Ok(RussianWord(text))
}

/// Lowercase and fold `ё` without validating. Used for phrases and corpus
/// forms.
pub fn fold_text(text: &str) -> String {
    text.chars()
        .flat_map(char::to_lowercase)
        .map(|c| if c == 'ё' { 'е' } else { c })
        .collect()
}

pub fn is_vowel(ch: char) -> bool {
    matches!(ch, 'а' | 'е' | 'ё' | 'и' | 'о' | 'у' | 'ы' | 'э' | 'ю' | 'я')
}

/// Sibilants after which `ы`, `ю`, `я` are not written.
pub fn is_husher(ch: char) -> bool {
    matches!(ch, 'ж' | 'ш' | 'ч' | 'щ')
}

pub fn is_velar(ch: char) -> bool {
    matches!(ch, 'г' | 'к' | 'х')
}

pub fn is_consonant(ch: char) -> bool {
    is_russian_letter(ch) && !is_vowel(ch) && ch != 'ь' && ch != 'ъ' && ch != 'й'
}

pub fn last_char(s: &str) -> Option<char> {
    s.chars().next_back()
}

/// `s` without its last `n` characters.
pub fn drop_chars(s: &str, n: usize) -> &str {
    if n == 0 {
        return s;
    }
    match s.char_indices().rev().nth(n - 1) {
        Some((idx, _)) => &s[..idx],
        None => "",
    }
}

pub fn char_count(s: &str) -> usize {
    s.chars().count()
}

pub fn vowel_count(s: &str) -> usize {
    s.chars().filter(|&c| is_vowel(c)).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemSplit {
    pub stem: String,
    pub ending: String,
}

/// Splits off the longest candidate ending the word carries. With no match
/// the ending is empty and the stem is the whole word.
pub fn strip_ending(word: &str, candidates: &[&str]) -> StemSplit {
    let best = candidates
        .iter()
        .filter(|c| word.ends_with(**c))
        .max_by_key(|c| c.len());
    match best {
        Some(ending) => StemSplit {
            stem: word[..word.len() - ending.len()].to_string(),
            ending: ending.to_string(),
        },
        None => StemSplit { stem: word.to_string(), ending: String::new() },
    }
}

/// Consonant alternations at the end of a stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    KCh,
    GZh,
    KhSh,
    SkShch,
    StShch,
    TCh,
    TShch,
    DZh,
    DZhd,
    ZZh,
    SSh,
    BBl,
    PPl,
    VVl,
    FFl,
    MMl,
}

impl Mutation {
    pub const ALL: [Mutation; 16] = [
        Mutation::KCh,
        Mutation::GZh,
        Mutation::KhSh,
        Mutation::SkShch,
        Mutation::StShch,
        Mutation::TCh,
        Mutation::TShch,
        Mutation::DZh,
        Mutation::DZhd,
        Mutation::ZZh,
        Mutation::SSh,
        Mutation::BBl,
        Mutation::PPl,
        Mutation::VVl,
        Mutation::FFl,
        Mutation::MMl,
    ];

    pub fn source(self) -> &'static str {
        self.pair().0
    }

    pub fn target(self) -> &'static str {
        self.pair().1
    }

    fn pair(self) -> (&'static str, &'static str) {
        match self {
            Mutation::KCh => ("к", "ч"),
            Mutation::GZh => ("г", "ж"),
            Mutation::KhSh => ("х", "ш"),
            Mutation::SkShch => ("ск", "щ"),
            Mutation::StShch => ("ст", "щ"),
            Mutation::TCh => ("т", "ч"),
            Mutation::TShch => ("т", "щ"),
            Mutation::DZh => ("д", "ж"),
            Mutation::DZhd => ("д", "жд"),
            Mutation::ZZh => ("з", "ж"),
            Mutation::SSh => ("с", "ш"),
            Mutation::BBl => ("б", "бл"),
            Mutation::PPl => ("п", "пл"),
            Mutation::VVl => ("в", "вл"),
            Mutation::FFl => ("ф", "фл"),
            Mutation::MMl => ("м", "мл"),
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.source(), self.target())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    /// Accepts `к>ч`, `к->ч` or `к→ч`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace("->", ">").replace('→', ">");
        Mutation::ALL
            .iter()
            .copied()
            .find(|m| norm == format!("{}>{}", m.source(), m.target()))
            .ok_or_else(|| Error::UnknownMutation(s.to_string()))
    }
}

/// Applies `rule` to the final consonant cluster of `stem`; stems that do not
/// end in the source cluster come back unchanged.
pub fn mutate(stem: &str, rule: Mutation) -> String {
    match stem.strip_suffix(rule.source()) {
        Some(head) => format!("{head}{}", rule.target()),
        None => stem.to_string(),
    }
}

/// The alternation a second-conjugation stem takes in the first person
/// singular, chosen from its final cluster.
pub fn labial_or_dental_mutation(stem: &str) -> Option<Mutation> {
    let candidates = [
        Mutation::SkShch,
        Mutation::StShch,
        Mutation::BBl,
        Mutation::PPl,
        Mutation::VVl,
        Mutation::FFl,
        Mutation::MMl,
        Mutation::TCh,
        Mutation::DZh,
        Mutation::ZZh,
        Mutation::SSh,
    ];
    candidates.into_iter().find(|m| stem.ends_with(m.source()))
}

/// The alternation of a velar stem before front vowels (`пек` → `печ`).
pub fn velar_mutation(stem: &str) -> Option<Mutation> {
    [Mutation::KCh, Mutation::GZh, Mutation::KhSh]
        .into_iter()
        .find(|m| stem.ends_with(m.source()))
}

/// An immutable lemma → override mapping.
///
/// Keys starting with `-` are suffix patterns, matched longest-first after
/// every exact key has failed. A pattern may be narrowed by a minimum word
/// length written as `-ending/5`. Keys starting with `+` are roots: they
/// match the bare root or the root behind a head the caller accepts (verbal
/// prefixes, typically).
#[derive(Debug, Clone, Default)]
pub struct ExceptionTable {
    name: String,
    exact: HashMap<String, Vec<String>>,
    roots: Vec<SuffixEntry>,
    suffixes: Vec<SuffixEntry>,
}

#[derive(Debug, Clone)]
struct SuffixEntry {
    suffix: String,
    min_len: usize,
    values: Vec<String>,
}

/// A suffix-pattern hit: the pattern and what the word looks like without it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuffixHit<'a> {
    pub suffix: &'a str,
    pub head: &'a str,
    pub values: &'a [String],
}

impl ExceptionTable {
    pub fn new(name: impl Into<String>) -> Self {
        ExceptionTable { name: name.into(), ..Default::default() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Parses the plain-text format: one record per line, `lemma<TAB>form,form`.
    /// `#` starts a comment; the value column may be omitted.
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut table = ExceptionTable::new(name);
        for (lineno, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            };
            let line = line.trim_end();
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = match line.split_once('\t') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => (line.trim(), ""),
            };
            let bad = |reason: &str| Error::BadTable {
                table: name.to_string(),
                line: lineno + 1,
                reason: reason.to_string(),
            };
            let values: Vec<String> = if value.is_empty() {
                Vec::new()
            } else {
                value.split(',').map(|v| fold_text(v.trim())).collect()
            };
            if let Some(pattern) = key.strip_prefix('-') {
                let (suffix, min_len) = match pattern.split_once('/') {
                    Some((s, n)) => (s, n.parse().map_err(|_| bad("bad length bound"))?),
                    None => (pattern, 0),
                };
                if suffix.is_empty() {
                    return Err(bad("empty suffix pattern"));
                }
                table.suffixes.push(SuffixEntry { suffix: fold_text(suffix), min_len, values });
            } else if let Some(root) = key.strip_prefix('+') {
                if root.is_empty() {
                    return Err(bad("empty root pattern"));
                }
                table.roots.push(SuffixEntry { suffix: fold_text(root), min_len: 0, values });
            } else {
                let lemma = normalize(key).map_err(|_| bad("key is not a Russian word"))?;
                table.exact.insert(lemma.into_string(), values);
            }
        }
        table
            .suffixes
            .sort_by(|a, b| b.suffix.len().cmp(&a.suffix.len()).then(b.min_len.cmp(&a.min_len)));
        table.roots.sort_by(|a, b| b.suffix.len().cmp(&a.suffix.len()));
        Ok(table)
    }

    pub fn load(name: &str, path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::BadTable {
            table: name.to_string(),
            line: 0,
            reason: e.to_string(),
        })?;
        Self::parse(name, &text)
    }

    pub fn insert(&mut self, lemma: &str, values: Vec<String>) {
        self.exact.insert(lemma.to_string(), values);
    }

    /// Exact-match lookup.
    pub fn get(&self, lemma: &str) -> Option<&[String]> {
        self.exact.get(lemma).map(Vec::as_slice)
    }

    /// Exact entries in unspecified order.
    pub fn exact_entries(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.exact.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.exact.contains_key(lemma)
    }

    /// The longest suffix pattern the word ends with.
    pub fn get_suffix<'a>(&'a self, word: &'a str) -> Option<SuffixHit<'a>> {
        let len = char_count(word);
        self.suffixes
            .iter()
            .find(|e| word.ends_with(&e.suffix) && len >= e.min_len)
            .map(|e| SuffixHit {
                suffix: &e.suffix,
                head: &word[..word.len() - e.suffix.len()],
                values: &e.values,
            })
    }

    /// Exact entry first, then the longest suffix pattern.
    pub fn find<'a>(&'a self, word: &'a str) -> Option<&'a [String]> {
        self.get(word).or_else(|| self.get_suffix(word).map(|h| h.values))
    }

    /// The longest root the word ends with whose head passes `head_ok`
    /// (an empty head always passes).
    pub fn get_root<'a>(&'a self, word: &'a str, head_ok: impl Fn(&str) -> bool) -> Option<SuffixHit<'a>> {
        self.roots.iter().find_map(|e| {
            let head = word.strip_suffix(e.suffix.as_str())?;
            (head.is_empty() || head_ok(head)).then_some(SuffixHit {
                suffix: &e.suffix,
                head,
                values: &e.values,
            })
        })
    }

    /// Exact entry, then root, then suffix pattern. Exact hits report an
    /// empty head.
    pub fn lookup<'a>(&'a self, word: &'a str, head_ok: impl Fn(&str) -> bool) -> Option<SuffixHit<'a>> {
        if let Some((key, values)) = self.exact.get_key_value(word) {
            return Some(SuffixHit { suffix: key, head: "", values });
        }
        self.get_root(word, head_ok).or_else(|| self.get_suffix(word))
    }

    /// True if the word is listed exactly or matches a pattern.
    pub fn matches(&self, word: &str) -> bool {
        self.find(word).is_some()
    }

    pub fn len(&self) -> usize {
        self.exact.len() + self.roots.len() + self.suffixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Exact-match override lookup, consulted before any rule path.
pub fn lookup_exception<'a>(table: &'a ExceptionTable, lemma: &RussianWord) -> Option<&'a [String]> {
    table.get(lemma.as_str())
}
