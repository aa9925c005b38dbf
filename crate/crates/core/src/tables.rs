//! The shipped exception tables and their loading.
//!
//! Every table is a plain UTF-8 text file under `crates/core/data/`, compiled
//! into the binary. A data directory can replace any of them at run time: a
//! file named `<table>.tsv` in that directory overrides the built-in copy.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::Result;
use crate::rulebase::ExceptionTable;

/// Environment variable naming a directory of replacement tables.
pub const DATA_DIR_ENV: &str = "FLEXIA_DATA_DIR";

macro_rules! builtin_tables {
    ($($name:literal),+ $(,)?) => {
        const BUILTIN: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../data/", $name, ".tsv")))),+
        ];
    };
}

builtin_tables!(
    "noun_indeclinable",
    "noun_paradigms",
    "noun_animacy",
    "noun_gender",
    "noun_fleeting",
    "noun_plural_a",
    "noun_stressed_ending",
    "noun_genitive_plural",
    "noun_adjectival",
    "adjective_paradigms",
    "verb_paradigms",
    "verb_present_stem",
    "verb_past_stem",
    "verb_aspect",
    "verb_imperative",
    "verb_gerund",
    "verb_passive",
    "adverb_comparative",
    "corpus_skip",
);

/// Names of all tables the engine consults.
pub fn table_names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(name, _)| *name)
}

#[derive(Debug, Clone)]
pub struct Tables {
    tables: BTreeMap<String, ExceptionTable>,
}

impl Tables {
    /// The tables compiled into the crate.
    pub fn builtin() -> Self {
        let tables = BUILTIN
            .iter()
            .map(|(name, text)| {
                let table = ExceptionTable::parse(name, text)
                    .unwrap_or_else(|e| panic!("built-in table {name} is malformed: {e}"));
                (name.to_string(), table)
            })
            .collect();
        Tables { tables }
    }

    /// Built-in tables, with any `<name>.tsv` found in `dir` taking their place.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut tables = Self::builtin();
        for name in table_names() {
            let path = dir.join(format!("{name}.tsv"));
            if path.is_file() {
                tables.set(ExceptionTable::load(name, &path)?);
            }
        }
        Ok(tables)
    }

    /// Panics on a name that is not one of [`table_names`].
    pub fn get(&self, name: &str) -> &ExceptionTable {
        self.tables
            .get(name)
            .unwrap_or_else(|| panic!("no exception table named {name}"))
    }

    pub fn get_mut(&mut self, name: &str) -> &mut ExceptionTable {
        self.tables.entry(name.to_string()).or_insert_with(|| ExceptionTable::new(name))
    }

    pub fn set(&mut self, table: ExceptionTable) {
        self.tables.insert(table.name().to_string(), table);
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExceptionTable> {
        self.tables.values()
    }
}

impl Default for Tables {
    fn default() -> Self {
        Self::builtin()
    }
}
