//! A dictionary-free, deterministic Russian inflection engine.
//!
//! The engine derives every form from the citation form of a word with
//! ordered rule sets. The only word lists it consults are small exception
//! tables (indeclinable nouns, suppletive stems, irregular gerunds and the
//! like) that are checked before any rule fires.
//!
//! ```
//! use flexia::{Case, Engine, NumberCat};
//!
//! let engine = Engine::builtin();
//! let form = engine.inflect_noun("машина", NumberCat::NX, Case::Gen).unwrap();
//! assert_eq!(form.as_str(), "машин");
//! ```

pub mod adjective;
pub mod corpus;
pub mod error;
pub mod grammeme;
pub mod noun;
pub mod numeral;
pub mod paradigm;
pub mod rulebase;
pub mod synthesis;
pub mod tables;
pub mod verb;
pub mod wire;

use std::path::Path;
use std::sync::Arc;

use once_cell::sync::Lazy;

pub use adjective::AdjClass;
pub use error::{Error, Result};
pub use grammeme::{
    benchmark_grid, parse_code, render_code, Animacy, Case, Degree, FormSpec, Gender, Grammeme,
    NumberCat, NumeralKind, Person, Pos, Tense,
};
pub use noun::{DeclensionClass, DeclensionKind};
pub use paradigm::{Cell, Paradigm};
pub use rulebase::{normalize, ExceptionTable, RussianWord};
pub use tables::Tables;
pub use verb::{Aspect, BasicForm, BasicFormKind, ParticipleKind};

static BUILTIN: Lazy<Engine> = Lazy::new(|| Engine::with_tables(Tables::builtin()));

/// The inflection engine: a set of exception tables plus the rules.
///
/// Cloning is cheap; the tables are shared.
#[derive(Debug, Clone)]
pub struct Engine {
    tables: Arc<Tables>,
}

impl Engine {
    /// The engine with the compiled-in tables.
    pub fn builtin() -> Engine {
        BUILTIN.clone()
    }

    pub fn with_tables(tables: Tables) -> Engine {
        Engine { tables: Arc::new(tables) }
    }

    /// Built-in tables overridden by the files in `dir`.
    pub fn from_data_dir(dir: &Path) -> Result<Engine> {
        Ok(Engine::with_tables(Tables::from_dir(dir)?))
    }

    /// Honors [`tables::DATA_DIR_ENV`] when it is set.
    pub fn from_env() -> Result<Engine> {
        match std::env::var_os(tables::DATA_DIR_ENV) {
            Some(dir) => Engine::from_data_dir(Path::new(&dir)),
            None => Ok(Engine::builtin()),
        }
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub(crate) fn table(&self, name: &str) -> &ExceptionTable {
        self.tables.get(name)
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::builtin()
    }
}
