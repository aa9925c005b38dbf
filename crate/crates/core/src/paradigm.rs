//! Full paradigms over the benchmark grids.

use crate::error::{Error, Result};
use crate::grammeme::{benchmark_grid, Animacy, Case, Degree, FormSpec, Gender, NumberCat, Person, Pos, Tense};
use crate::numeral::cardinal_text;
use crate::rulebase::normalize;
use crate::verb::ParticipleKind;
use crate::Engine;

/// One generated cell. A cell whose form does not exist for this lemma
/// (a perfective verb's present participle, say) holds the error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub spec: FormSpec,
    pub form: Result<String>,
}

/// The cells of one lemma in grid order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paradigm {
    pub pos: Pos,
    pub lemma: String,
    pub cells: Vec<Cell>,
}

impl Paradigm {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The form of the cell with this spec, if the grid has it.
    pub fn get(&self, spec: &FormSpec) -> Option<&Result<String>> {
        self.cells.iter().find(|c| &c.spec == spec).map(|c| &c.form)
    }

    /// Tab-separated `code-string<TAB>form` lines; absent forms print `-`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            out.push_str(&cell.spec.code_string());
            out.push('\t');
            out.push_str(cell.form.as_deref().unwrap_or("-"));
            out.push('\n');
        }
        out
    }
}

fn participle_kind(pos: Pos) -> Option<ParticipleKind> {
    match pos {
        Pos::PresentActiveParticiple => Some(ParticipleKind::PresentActive),
        Pos::PastActiveParticiple => Some(ParticipleKind::PastActive),
        Pos::PastPassiveParticiple => Some(ParticipleKind::PastPassive),
        _ => None,
    }
}

fn parse_number(lemma: &str) -> Result<u32> {
    let value: u32 = lemma
        .trim()
        .parse()
        .map_err(|_| Error::InvalidLemma { lemma: lemma.to_string(), expected: "number 0-9999" })?;
    if value > crate::numeral::MAX_NUMBER {
        return Err(Error::OutOfRange(lemma.to_string()));
    }
    Ok(value)
}

impl Engine {
    /// Generates every cell of the benchmark grid for `pos`.
    ///
    /// Fails only when the lemma itself is unusable; missing individual forms
    /// are reported per cell. Numerals take the number as their lemma.
    pub fn paradigm(&self, pos: Pos, lemma: &str) -> Result<Paradigm> {
        let grid = benchmark_grid(pos);
        let text = match pos {
            Pos::Ordinal | Pos::Cardinal => parse_number(lemma)?.to_string(),
            _ => normalize(lemma)?.into_string(),
        };
        let cells: Vec<Cell> = match pos {
            Pos::Noun => {
                let forms = self.noun_forms(&text)?;
                grid.into_iter()
                    .map(|spec| {
                        let form = forms.get(spec.number.unwrap(), spec.case.unwrap()).to_string();
                        Cell { spec, form: Ok(form) }
                    })
                    .collect()
            }
            Pos::Adjective => {
                let forms = self.adjective_forms(&text)?;
                adjectival_cells(grid, |n, g, c, a| Ok(forms.get(n, g, c, a).to_string()))
            }
            Pos::PresentActiveParticiple | Pos::PastActiveParticiple | Pos::PastPassiveParticiple => {
                self.verb_model(&text)?;
                let kind = participle_kind(pos).unwrap();
                match self.participle_lemma(&text, kind) {
                    Ok(p) => {
                        let forms = self.adjective_forms(p.as_str())?;
                        adjectival_cells(grid, |n, g, c, a| Ok(forms.get(n, g, c, a).to_string()))
                    }
                    Err(e) => adjectival_cells(grid, |_, _, _, _| Err(e.clone())),
                }
            }
            Pos::Verb => {
                self.verb_model(&text)?;
                grid.into_iter()
                    .map(|spec| {
                        let form = self
                            .conjugate(
                                &text,
                                spec.person.unwrap_or(Person::P3),
                                spec.number.unwrap(),
                                spec.gender.unwrap_or(Gender::M),
                                spec.tense.unwrap(),
                            )
                            .map(|w| w.into_string());
                        Cell { spec, form }
                    })
                    .collect()
            }
            Pos::Gerund => {
                self.verb_model(&text)?;
                grid.into_iter()
                    .map(|spec| {
                        let form = match spec.tense {
                            Some(Tense::Present) => self.imperfective_gerund(&text),
                            _ => self.past_gerund(&text),
                        };
                        Cell { spec, form: form.map(|w| w.into_string()) }
                    })
                    .collect()
            }
            Pos::Imperative => {
                self.verb_model(&text)?;
                grid.into_iter()
                    .map(|spec| {
                        let form = self.imperative(&text, spec.number.unwrap()).map(|w| w.into_string());
                        Cell { spec, form }
                    })
                    .collect()
            }
            Pos::Adverb => {
                self.adverb_degree(&text, Degree::Comparative)?;
                grid.into_iter()
                    .map(|spec| {
                        let form = self.adverb_degree(&text, spec.degree.unwrap()).map(|w| w.into_string());
                        Cell { spec, form }
                    })
                    .collect()
            }
            Pos::Ordinal => {
                let value: u32 = text.parse().expect("validated above");
                grid.into_iter()
                    .map(|spec| {
                        let form = self.ordinal_words(value, spec.gender.unwrap(), spec.case.unwrap());
                        Cell { spec, form }
                    })
                    .collect()
            }
            Pos::Cardinal => {
                let value: u32 = text.parse().expect("validated above");
                grid.into_iter()
                    .map(|spec| {
                        let gender = if spec.number == Some(NumberCat::NX) { None } else { spec.gender };
                        let form = cardinal_text(value, spec.case.unwrap(), gender);
                        Cell { spec, form }
                    })
                    .collect()
            }
        };
        Ok(Paradigm { pos, lemma: text, cells })
    }

    /// The form of a single cell, as [`Engine::paradigm`] would produce it.
    pub fn form(&self, lemma: &str, spec: &FormSpec) -> Result<String> {
        let pos = spec.pos.ok_or_else(|| Error::UnknownPos(String::new()))?;
        let paradigm = self.paradigm(pos, lemma)?;
        match paradigm.get(spec) {
            Some(form) => form.clone(),
            None => Err(Error::UnknownCode(spec.code_string())),
        }
    }
}

fn adjectival_cells(
    grid: Vec<FormSpec>,
    f: impl Fn(NumberCat, Gender, Case, Animacy) -> Result<String>,
) -> Vec<Cell> {
    grid.into_iter()
        .map(|spec| {
            let form = f(spec.number.unwrap(), spec.gender.unwrap(), spec.case.unwrap(), spec.animacy.unwrap());
            Cell { spec, form }
        })
        .collect()
}
