//! Adjective declension by number, gender, case and animacy.
//!
//! Participles share this machinery: a participle lemma is declined as the
//! adjective it looks like, with a trailing `-ся` carried through every form.

use crate::error::{Error, Result};
use crate::grammeme::{Animacy, Case, Gender, NumberCat};
use crate::noun::case_index;
use crate::rulebase::{drop_chars, is_husher, is_velar, last_char, normalize, RussianWord};
use crate::Engine;

const PARADIGMS: &str = "adjective_paradigms";

/// Declension pattern, chosen from the masculine nominative singular ending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjClass {
    /// `-ый` (новый).
    Hard,
    /// `-ий` after a soft consonant (синий).
    Soft,
    /// `-ий` after a velar (русский) or a husher (хороший).
    VelarHusher,
    /// Stressed `-ой` (молодой, большой).
    Stressed,
    /// Short-form possessives in `-ов`/`-ин` (отцов, мамин).
    Possessive,
    /// `-ий` possessives with `ь` in the oblique forms (лисий).
    SoftPossessive,
}

/// All forms of an adjective: four sub-paradigms of six cases plus the
/// animate accusatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjectiveForms {
    /// Indexed by [masc, fem, neut, plural] then case.
    cells: [[String; 6]; 4],
    /// Animate accusative of the masculine singular and of the plural.
    animate_acc: [String; 2],
}

impl AdjectiveForms {
    pub fn get(&self, number: NumberCat, gender: Gender, case: Case, animacy: Animacy) -> &str {
        let column = if number.is_plural() {
            3
        } else {
            match gender {
                Gender::M => 0,
                Gender::F => 1,
                Gender::N => 2,
            }
        };
        if case == Case::Acc && animacy == Animacy::Animate {
            match column {
                0 => return &self.animate_acc[0],
                3 => return &self.animate_acc[1],
                _ => {}
            }
        }
        &self.cells[column][case_index(case)]
    }

    fn map(self, f: impl Fn(&str) -> String) -> Self {
        AdjectiveForms {
            cells: self.cells.map(|col| col.map(|s| f(&s))),
            animate_acc: self.animate_acc.map(|s| f(&s)),
        }
    }
}

impl Engine {
    pub fn adjective_class(&self, lemma: &str) -> Result<AdjClass> {
        let base = lemma.strip_suffix("ся").filter(|b| b.ends_with('й')).unwrap_or(lemma);
        if let Some(v) = self.table(PARADIGMS).find(base) {
            if v.first().map(String::as_str) == Some("poss") {
                return Ok(AdjClass::SoftPossessive);
            }
        }
        let invalid = || Error::InvalidLemma { lemma: lemma.to_string(), expected: "adjective" };
        if base.chars().count() < 3 {
            return Err(invalid());
        }
        let stem = drop_chars(base, 2);
        let tail = last_char(stem).ok_or_else(invalid)?;
        if base.ends_with("ый") {
            Ok(AdjClass::Hard)
        } else if base.ends_with("ой") {
            Ok(AdjClass::Stressed)
        } else if base.ends_with("ий") {
            if is_velar(tail) || is_husher(tail) {
                Ok(AdjClass::VelarHusher)
            } else {
                Ok(AdjClass::Soft)
            }
        } else if base.ends_with("ов") || base.ends_with("ев") || base.ends_with("ин") || base.ends_with("ын") {
            Ok(AdjClass::Possessive)
        } else {
            Err(invalid())
        }
    }

    pub fn adjective_forms(&self, lemma: &str) -> Result<AdjectiveForms> {
        let word = normalize(lemma)?;
        let lemma = word.as_str();
        if let Some(forms) = self.table(PARADIGMS).get(lemma).filter(|v| v.len() == 28) {
            return Ok(from_grid(forms));
        }
        if let Some(base) = lemma.strip_suffix("ся").filter(|b| b.ends_with('й')) {
            let inner = self.decline_adjective(base)?;
            return Ok(inner.map(|s| format!("{s}ся")));
        }
        self.decline_adjective(lemma)
    }

    fn decline_adjective(&self, lemma: &str) -> Result<AdjectiveForms> {
        let class = self.adjective_class(lemma)?;
        if class == AdjClass::Possessive {
            return Ok(possessive(lemma));
        }
        let stem = drop_chars(lemma, 2);
        let tail = last_char(stem).unwrap_or('н');
        let hush = is_husher(tail) || tail == 'ц';
        let (y, o, soft) = match class {
            AdjClass::Hard if tail == 'ц' => ("ы", "е", false),
            AdjClass::Hard => ("ы", "о", false),
            AdjClass::Stressed if is_velar(tail) || is_husher(tail) => ("и", "о", false),
            AdjClass::Stressed => ("ы", "о", false),
            AdjClass::VelarHusher if hush => ("и", "е", false),
            AdjClass::VelarHusher => ("и", "о", false),
            AdjClass::Soft => ("и", "е", true),
            AdjClass::SoftPossessive => ("и", "е", true),
            AdjClass::Possessive => unreachable!(),
        };
        let stem = if class == AdjClass::SoftPossessive { format!("{stem}ь") } else { stem.to_string() };
        let s = |e: String| format!("{stem}{e}");
        let (fem_nom, fem_acc) = if soft { ("яя", "юю") } else { ("ая", "ую") };
        let (fem_nom, fem_acc) = if class == AdjClass::SoftPossessive { ("я", "ю") } else { (fem_nom, fem_acc) };
        let neut_nom = if class == AdjClass::SoftPossessive { "е".to_string() } else { format!("{o}е") };
        let plural_nom = if class == AdjClass::SoftPossessive { "и".to_string() } else { format!("{y}е") };
        let masc = [
            lemma.to_string(),
            s(format!("{o}го")),
            s(format!("{o}му")),
            lemma.to_string(),
            s(format!("{y}м")),
            s(format!("{o}м")),
        ];
        let fem = [
            s(fem_nom.to_string()),
            s(format!("{o}й")),
            s(format!("{o}й")),
            s(fem_acc.to_string()),
            s(format!("{o}й")),
            s(format!("{o}й")),
        ];
        let neut = [
            s(neut_nom.clone()),
            s(format!("{o}го")),
            s(format!("{o}му")),
            s(neut_nom),
            s(format!("{y}м")),
            s(format!("{o}м")),
        ];
        let plural = [
            s(plural_nom.clone()),
            s(format!("{y}х")),
            s(format!("{y}м")),
            s(plural_nom),
            s(format!("{y}ми")),
            s(format!("{y}х")),
        ];
        let animate_acc = [masc[1].clone(), plural[1].clone()];
        Ok(AdjectiveForms { cells: [masc, fem, neut, plural], animate_acc })
    }

    /// One adjective form. Gender is ignored outside the singular; animacy
    /// matters only in the accusative.
    pub fn inflect_adjective(
        &self,
        lemma: &str,
        number: NumberCat,
        gender: Gender,
        case: Case,
        animacy: Animacy,
    ) -> Result<RussianWord> {
        let forms = self.adjective_forms(lemma)?;
        Ok(RussianWord::from_normalized(forms.get(number, gender, case, animacy).to_string()))
    }
}

fn possessive(lemma: &str) -> AdjectiveForms {
    let s = |e: &str| format!("{lemma}{e}");
    let masc = [lemma.to_string(), s("а"), s("у"), lemma.to_string(), s("ым"), s("ом")];
    let fem = [s("а"), s("ой"), s("ой"), s("у"), s("ой"), s("ой")];
    let neut = [s("о"), s("а"), s("у"), s("о"), s("ым"), s("ом")];
    let plural = [s("ы"), s("ых"), s("ым"), s("ы"), s("ыми"), s("ых")];
    let animate_acc = [masc[1].clone(), plural[1].clone()];
    AdjectiveForms { cells: [masc, fem, neut, plural], animate_acc }
}

/// Builds forms from a 28-cell override in grid order.
fn from_grid(forms: &[String]) -> AdjectiveForms {
    let column = |c: usize| -> [String; 6] {
        let base = c * 7;
        [
            forms[base].clone(),
            forms[base + 1].clone(),
            forms[base + 2].clone(),
            forms[base + 3].clone(),
            forms[base + 5].clone(),
            forms[base + 6].clone(),
        ]
    };
    AdjectiveForms {
        cells: [column(0), column(1), column(2), column(3)],
        animate_acc: [forms[4].clone(), forms[25].clone()],
    }
}
