//! Mapping of OpenCorpora grammemes onto grid cells.

use crate::grammeme::{Animacy, Case, FormSpec, Gender, NumberCat, Person, Pos, Tense};

/// What a dictionary tag says about the grid.
///
/// A `Covers` spec is a generalization: every field it sets must equal the
/// cell's, unset fields match anything. One past-plural verb form, which
/// carries no person, therefore covers all three plural past cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mapped {
    Covers(FormSpec),
    /// A form outside every benchmark grid (short forms, infinitives,
    /// second genitives, inclusive imperatives, ...).
    Unsupported,
}

impl Mapped {
    /// True if a form with this tag attests `cell`.
    pub fn covers(&self, cell: &FormSpec) -> bool {
        let Mapped::Covers(spec) = self else { return false };
        fn fits<T: PartialEq>(general: Option<T>, cell: Option<T>) -> bool {
            general.is_none() || general == cell
        }
        spec.pos == cell.pos
            && fits(spec.person, cell.person)
            && fits(spec.number, cell.number)
            && fits(spec.gender, cell.gender)
            && fits(spec.tense, cell.tense)
            && fits(spec.case, cell.case)
            && fits(spec.animacy, cell.animacy)
            && fits(spec.degree, cell.degree)
    }
}

fn case_of(g: &str) -> Option<Option<Case>> {
    // Outer None: not a case grammeme; inner None: a case the grid lacks.
    Some(match g {
        "nomn" => Some(Case::Nom),
        "gent" | "gen1" => Some(Case::Gen),
        "datv" => Some(Case::Dat),
        "accs" => Some(Case::Acc),
        "ablt" => Some(Case::Ins),
        "loct" | "loc1" => Some(Case::Prep),
        "gen2" | "loc2" | "acc2" | "voct" => None,
        _ => return None,
    })
}

/// Maps the grammemes of one dictionary tag (part of speech first).
pub fn map_tags(grammemes: &[&str]) -> Mapped {
    let has = |g: &str| grammemes.contains(&g);
    let Some(&pos) = grammemes.first() else { return Mapped::Unsupported };
    let number = if has("sing") {
        Some(NumberCat::N1)
    } else if has("plur") {
        Some(NumberCat::NX)
    } else {
        None
    };
    let gender = if has("masc") {
        Some(Gender::M)
    } else if has("femn") {
        Some(Gender::F)
    } else if has("neut") {
        Some(Gender::N)
    } else {
        None
    };
    let person = if has("1per") {
        Some(Person::P1)
    } else if has("2per") {
        Some(Person::P2)
    } else if has("3per") {
        Some(Person::P3)
    } else {
        None
    };
    let mut case = None;
    for g in grammemes {
        match case_of(g) {
            Some(Some(c)) => case = Some(c),
            Some(None) => return Mapped::Unsupported,
            None => {}
        }
    }
    let animacy = if has("anim") {
        Some(Animacy::Animate)
    } else if has("inan") {
        Some(Animacy::Inanimate)
    } else {
        None
    };

    let spec = |pos: Pos| FormSpec { pos: Some(pos), ..Default::default() };
    let adjectival = |pos: Pos| {
        let (Some(number), Some(case)) = (number, case) else { return Mapped::Unsupported };
        Mapped::Covers(FormSpec {
            number: Some(number),
            gender: if number == NumberCat::N1 { gender } else { None },
            case: Some(case),
            // Only the accusative distinguishes animacy in adjectival grids.
            animacy: if case == Case::Acc { animacy } else { None },
            ..spec(pos)
        })
    };

    match pos {
        "NOUN" => match (number, case) {
            (Some(number), Some(case)) => Mapped::Covers(FormSpec { number: Some(number), case: Some(case), ..spec(Pos::Noun) }),
            _ => Mapped::Unsupported,
        },
        "ADJF" => adjectival(Pos::Adjective),
        "PRTF" => {
            let family = match (has("pres"), has("past"), has("actv"), has("pssv")) {
                (true, _, true, _) => Pos::PresentActiveParticiple,
                (_, true, true, _) => Pos::PastActiveParticiple,
                (_, true, _, true) => Pos::PastPassiveParticiple,
                _ => return Mapped::Unsupported,
            };
            adjectival(family)
        }
        "GRND" => {
            let tense = if has("past") {
                Tense::Past
            } else if has("pres") {
                Tense::Present
            } else {
                return Mapped::Unsupported;
            };
            Mapped::Covers(FormSpec { tense: Some(tense), ..spec(Pos::Gerund) })
        }
        "VERB" if has("impr") => {
            if !has("excl") {
                return Mapped::Unsupported;
            }
            match number {
                Some(n) => Mapped::Covers(FormSpec { number: Some(n), ..spec(Pos::Imperative) }),
                None => Mapped::Unsupported,
            }
        }
        "VERB" => {
            let tense = if has("pres") {
                Tense::Present
            } else if has("futr") {
                Tense::Future
            } else if has("past") {
                Tense::Past
            } else {
                return Mapped::Unsupported;
            };
            let Some(number) = number else { return Mapped::Unsupported };
            let (person, gender) = match tense {
                Tense::Past if number == NumberCat::N1 => (None, gender),
                Tense::Past => (None, None),
                _ => (person, None),
            };
            if tense != Tense::Past && person.is_none() {
                return Mapped::Unsupported;
            }
            Mapped::Covers(FormSpec { tense: Some(tense), person, number: Some(number), gender, ..spec(Pos::Verb) })
        }
        _ => Mapped::Unsupported,
    }
}
