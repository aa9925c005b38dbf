//! Adverb degrees and number words (0–9999).

use crate::error::{Error, Result};
use crate::grammeme::{Animacy, Case, Degree, Gender, NumberCat};
use crate::noun::case_index;
use crate::rulebase::{drop_chars, is_velar, last_char, mutate, normalize, velar_mutation, RussianWord};
use crate::Engine;

const COMPARATIVES: &str = "adverb_comparative";

/// Largest number the numeral functions accept.
pub const MAX_NUMBER: u32 = 9999;

/// Case forms in Nom, Gen, Dat, Acc, Ins, Prep order.
type Row = [&'static str; 6];

const ZERO: Row = ["ноль", "ноля", "нолю", "ноль", "нолем", "ноле"];
const ONE_M: Row = ["один", "одного", "одному", "один", "одним", "одном"];
const ONE_F: Row = ["одна", "одной", "одной", "одну", "одной", "одной"];
const ONE_N: Row = ["одно", "одного", "одному", "одно", "одним", "одном"];
const ONE_PL: Row = ["одни", "одних", "одним", "одни", "одними", "одних"];
const TWO: Row = ["два", "двух", "двум", "два", "двумя", "двух"];
const TWO_F: Row = ["две", "двух", "двум", "две", "двумя", "двух"];
const THREE: Row = ["три", "трех", "трем", "три", "тремя", "трех"];
const FOUR: Row = ["четыре", "четырех", "четырем", "четыре", "четырьмя", "четырех"];

/// Nominatives of 5–20 and 30, all declined like `пять`.
const TEENS: [&str; 17] = [
    "пять", "шесть", "семь", "восемь", "девять", "десять", "одиннадцать", "двенадцать",
    "тринадцать", "четырнадцать", "пятнадцать", "шестнадцать", "семнадцать", "восемнадцать",
    "девятнадцать", "двадцать", "тридцать",
];

const HUNDREDS: [Row; 9] = [
    ["сто", "ста", "ста", "сто", "ста", "ста"],
    ["двести", "двухсот", "двумстам", "двести", "двумястами", "двухстах"],
    ["триста", "трехсот", "тремстам", "триста", "тремястами", "трехстах"],
    ["четыреста", "четырехсот", "четыремстам", "четыреста", "четырьмястами", "четырехстах"],
    ["пятьсот", "пятисот", "пятистам", "пятьсот", "пятьюстами", "пятистах"],
    ["шестьсот", "шестисот", "шестистам", "шестьсот", "шестьюстами", "шестистах"],
    ["семьсот", "семисот", "семистам", "семьсот", "семьюстами", "семистах"],
    ["восемьсот", "восьмисот", "восьмистам", "восемьсот", "восьмьюстами", "восьмистах"],
    ["девятьсот", "девятисот", "девятистам", "девятьсот", "девятьюстами", "девятистах"],
];

/// Ordinal lemmas of 0–19.
const ORD_UNITS: [&str; 20] = [
    "нулевой", "первый", "второй", "третий", "четвертый", "пятый", "шестой", "седьмой", "восьмой",
    "девятый", "десятый", "одиннадцатый", "двенадцатый", "тринадцатый", "четырнадцатый",
    "пятнадцатый", "шестнадцатый", "семнадцатый", "восемнадцатый", "девятнадцатый",
];
const ORD_TENS: [&str; 10] = [
    "", "", "двадцатый", "тридцатый", "сороковой", "пятидесятый", "шестидесятый", "семидесятый",
    "восьмидесятый", "девяностый",
];
const ORD_HUNDREDS: [&str; 10] = [
    "", "сотый", "двухсотый", "трехсотый", "четырехсотый", "пятисотый", "шестисотый", "семисотый",
    "восьмисотый", "девятисотый",
];
/// Genitive-shaped first parts of `-тысячный` ordinals.
const ORD_THOUSANDS: [&str; 10] = [
    "", "", "двух", "трех", "четырех", "пяти", "шести", "семи", "восьми", "девяти",
];

/// The plural form a noun takes after `value`: n1 for 1, 21, 101…; n2 for
/// 2–4, 22–24…; n5 otherwise, including 11–14.
pub fn agreement_class(value: u64) -> NumberCat {
    let last_two = value % 100;
    let last = value % 10;
    if (11..=14).contains(&last_two) {
        NumberCat::N5
    } else if last == 1 {
        NumberCat::N1
    } else if (2..=4).contains(&last) {
        NumberCat::N2
    } else {
        NumberCat::N5
    }
}

fn check_range(value: u32) -> Result<()> {
    if value > MAX_NUMBER {
        Err(Error::OutOfRange(format!("{value} is outside 0-{MAX_NUMBER}")))
    } else {
        Ok(())
    }
}

/// A declined `пять`-type numeral (stem in `-ь`).
fn soft_numeral(nom: &str, case: Case) -> String {
    let stem = drop_chars(nom, 1);
    let oblique = match nom {
        "восемь" => "восьм",
        _ => stem,
    };
    match case {
        Case::Nom | Case::Acc => nom.to_string(),
        Case::Ins => format!("{oblique}ью"),
        _ => format!("{oblique}и"),
    }
}

fn tens_word(tens: u32, case: Case) -> String {
    let i = case_index(case);
    match tens {
        2 | 3 => soft_numeral(TEENS[(tens as usize) + 13], case),
        4 => ["сорок", "сорока", "сорока", "сорок", "сорока", "сорока"][i].to_string(),
        9 => ["девяносто", "девяноста", "девяноста", "девяносто", "девяноста", "девяноста"][i].to_string(),
        _ => {
            let unit = ["", "", "", "", "", "пять", "шесть", "семь", "восемь", ""][tens as usize];
            match case {
                Case::Nom | Case::Acc => format!("{unit}десят"),
                Case::Ins => format!("{}десятью", soft_numeral(unit, Case::Ins)),
                _ => format!("{}десяти", soft_numeral(unit, Case::Gen)),
            }
        }
    }
}

/// Words for 1..999, the last one in the given gender (`nx` = plural column).
fn below_thousand(n: u32, case: Case, gender: Option<Gender>, out: &mut Vec<String>) {
    let i = case_index(case);
    let (h, rest) = (n / 100, n % 100);
    if h > 0 {
        out.push(HUNDREDS[(h - 1) as usize][i].to_string());
    }
    if rest == 0 {
        return;
    }
    if rest >= 20 {
        out.push(tens_word(rest / 10, case));
        if rest % 10 > 0 {
            out.push(unit_word(rest % 10, case, gender));
        }
    } else {
        out.push(unit_word(rest, case, gender));
    }
}

fn unit_word(n: u32, case: Case, gender: Option<Gender>) -> String {
    let i = case_index(case);
    match n {
        1 => match gender {
            Some(Gender::M) => ONE_M[i],
            Some(Gender::F) => ONE_F[i],
            Some(Gender::N) => ONE_N[i],
            None => ONE_PL[i],
        }
        .to_string(),
        2 if gender == Some(Gender::F) => TWO_F[i].to_string(),
        2 => TWO[i].to_string(),
        3 => THREE[i].to_string(),
        4 => FOUR[i].to_string(),
        _ => soft_numeral(TEENS[(n - 5) as usize], case),
    }
}

fn thousand_noun(count: u32, case: Case) -> String {
    let i = case_index(case);
    let singular = ["тысяча", "тысячи", "тысяче", "тысячу", "тысячей", "тысяче"];
    let plural = ["тысячи", "тысяч", "тысячам", "тысячи", "тысячами", "тысячах"];
    match case {
        Case::Nom | Case::Acc => match agreement_class(count as u64) {
            NumberCat::N1 => singular[i].to_string(),
            NumberCat::N2 => "тысячи".to_string(),
            _ => "тысяч".to_string(),
        },
        _ if count == 1 => singular[i].to_string(),
        _ => plural[i].to_string(),
    }
}

/// Cardinal words with the gender of the last component; `None` selects
/// the plural column (`одни`).
pub(crate) fn cardinal_text(value: u32, case: Case, gender: Option<Gender>) -> Result<String> {
    check_range(value)?;
    if value == 0 {
        return Ok(ZERO[case_index(case)].to_string());
    }
    let mut out = Vec::new();
    let thousands = value / 1000;
    if thousands > 0 {
        if thousands > 1 {
            below_thousand(thousands, case, Some(Gender::F), &mut out);
        }
        out.push(thousand_noun(thousands, case));
    }
    below_thousand(value % 1000, case, gender, &mut out);
    Ok(out.join(" "))
}

/// Words for a cardinal number, every component declined.
pub fn cardinal_words(value: u32, case: Case, gender: Gender) -> Result<String> {
    cardinal_text(value, case, Some(gender))
}

/// Lemma of the ordinal whose last component is `value`; earlier components
/// stay cardinal and are returned in `prefix`.
fn ordinal_parts(value: u32) -> (Vec<String>, String) {
    if value == 0 {
        return (Vec::new(), ORD_UNITS[0].to_string());
    }
    let (thousands, rest) = (value / 1000, value % 1000);
    if rest == 0 {
        let word = if thousands == 1 {
            "тысячный".to_string()
        } else {
            format!("{}тысячный", ORD_THOUSANDS[thousands as usize])
        };
        return (Vec::new(), word);
    }
    let mut prefix = Vec::new();
    if thousands > 0 {
        if thousands > 1 {
            below_thousand(thousands, Case::Nom, Some(Gender::F), &mut prefix);
        }
        prefix.push(thousand_noun(thousands, Case::Nom));
    }
    let (h, tail) = (rest / 100, rest % 100);
    if tail == 0 {
        return (prefix, ORD_HUNDREDS[h as usize].to_string());
    }
    if h > 0 {
        prefix.push(HUNDREDS[(h - 1) as usize][0].to_string());
    }
    let last = if tail < 20 {
        ORD_UNITS[tail as usize].to_string()
    } else if tail % 10 == 0 {
        ORD_TENS[(tail / 10) as usize].to_string()
    } else {
        prefix.push(tens_word(tail / 10, Case::Nom));
        ORD_UNITS[(tail % 10) as usize].to_string()
    };
    (prefix, last)
}

impl Engine {
    /// Comparative or superlative of an adverb. The superlative is
    /// periphrastic: `наиболее` + the adverb.
    pub fn adverb_degree(&self, adverb: &str, degree: Degree) -> Result<RussianWord> {
        let word = normalize(adverb)?;
        let a = word.as_str();
        let listed = self.table(COMPARATIVES).get(a);
        if listed.is_none() && !(a.ends_with('о') || a.ends_with('е')) || a.chars().count() < 3 {
            return Err(Error::NoDegree(a.to_string()));
        }
        let text = match degree {
            Degree::Superlative => format!("наиболее {a}"),
            Degree::Comparative => match listed.and_then(|v| v.first()) {
                Some(c) => c.clone(),
                None => {
                    let stem = drop_chars(a, 1);
                    match last_char(stem).filter(|c| is_velar(*c)).and_then(|_| velar_mutation(stem)) {
                        Some(m) => format!("{}е", mutate(stem, m)),
                        None => format!("{stem}ее"),
                    }
                }
            },
        };
        Ok(RussianWord::from_normalized(text))
    }

    /// Ordinal words; only the last component is declined.
    pub fn ordinal_words(&self, value: u32, gender: Gender, case: Case) -> Result<String> {
        check_range(value)?;
        let (mut parts, last) = ordinal_parts(value);
        let form = self.inflect_adjective(&last, NumberCat::N1, gender, case, Animacy::Inanimate)?;
        parts.push(form.into_string());
        Ok(parts.join(" "))
    }

    /// A fraction: feminine cardinal numerator, ordinal denominator.
    pub fn fraction_words(&self, numerator: u32, denominator: u32, case: Case) -> Result<String> {
        if numerator == 0 || numerator > MAX_NUMBER || !(2..=MAX_NUMBER).contains(&denominator) {
            return Err(Error::OutOfRange(format!("{numerator}/{denominator}")));
        }
        let num = cardinal_text(numerator, case, Some(Gender::F))?;
        let (mut parts, last) = ordinal_parts(denominator);
        let singular = agreement_class(numerator as u64) == NumberCat::N1;
        let (number, den_case) = match (singular, case) {
            (true, _) => (NumberCat::N1, case),
            (false, Case::Nom | Case::Acc) => (NumberCat::NX, Case::Gen),
            (false, _) => (NumberCat::NX, case),
        };
        let den = self.inflect_adjective(&last, number, Gender::F, den_case, Animacy::Inanimate)?;
        parts.push(den.into_string());
        Ok(format!("{num} {}", parts.join(" ")))
    }
}
