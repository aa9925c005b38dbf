//! Noun declension by number and case.
//!
//! The lemma is the nominative singular. Classification looks at the final
//! letters only; lexical properties that the surface does not reveal
//! (animacy, gender of `-ь` nouns, fleeting vowels, stressed endings) come
//! from the exception tables, most of them as suffix patterns.

use crate::error::Result;
use crate::grammeme::{Animacy, Case, Gender, NumberCat};
use crate::rulebase::{
    drop_chars, is_consonant, is_husher, is_velar, is_vowel, last_char, normalize, RussianWord,
};
use crate::Engine;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeclensionKind {
    /// `-а`/`-я` nouns of either gender (машина, неделя, папа).
    FirstA,
    /// Masculine nouns ending in a consonant, `-й` or `-ь` (стол, музей, конь).
    SecondMasculine,
    /// Neuter `-о`/`-е` nouns (окно, поле, здание).
    SecondNeuter,
    /// Feminine `-ь` nouns (ночь, тетрадь).
    ThirdFeminine,
    /// Neuter `-мя` nouns (время, имя).
    Heteroclite,
    /// `-анин`/`-янин` nouns with plural `-ане` (гражданин).
    Anin,
    /// `-онок`/`-енок` nouns with plural `-ата`/`-ята` (котенок).
    Onok,
    Indeclinable,
    /// Full paradigm taken from the override table.
    Irregular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeclensionClass {
    pub kind: DeclensionKind,
    /// Soft stem (`-я`, `-ь`, `-й`, `-е` endings).
    pub soft: bool,
    /// Stem ends in a velar, a husher or `ц`, which triggers spelling rules.
    pub spelling_stem: bool,
    /// The stem loses a vowel outside the nominative singular.
    pub fleeting: bool,
}

/// All twelve forms of a noun with the accusative already resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounForms {
    pub singular: [String; 6],
    pub plural: [String; 6],
    pub gender: Gender,
    pub animacy: Animacy,
}

impl NounForms {
    fn uniform(word: &str, gender: Gender, animacy: Animacy) -> Self {
        let all = || std::array::from_fn(|_| word.to_string());
        NounForms { singular: all(), plural: all(), gender, animacy }
    }

    pub fn get(&self, number: NumberCat, case: Case) -> &str {
        let idx = case_index(case);
        match number {
            NumberCat::N1 => &self.singular[idx],
            NumberCat::NX => &self.plural[idx],
            NumberCat::N2 | NumberCat::N5 => {
                let governed = case == Case::Nom
                    || (case == Case::Acc && self.animacy == Animacy::Inanimate);
                if !governed {
                    return &self.plural[idx];
                }
                if number == NumberCat::N2 {
                    &self.singular[case_index(Case::Gen)]
                } else {
                    &self.plural[case_index(Case::Gen)]
                }
            }
        }
    }
}

pub(crate) fn case_index(case: Case) -> usize {
    match case {
        Case::Nom => 0,
        Case::Gen => 1,
        Case::Dat => 2,
        Case::Acc => 3,
        Case::Ins => 4,
        Case::Prep => 5,
    }
}

const PARADIGMS: &str = "noun_paradigms";
const INDECLINABLE: &str = "noun_indeclinable";
const ANIMACY: &str = "noun_animacy";
const GENDER: &str = "noun_gender";
const FLEETING: &str = "noun_fleeting";
const PLURAL_A: &str = "noun_plural_a";
const STRESSED: &str = "noun_stressed_ending";
const GEN_PLURAL: &str = "noun_genitive_plural";
const ADJECTIVAL: &str = "noun_adjectival";

/// Endings that mark a noun as indeclinable regardless of the table.
fn indeclinable_by_shape(word: &str) -> bool {
    matches!(last_char(word), Some('и' | 'у' | 'ю' | 'э' | 'ы'))
}

/// Table verdict: an entry whose first value is `-` is a "no", any other
/// entry a "yes"; `None` when nothing matches.
fn flag(table: &crate::rulebase::ExceptionTable, word: &str) -> Option<bool> {
    table.find(word).map(|v| v.first().map(String::as_str) != Some("-"))
}

impl Engine {
    fn indeclinable(&self, word: &str) -> bool {
        flag(self.table(INDECLINABLE), word).unwrap_or_else(|| indeclinable_by_shape(word))
    }

    /// Grammatical gender the engine assumes for a noun lemma.
    pub fn noun_gender(&self, lemma: &str) -> Gender {
        if let Some(v) = self.table(GENDER).find(lemma).and_then(|v| v.first()) {
            match v.as_str() {
                "m" => return Gender::M,
                "f" => return Gender::F,
                "n" => return Gender::N,
                _ => {}
            }
        }
        match last_char(lemma) {
            Some('а' | 'я') if lemma.ends_with("мя") => Gender::N,
            Some('а' | 'я') => Gender::F,
            Some('о' | 'е') => Gender::N,
            Some('ь') => soft_sign_gender(lemma),
            _ => Gender::M,
        }
    }

    /// Animacy reading used for the accusative.
    pub fn noun_animacy(&self, lemma: &str) -> Animacy {
        match self.table(ANIMACY).find(lemma).and_then(|v| v.first()) {
            Some(v) if v == "a" => Animacy::Animate,
            _ => Animacy::Inanimate,
        }
    }

    pub fn classify_noun(&self, lemma: &str) -> DeclensionClass {
        let plain = |kind| DeclensionClass { kind, soft: false, spelling_stem: false, fleeting: false };
        if self.table(PARADIGMS).get(lemma).is_some() {
            return plain(DeclensionKind::Irregular);
        }
        if self.indeclinable(lemma) {
            return plain(DeclensionKind::Indeclinable);
        }
        let head = segment_tail(lemma);
        let fleeting = self.fleeting_stem(head).is_some();
        let last = last_char(head).unwrap_or('а');
        let stem = match last {
            'а' | 'я' | 'о' | 'е' | 'ь' | 'й' => drop_chars(head, 1),
            _ => head,
        };
        let spelling_stem = matches!(last_char(stem), Some(c) if is_velar(c) || is_husher(c) || c == 'ц');
        let soft = matches!(last, 'я' | 'ь' | 'й') || (last == 'е' && !spelling_stem);
        let kind = if head.ends_with("мя") {
            DeclensionKind::Heteroclite
        } else if matches!(last, 'а' | 'я') {
            DeclensionKind::FirstA
        } else if matches!(last, 'о' | 'е') {
            if self.noun_gender(lemma) == Gender::M {
                DeclensionKind::SecondMasculine
            } else {
                DeclensionKind::SecondNeuter
            }
        } else if last == 'ь' && self.noun_gender(lemma) == Gender::F {
            DeclensionKind::ThirdFeminine
        } else if (head.ends_with("анин") || head.ends_with("янин")) && rulebase_len(head) > 5 {
            DeclensionKind::Anin
        } else if (head.ends_with("онок") || head.ends_with("енок")) && rulebase_len(head) > 5 {
            DeclensionKind::Onok
        } else {
            DeclensionKind::SecondMasculine
        };
        DeclensionClass { kind, soft, spelling_stem, fleeting }
    }

    /// The masculine adjective lemma a substantivized adjective declines
    /// like (`столовая` → `столовый`), if the noun is one.
    fn adjectival_lemma(&self, word: &str) -> Option<String> {
        let table = self.table(ADJECTIVAL);
        let hit = table.get(word).or_else(|| table.get_suffix(word).map(|h| h.values))?;
        if hit.first().map(String::as_str) != Some("a") {
            return None;
        }
        let stem = drop_chars(word, 2);
        let hard_or_spelling = |soft: &str| {
            let tail = last_char(stem)?;
            Some(if is_velar(tail) || is_husher(tail) { format!("{stem}ий") } else { format!("{stem}{soft}") })
        };
        match word.get(word.len() - "ый".len()..)? {
            "ый" | "ий" | "ой" => Some(word.to_string()),
            "ая" | "ое" => hard_or_spelling("ый"),
            "яя" | "ее" => Some(format!("{stem}ий")),
            _ => None,
        }
    }

    /// Replacement stem for the oblique cases if the noun has a fleeting vowel.
    fn fleeting_stem(&self, word: &str) -> Option<String> {
        let table = self.table(FLEETING);
        if let Some(v) = table.get(word) {
            return v.first().map(|s| s.to_string()).filter(|s| !s.is_empty() && s != "-");
        }
        let hit = table.get_suffix(word)?;
        let replacement = hit.values.first()?;
        if replacement == "-" {
            return None;
        }
        let head = hit.head;
        Some(format!("{head}{replacement}"))
    }

    fn stressed_ending(&self, word: &str) -> bool {
        matches!(self.table(STRESSED).find(word).and_then(|v| v.first()), Some(v) if v != "-")
    }

    /// The twelve forms of a noun.
    pub fn noun_forms(&self, lemma: &str) -> Result<NounForms> {
        let word = normalize(lemma)?;
        let lemma = word.as_str();
        let animacy = self.noun_animacy(lemma);
        let gender = self.noun_gender(lemma);
        if let Some(forms) = self.table(PARADIGMS).get(lemma) {
            if forms.len() == 12 {
                let singular = std::array::from_fn(|i| forms[i].clone());
                let plural = std::array::from_fn(|i| forms[6 + i].clone());
                return Ok(NounForms { singular, plural, gender, animacy });
            }
        }
        if self.table(INDECLINABLE).get(lemma).is_some_and(|v| v.first().map_or(true, |f| f != "-")) {
            return Ok(NounForms::uniform(lemma, gender, animacy));
        }
        if let Some(adjective) = self.adjectival_lemma(lemma) {
            let forms = self.adjective_forms(&adjective).ok();
            // Only if the adjective gives back the lemma itself.
            if let Some(forms) = forms.filter(|f| f.get(NumberCat::N1, gender, Case::Nom, animacy) == lemma) {
                let cell = |number, case| forms.get(number, gender, case, animacy).to_string();
                let cases = [Case::Nom, Case::Gen, Case::Dat, Case::Acc, Case::Ins, Case::Prep];
                return Ok(NounForms {
                    singular: cases.map(|c| cell(NumberCat::N1, c)),
                    plural: cases.map(|c| cell(NumberCat::NX, c)),
                    gender,
                    animacy,
                });
            }
        }
        let class = self.classify_noun(lemma);
        if class.kind == DeclensionKind::Indeclinable {
            return Ok(NounForms::uniform(lemma, gender, animacy));
        }
        // Hyphenated compounds inflect the final segment only.
        if let Some((prefix, tail)) = lemma.rsplit_once('-') {
            if self.indeclinable(tail) {
                return Ok(NounForms::uniform(lemma, gender, animacy));
            }
            let inner = self.decline(tail, animacy, gender);
            let join = |s: &String| format!("{prefix}-{s}");
            return Ok(NounForms {
                singular: inner.singular.each_ref().map(join),
                plural: inner.plural.each_ref().map(join),
                gender,
                animacy,
            });
        }
        Ok(self.decline(lemma, animacy, gender))
    }

    fn decline(&self, word: &str, animacy: Animacy, gender: Gender) -> NounForms {
        let class = self.classify_noun(word);
        let oblique = self.fleeting_stem(word);
        let stressed = self.stressed_ending(word);
        let mut d = match class.kind {
            DeclensionKind::FirstA => self.first_declension(word, oblique, stressed),
            DeclensionKind::SecondNeuter => self.neuter(word, oblique, stressed),
            DeclensionKind::ThirdFeminine => third_declension(word, oblique),
            DeclensionKind::Heteroclite => heteroclite(word),
            DeclensionKind::Anin => anin(word),
            DeclensionKind::Onok => onok(word),
            _ => self.masculine(word, oblique, stressed),
        };
        if let Some(gen_pl) = self.table(GEN_PLURAL).get(word).and_then(|v| v.first()) {
            d.plural[1] = gen_pl.clone();
        } else if let Some(hit) = self.table(GEN_PLURAL).get_suffix(word) {
            if let Some(v) = hit.values.first().filter(|v| *v != "-") {
                d.plural[1] = format!("{}{v}", hit.head);
            }
        }
        let acc_sg_is_gen = animacy == Animacy::Animate
            && matches!(class.kind, DeclensionKind::SecondMasculine | DeclensionKind::Anin | DeclensionKind::Onok);
        let acc_sg_is_gen = acc_sg_is_gen || (animacy == Animacy::Animate && gender == Gender::N && class.kind == DeclensionKind::SecondNeuter && word.ends_with("ое"));
        d.singular[3] = match d.acc_singular.take() {
            Some(acc) => acc,
            None if acc_sg_is_gen => d.singular[1].clone(),
            None => d.singular[0].clone(),
        };
        d.plural[3] = if animacy == Animacy::Animate { d.plural[1].clone() } else { d.plural[0].clone() };
        NounForms { singular: d.singular, plural: d.plural, gender, animacy }
    }

    fn masculine(&self, word: &str, oblique: Option<String>, stressed: bool) -> Draft {
        let last = last_char(word).unwrap_or(' ');
        if last == 'ь' || last == 'й' {
            let stem = oblique.unwrap_or_else(|| drop_chars(word, 1).to_string());
            let after_i = stem.ends_with('и');
            let prep = if after_i && last == 'й' { "и" } else { "е" };
            let vowel_stem = matches!(last_char(&stem), Some(c) if is_vowel(c));
            let gen_pl = if last == 'й' || vowel_stem { "ев" } else { "ей" };
            let mut d = Draft::build(&stem, ["", "я", "ю", "", "ем", prep], ["и", gen_pl, "ям", "", "ями", "ях"]);
            d.singular[0] = word.to_string();
            if vowel_stem && last == 'ь' {
                // соловей-type stems spelled with й before vowels
            }
            return d;
        }
        if last == 'о' || last == 'е' {
            // masculine -о/-е nouns (домишко, подмастерье) decline like neuters
            let mut d = self.neuter(word, oblique, stressed);
            d.plural[0] = format!("{}и", drop_chars(word, 1));
            return d;
        }
        let stem = oblique.unwrap_or_else(|| word.to_string());
        let tail = last_char(&stem).unwrap_or(last);
        let plural_a = flag(self.table(PLURAL_A), word).unwrap_or(false);
        let nom_pl = if plural_a {
            "а"
        } else if is_velar(tail) || is_husher(tail) {
            "и"
        } else {
            "ы"
        };
        let (ins, gen_pl) = if is_husher(tail) {
            (if stressed { "ом" } else { "ем" }, "ей")
        } else if tail == 'ц' {
            if stressed { ("ом", "ов") } else { ("ем", "ев") }
        } else {
            ("ом", "ов")
        };
        let mut d = Draft::build(&stem, ["", "а", "у", "", ins, "е"], [nom_pl, gen_pl, "ам", "", "ами", "ах"]);
        d.singular[0] = word.to_string();
        d
    }

    fn neuter(&self, word: &str, oblique: Option<String>, stressed: bool) -> Draft {
        let stem = drop_chars(word, 1);
        let tail = last_char(stem).unwrap_or('о');
        let ends_e = word.ends_with('е');
        if ends_e && !(is_husher(tail) || tail == 'ц') {
            // soft neuters: поле, здание, платье
            let prep = if tail == 'и' { "и" } else { "е" };
            let gen_pl = if tail == 'и' {
                format!("{stem}й")
            } else if tail == 'ь' {
                format!("{}ий", drop_chars(stem, 1))
            } else {
                format!("{stem}ей")
            };
            let mut d = Draft::build(stem, ["е", "я", "ю", "", "ем", prep], ["я", "", "ям", "", "ями", "ях"]);
            d.plural[1] = gen_pl;
            d.acc_singular = Some(word.to_string());
            return d;
        }
        let ins = if is_husher(tail) || tail == 'ц' {
            if stressed { "ом" } else { "ем" }
        } else {
            "ом"
        };
        let oblique_plural = oblique.unwrap_or_else(|| stem.to_string());
        let mut d = Draft::build(stem, ["", "а", "у", "", ins, "е"], ["а", "", "ам", "", "ами", "ах"]);
        d.singular[0] = word.to_string();
        d.acc_singular = Some(word.to_string());
        for (i, ending) in ["а", "", "ам", "", "ами", "ах"].iter().enumerate() {
            d.plural[i] = format!("{oblique_plural}{ending}");
        }
        d.plural[1] = zero_genitive_plural(stem, true);
        d
    }

    fn first_declension(&self, word: &str, oblique: Option<String>, stressed: bool) -> Draft {
        let stem = drop_chars(word, 1).to_string();
        let soft = word.ends_with('я');
        let tail = last_char(&stem).unwrap_or('а');
        let _ = oblique;
        if soft {
            let dat_prep = if tail == 'и' { "и" } else { "е" };
            let gen_pl = if tail == 'и' || (is_vowel(tail) && tail != 'и') {
                format!("{stem}й")
            } else if tail == 'ь' {
                format!("{}ей", drop_chars(&stem, 1))
            } else if stem.ends_with("ня") || tail == 'н' || tail == 'л' {
                let z = zero_genitive_plural(&stem, false);
                if z.ends_with('л') && !z.ends_with("ел") { format!("{z}ь") } else if tail == 'л' { format!("{z}ь") } else { z }
            } else {
                format!("{stem}ь")
            };
            let mut d = Draft::build(&stem, ["я", "и", dat_prep, "ю", "ей", dat_prep], ["и", "", "ям", "", "ями", "ях"]);
            d.plural[1] = gen_pl;
            d.acc_singular = Some(format!("{stem}ю"));
            return d;
        }
        let gen = if is_velar(tail) || is_husher(tail) { "и" } else { "ы" };
        let ins = if (is_husher(tail) || tail == 'ц') && !stressed { "ей" } else { "ой" };
        let mut d = Draft::build(&stem, ["а", gen, "е", "у", ins, "е"], [gen, "", "ам", "", "ами", "ах"]);
        d.plural[1] = zero_genitive_plural(&stem, false);
        d.acc_singular = Some(format!("{stem}у"));
        d
    }
}

fn rulebase_len(s: &str) -> usize {
    s.chars().count()
}

/// Gender of a `-ь` noun not covered by the table.
fn soft_sign_gender(word: &str) -> Gender {
    let before = last_char(drop_chars(word, 1));
    match before {
        Some(c) if is_husher(c) => Gender::F,
        _ if word.ends_with("ость") || word.ends_with("есть") || word.ends_with("сть") => Gender::F,
        Some('л' | 'н' | 'р') => Gender::M,
        _ => Gender::F,
    }
}

/// The last hyphen-separated segment.
fn segment_tail(word: &str) -> &str {
    word.rsplit_once('-').map_or(word, |(_, t)| t)
}

/// Bare-stem genitive plural with the vowel that breaks up a final cluster
/// (сказка → сказок, окно → окон, девушка → девушек, земля → земель).
pub(crate) fn zero_genitive_plural(stem: &str, neuter: bool) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n < 3 {
        return stem.to_string();
    }
    let (x, y) = (chars[n - 2], chars[n - 1]);
    let head: String = chars[..n - 2].iter().collect();
    let cluster = (is_consonant(x) || x == 'ь' || x == 'й') && is_consonant(y) && x != y;
    if !cluster {
        return stem.to_string();
    }
    let soft_x = x == 'ь' || x == 'й';
    let vowel = match y {
        'к' => {
            if is_husher(x) || soft_x || x == 'ц' {
                'е'
            } else {
                'о'
            }
        }
        'н' | 'л' | 'ц' | 'м' | 'р' => {
            if y == 'м' && !soft_x {
                return stem.to_string();
            }
            if y == 'р' && !neuter {
                return stem.to_string();
            }
            if y == 'н' && !neuter && !(x == 'с' || soft_x) {
                return stem.to_string();
            }
            if is_velar(x) {
                'о'
            } else {
                'е'
            }
        }
        _ => return stem.to_string(),
    };
    if soft_x {
        format!("{head}{vowel}{y}")
    } else {
        format!("{head}{x}{vowel}{y}")
    }
}

fn third_declension(word: &str, oblique: Option<String>) -> Draft {
    let stem = oblique.unwrap_or_else(|| drop_chars(word, 1).to_string());
    let base = drop_chars(word, 1).to_string();
    let hush = matches!(last_char(&base), Some(c) if is_husher(c));
    let (dat, ins, prep) = if hush { ("ам", "ами", "ах") } else { ("ям", "ями", "ях") };
    let mut d = Draft::build(&stem, ["ь", "и", "и", "ь", "ью", "и"], ["и", "ей", dat, "", ins, prep]);
    d.singular[0] = word.to_string();
    d.singular[4] = format!("{word}ю");
    d.acc_singular = Some(word.to_string());
    d
}

fn heteroclite(word: &str) -> Draft {
    let stem = format!("{}ен", drop_chars(word, 1));
    let mut d = Draft::build(&stem, ["", "и", "и", "", "ем", "и"], ["а", "", "ам", "", "ами", "ах"]);
    d.singular[0] = word.to_string();
    d.plural[1] = stem.clone();
    d.acc_singular = Some(word.to_string());
    d
}

fn anin(word: &str) -> Draft {
    let plural_stem = drop_chars(word, 2);
    let mut d = Draft::build(word, ["", "а", "у", "", "ом", "е"], ["", "", "", "", "", ""]);
    for (i, ending) in ["е", "", "ам", "", "ами", "ах"].iter().enumerate() {
        d.plural[i] = format!("{plural_stem}{ending}");
    }
    d
}

fn onok(word: &str) -> Draft {
    let base = drop_chars(word, 4);
    let oblique = format!("{}к", drop_chars(word, 2));
    let hush = matches!(last_char(base), Some(c) if is_husher(c));
    let plural_stem = format!("{base}{}", if hush { "ат" } else { "ят" });
    let mut d = Draft::build(&oblique, ["", "а", "у", "", "ом", "е"], ["", "", "", "", "", ""]);
    d.singular[0] = word.to_string();
    for (i, ending) in ["а", "", "ам", "", "ами", "ах"].iter().enumerate() {
        d.plural[i] = format!("{plural_stem}{ending}");
    }
    d
}

/// Forms under construction; the accusative is filled in last.
struct Draft {
    singular: [String; 6],
    plural: [String; 6],
    acc_singular: Option<String>,
}

impl Draft {
    fn build(stem: &str, singular: [&str; 6], plural: [&str; 6]) -> Self {
        Draft {
            singular: singular.map(|e| format!("{stem}{e}")),
            plural: plural.map(|e| format!("{stem}{e}")),
            acc_singular: None,
        }
    }
}

impl Engine {
    /// One noun form. `N2`/`N5` give the shape governed by 2–4 and by 5+.
    pub fn inflect_noun(&self, lemma: &str, number: NumberCat, case: Case) -> Result<RussianWord> {
        let forms = self.noun_forms(lemma)?;
        Ok(RussianWord::from_normalized(forms.get(number, case).to_string()))
    }
}
