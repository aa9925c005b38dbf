//! Verb conjugation, imperatives, gerunds and participle lemmas.
//!
//! Every form is built from three stems read off the infinitive: the
//! infinitive stem, the present (3rd plural) stem and the past stem. Stems
//! that the infinitive does not predict come from root-keyed tables, so a
//! prefixed verb inherits the behavior of its root (`при-нести` ← `нести`).

use crate::error::{Error, Result};
use crate::grammeme::{Gender, NumberCat, Person, Tense};
use crate::rulebase::{
    drop_chars, is_husher, is_vowel, labial_or_dental_mutation, last_char, mutate, normalize,
    velar_mutation, RussianWord, SuffixHit,
};
use crate::Engine;

const PARADIGMS: &str = "verb_paradigms";
const PRESENT: &str = "verb_present_stem";
const PAST: &str = "verb_past_stem";
const ASPECT: &str = "verb_aspect";
const IMPERATIVE: &str = "verb_imperative";
const GERUND: &str = "verb_gerund";
const PASSIVE: &str = "verb_passive";

/// Verbal prefixes, longest spellings first within each family.
const PREFIXES: &[&str] = &[
    "взъ", "взо", "вз", "вс", "возо", "воз", "вос", "во", "въ", "в", "вы", "до", "за", "изъ",
    "изо", "из", "ис", "надъ", "надо", "над", "на", "недо", "низо", "низ", "нис", "обез", "обес",
    "объ", "обо", "об", "о", "отъ", "ото", "от", "пере", "подъ", "подо", "под", "по", "предъ",
    "предо", "пред", "пре", "при", "про", "разъ", "разо", "раз", "рас", "само", "со", "съ",
    "с", "у",
];

/// True if `head` is a chain of up to three verbal prefixes.
pub(crate) fn is_prefix_chain(head: &str) -> bool {
    fn go(s: &str, depth: usize) -> bool {
        if s.is_empty() {
            return true;
        }
        depth > 0 && PREFIXES.iter().any(|p| s.strip_prefix(p).is_some_and(|rest| go(rest, depth - 1)))
    }
    go(head, 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Aspect {
    Perfective,
    Imperfective,
    /// Both readings; see [`Aspect::is_perfective`].
    Biaspectual,
}

impl Aspect {
    pub fn is_perfective(self) -> bool {
        self == Aspect::Perfective
    }

    /// True when present-tense paths (present gerund, present participle,
    /// compound future) apply.
    pub fn has_present(self) -> bool {
        self != Aspect::Perfective
    }
}

/// Which stem the past gerund is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicFormKind {
    /// Consonant past stem (`запек`, `принес`).
    Bf1,
    /// Infinitive stem (`прочита`).
    Bf2,
    /// Present stem, for `-ти` verbs that take `-я` (`принес-я`).
    Bf3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasicForm {
    pub kind: BasicFormKind,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParticipleKind {
    PresentActive,
    PastActive,
    PastPassive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    /// `-ешь`, `-ут`/`-ют`.
    First,
    /// `-ешь`, always `-ю`/`-ют` (колю, колют).
    FirstSoft,
    /// Velar in 1sg and 3pl, its mutation elsewhere (пеку, печешь).
    FirstVelar,
    /// `-ишь`, `-ат`/`-ят`, 1sg mutation (люблю, любишь).
    Second,
}

impl Class {
    fn parse(code: &str) -> Option<Class> {
        Some(match code {
            "" | "1" => Class::First,
            "1s" => Class::FirstSoft,
            "1k" => Class::FirstVelar,
            "2" => Class::Second,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
struct Present {
    /// Stem of the 1st singular (before mutation) and 3rd plural.
    stem: String,
    class: Class,
    /// Stem of the 1st singular when it differs from the rule's result.
    first_sg: Option<String>,
}

impl Present {
    fn other_stem(&self) -> String {
        match self.class {
            Class::FirstVelar => match velar_mutation(&self.stem) {
                Some(m) => mutate(&self.stem, m),
                None => self.stem.clone(),
            },
            _ => self.stem.clone(),
        }
    }

    fn first_sg_stem(&self) -> String {
        if let Some(s) = &self.first_sg {
            return s.clone();
        }
        match self.class {
            Class::Second => match labial_or_dental_mutation(&self.stem) {
                Some(m) => mutate(&self.stem, m),
                None => self.stem.clone(),
            },
            _ => self.stem.clone(),
        }
    }

    fn form(&self, person: Person, plural: bool) -> String {
        let soft_after = |stem: &str| {
            self.class == Class::FirstSoft || last_char(stem).is_some_and(|c| is_vowel(c) || c == 'ь')
        };
        let second = self.class == Class::Second;
        match (person, plural) {
            (Person::P1, false) => {
                let stem = self.first_sg_stem();
                let hush = last_char(&stem).is_some_and(|c| is_husher(c) || c == 'ц');
                let ending = if hush || !(second || soft_after(&stem)) { "у" } else { "ю" };
                format!("{stem}{ending}")
            }
            (Person::P3, true) => {
                let stem = &self.stem;
                let hush = last_char(stem).is_some_and(|c| is_husher(c) || c == 'ц');
                let ending = match (second, hush || !(second || soft_after(stem))) {
                    (true, true) => "ат",
                    (true, false) => "ят",
                    (false, true) => "ут",
                    (false, false) => "ют",
                };
                format!("{stem}{ending}")
            }
            _ => {
                let stem = self.other_stem();
                let vowel = if second { "и" } else { "е" };
                let ending = match (person, plural) {
                    (Person::P2, false) => "шь",
                    (Person::P3, false) => "т",
                    (Person::P1, true) => "м",
                    (Person::P2, true) => "те",
                    _ => unreachable!(),
                };
                format!("{stem}{vowel}{ending}")
            }
        }
    }
}

/// Everything the forms are built from.
#[derive(Debug, Clone)]
pub(crate) struct VerbModel {
    lemma: String,
    base: String,
    reflexive: bool,
    aspect: Aspect,
    present: Option<Present>,
    /// Full replacements of the present forms, 1sg..3pl.
    present_forms: Option<Vec<String>>,
    past_masc: String,
    past_stem: String,
    imperative: Option<String>,
    /// Table overrides: past active participle, past gerund, present gerund,
    /// past passive participle. `Some("")` never occurs; `Some("-")` = absent.
    overrides: [Option<String>; 4],
}

fn reflexive_suffix(form: &str) -> &'static str {
    if last_char(form).is_some_and(is_vowel) {
        "сь"
    } else {
        "ся"
    }
}

fn field(hit: &SuffixHit<'_>, i: usize) -> Option<String> {
    let v = hit.values.get(i)?.as_str();
    match v {
        "" => None,
        "-" => Some("-".to_string()),
        _ => Some(format!("{}{v}", hit.head)),
    }
}

impl Engine {
    fn verb_lookup<'a>(&'a self, table: &str, base: &'a str) -> Option<SuffixHit<'a>> {
        self.table(table).lookup(base, is_prefix_chain)
    }

    pub(crate) fn verb_model(&self, infinitive: &str) -> Result<VerbModel> {
        let word = normalize(infinitive)?;
        let lemma = word.into_string();
        let invalid = || Error::InvalidLemma { lemma: lemma.clone(), expected: "verb infinitive" };
        let (base, reflexive) = if let Some(b) = lemma.strip_suffix("ся").filter(|b| b.ends_with("ть") || b.ends_with("чь")) {
            (b.to_string(), true)
        } else if let Some(b) = lemma.strip_suffix("сь").filter(|b| b.ends_with("ти")) {
            (b.to_string(), true)
        } else {
            (lemma.clone(), false)
        };
        if !(base.ends_with("ть") || base.ends_with("ти") || base.ends_with("чь")) || base.chars().count() < 3 {
            return Err(invalid());
        }
        let aspect = self.aspect_of(&lemma, &base);
        let mut model = VerbModel {
            lemma: lemma.clone(),
            base: base.clone(),
            reflexive,
            aspect,
            present: None,
            present_forms: None,
            past_masc: String::new(),
            past_stem: String::new(),
            imperative: None,
            overrides: [None, None, None, None],
        };

        if let Some(hit) = self.verb_lookup(PARADIGMS, &base) {
            let vals: Vec<String> = (0..11).map(|i| field(&hit, i).unwrap_or_default()).collect();
            if vals[..6].iter().all(|v| v == "-") {
                model.present_forms = Some(Vec::new());
            } else {
                model.present_forms = Some(vals[..6].to_vec());
            }
            model.past_masc = vals[6].clone();
            model.past_stem = vals[7].strip_suffix('а').unwrap_or(&vals[7]).to_string();
            model.imperative = Some(vals[10].clone()).filter(|s| !s.is_empty());
            for (k, slot) in model.overrides.iter_mut().enumerate() {
                *slot = field(&hit, 11 + k);
            }
            return Ok(model);
        }

        let (present, imperative) = self.present_of(&base).ok_or_else(invalid)?;
        model.imperative = imperative;
        let (masc, stem) = self.past_of(&base, &present).ok_or_else(invalid)?;
        model.past_masc = masc;
        model.past_stem = stem;
        model.present = Some(present);
        Ok(model)
    }

    fn present_of(&self, base: &str) -> Option<(Present, Option<String>)> {
        if let Some(hit) = self.verb_lookup(PRESENT, base) {
            // `-` defers to the shape rules; an empty stem is the head alone.
            let tail = hit.values.first().map(String::as_str).unwrap_or("");
            if tail != "-" {
                let stem = format!("{}{tail}", hit.head);
                let class = Class::parse(hit.values.get(1).map(String::as_str).unwrap_or(""))?;
                let first_sg = field(&hit, 3).filter(|s| s != "-");
                return Some((Present { stem, class, first_sg }, field(&hit, 2)));
            }
        }
        let p = |stem: &str, class| Some((Present { stem: stem.to_string(), class, first_sg: None }, None));
        let ends = |s: &str| base.ends_with(s);
        let cut = |n: usize| drop_chars(base, n);
        if ends("овать") && base.chars().count() > 5 {
            return p(&format!("{}у", cut(5)), Class::First);
        }
        if ends("евать") {
            let head = cut(5);
            let u = if last_char(head).is_some_and(|c| is_husher(c) || c == 'ц') { "у" } else { "ю" };
            return p(&format!("{head}{u}"), Class::First);
        }
        if ends("ять") && last_char(cut(3)).is_some_and(is_vowel) {
            return p(cut(3), Class::First);
        }
        if ends("ать") || ends("ять") || ends("еть") {
            return p(cut(2), Class::First);
        }
        if ends("нуть") {
            return p(cut(3), Class::First);
        }
        if ends("ить") {
            return p(cut(3), Class::Second);
        }
        if ends("уть") {
            return p(cut(2), Class::First);
        }
        if ends("оть") {
            return p(cut(3), Class::FirstSoft);
        }
        if ends("ыть") {
            return p(&format!("{}о", cut(3)), Class::First);
        }
        if ends("ти") || ends("сть") || ends("зть") {
            return p(cut(2), Class::First);
        }
        if ends("чь") {
            return p(&format!("{}к", cut(2)), Class::FirstVelar);
        }
        None
    }

    fn past_of(&self, base: &str, present: &Present) -> Option<(String, String)> {
        if let Some(hit) = self.verb_lookup(PAST, base) {
            let masc = field(&hit, 0)?;
            if masc != "-" {
                let stem = field(&hit, 1).unwrap_or_else(|| format!("{masc}л"));
                return Some((masc, stem));
            }
        }
        if base.ends_with("ереть") {
            let masc = drop_chars(base, 3).to_string();
            return Some((masc.clone(), format!("{masc}л")));
        }
        if base.ends_with("ть") && last_char(drop_chars(base, 2)).is_some_and(is_vowel) {
            let masc = format!("{}л", drop_chars(base, 2));
            return Some((masc.clone(), masc));
        }
        let stem = &present.stem;
        if base.ends_with("ти") || base.ends_with("сть") || base.ends_with("зть") || base.ends_with("чь") {
            if stem.ends_with('д') || stem.ends_with('т') {
                let masc = format!("{}л", drop_chars(stem, 1));
                return Some((masc.clone(), masc));
            }
            return Some((stem.clone(), format!("{stem}л")));
        }
        None
    }

    fn aspect_of(&self, lemma: &str, base: &str) -> Aspect {
        let table = self.table(ASPECT);
        // `pi`: imperfective bare, perfective once prefixed. A root entry
        // knows its prefix; a suffix pattern asks the shape test.
        let (value, prefixed) = if let Some(v) = table.get(lemma).or_else(|| table.get(base)) {
            (v.first(), false)
        } else if let Some(hit) = table.get_root(base, is_prefix_chain) {
            (hit.values.first(), !hit.head.is_empty())
        } else if let Some(hit) = table.get_suffix(base) {
            (hit.values.first(), is_prefixed(base))
        } else {
            (None, false)
        };
        match value.map(String::as_str) {
            Some("p") => Aspect::Perfective,
            Some("i") => Aspect::Imperfective,
            Some("b") => Aspect::Biaspectual,
            Some("pi") if prefixed => Aspect::Perfective,
            Some("pi") => Aspect::Imperfective,
            _ => aspect_by_shape(base),
        }
    }

    /// Perfective, imperfective or biaspectual, from prefix and suffix shape
    /// plus the aspect table.
    pub fn get_perfectness(&self, infinitive: &str) -> Result<Aspect> {
        Ok(self.verb_model(infinitive)?.aspect)
    }

    fn finite(&self, m: &VerbModel, person: Person, plural: bool) -> Result<String> {
        let form = match (&m.present_forms, &m.present) {
            (Some(forms), _) => {
                let i = person_index(person) + if plural { 3 } else { 0 };
                match forms.get(i).map(String::as_str) {
                    None | Some("-") | Some("") => {
                        return Err(Error::FormAbsent { lemma: m.lemma.clone(), form: "present" })
                    }
                    Some(f) => f.to_string(),
                }
            }
            (None, Some(p)) => p.form(person, plural),
            (None, None) => return Err(Error::FormAbsent { lemma: m.lemma.clone(), form: "present" }),
        };
        Ok(with_reflexive(m, form))
    }

    /// One finite form. Perfective verbs answer a present request with their
    /// synthetic (future-meaning) form; imperfective futures are analytic.
    pub fn conjugate(
        &self,
        infinitive: &str,
        person: Person,
        number: NumberCat,
        gender: Gender,
        tense: Tense,
    ) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        let plural = number.is_plural();
        let text = match tense {
            Tense::Present => self.finite(&m, person, plural)?,
            Tense::Future if m.aspect == Aspect::Imperfective => {
                let aux = ["буду", "будешь", "будет", "будем", "будете", "будут"];
                let i = person_index(person) + if plural { 3 } else { 0 };
                format!("{} {}", aux[i], m.lemma)
            }
            Tense::Future => self.finite(&m, person, plural)?,
            Tense::Past => {
                if m.past_masc.is_empty() || m.past_masc == "-" {
                    return Err(Error::FormAbsent { lemma: m.lemma.clone(), form: "past" });
                }
                let form = match (plural, gender) {
                    (true, _) => format!("{}и", m.past_stem),
                    (false, Gender::M) => m.past_masc.clone(),
                    (false, Gender::F) => format!("{}а", m.past_stem),
                    (false, Gender::N) => format!("{}о", m.past_stem),
                };
                with_reflexive(&m, form)
            }
        };
        Ok(RussianWord::from_normalized(text))
    }

    pub fn imperative(&self, infinitive: &str, number: NumberCat) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        let sg = self.imperative_singular(&m)?;
        let text = if number.is_plural() { format!("{sg}те") } else { sg };
        Ok(RussianWord::from_normalized(with_reflexive(&m, text)))
    }

    fn imperative_singular(&self, m: &VerbModel) -> Result<String> {
        let absent = || Error::FormAbsent { lemma: m.lemma.clone(), form: "imperative" };
        // Exact entries first, then a paradigm row, then patterns.
        let hit = self.verb_lookup(IMPERATIVE, &m.base);
        let exact = hit.is_some_and(|h| self.table(IMPERATIVE).contains(h.suffix) && h.head.is_empty());
        let from_row = m.present.is_none() && m.imperative.is_some();
        if let Some(hit) = hit.filter(|_| exact || !from_row) {
            return match field(&hit, 0) {
                Some(f) if f != "-" => Ok(f),
                _ => Err(absent()),
            };
        }
        if let Some(f) = &m.imperative {
            return if f == "-" { Err(absent()) } else { Ok(f.clone()) };
        }
        // вы- takes the imperative of the unprefixed verb.
        if let Some(rest) = m.base.strip_prefix("вы").filter(|r| r.chars().count() >= 4) {
            if let Ok(inner) = self.verb_model(rest) {
                if let Ok(f) = self.imperative_singular(&inner) {
                    return Ok(format!("вы{f}"));
                }
            }
        }
        if m.base.ends_with("авать") && m.present.as_ref().is_some_and(|p| !p.stem.ends_with("ва")) {
            return Ok(format!("{}й", drop_chars(&m.base, 2)));
        }
        let stem = match (&m.present, &m.present_forms) {
            (Some(p), _) => p.stem.clone(),
            (None, Some(forms)) if forms.len() == 6 && forms[5] != "-" => {
                drop_chars(&forms[5], 2).to_string()
            }
            _ => return Err(absent()),
        };
        let last = last_char(&stem).ok_or_else(absent)?;
        if is_vowel(last) {
            return Ok(format!("{stem}й"));
        }
        if last == 'ь' {
            return Ok(format!("{}ей", drop_chars(&stem, 1)));
        }
        Ok(format!("{stem}и"))
    }

    /// The stem the past gerund is built on.
    pub fn basic_form(&self, infinitive: &str) -> Result<BasicForm> {
        let m = self.verb_model(infinitive)?;
        Ok(basic_form_of(&m))
    }

    /// The gerund formed on the basic form; exceptions are checked first.
    pub fn perfective_gerund(&self, infinitive: &str) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        if m.aspect == Aspect::Imperfective {
            return Err(Error::NotPerfective(m.lemma));
        }
        self.past_gerund_of(&m)
    }

    /// The past gerund regardless of aspect (читав, прочитав).
    pub fn past_gerund(&self, infinitive: &str) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        self.past_gerund_of(&m)
    }

    fn past_gerund_of(&self, m: &VerbModel) -> Result<RussianWord> {
        let absent = || Error::FormAbsent { lemma: m.lemma.clone(), form: "gerund" };
        if let Some(f) = self.gerund_override(m, 0).or_else(|| m.overrides[1].clone().map(|f| reflexive_gerund(m, f))) {
            return if f == "-" { Err(absent()) } else { Ok(RussianWord::from_normalized(f)) };
        }
        let bf = basic_form_of(m);
        let text = match bf.kind {
            BasicFormKind::Bf3 => {
                let a = if last_char(&bf.text).is_some_and(is_husher) { "а" } else { "я" };
                format!("{}{a}{}", bf.text, if m.reflexive { "сь" } else { "" })
            }
            _ if last_char(&bf.text).is_some_and(is_vowel) => {
                format!("{}{}", bf.text, if m.reflexive { "вшись" } else { "в" })
            }
            _ => format!("{}{}", bf.text, if m.reflexive { "шись" } else { "ши" }),
        };
        Ok(RussianWord::from_normalized(text))
    }

    fn gerund_override(&self, m: &VerbModel, i: usize) -> Option<String> {
        let hit = self.verb_lookup(GERUND, &m.lemma)?;
        field(&hit, i)
    }

    /// Present-stem gerund of imperfective verbs (читая, крича).
    pub fn imperfective_gerund(&self, infinitive: &str) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        let absent = || Error::FormAbsent { lemma: m.lemma.clone(), form: "gerund" };
        if !m.aspect.has_present() {
            return Err(absent());
        }
        if let Some(f) = self.gerund_override(&m, 1).or_else(|| m.overrides[2].clone().map(|f| reflexive_gerund(&m, f))) {
            return if f == "-" { Err(absent()) } else { Ok(RussianWord::from_normalized(f)) };
        }
        let stem = if m.base.ends_with("авать") && m.present.as_ref().is_some_and(|p| !p.stem.ends_with("ва")) {
            drop_chars(&m.base, 2).to_string()
        } else {
            match &m.present {
                Some(p) if p.class == Class::FirstVelar => return Err(absent()),
                Some(p) => p.other_stem(),
                None => match &m.present_forms {
                    Some(f) if f.len() == 6 && f[5] != "-" => drop_chars(&f[5], 2).to_string(),
                    _ => return Err(absent()),
                },
            }
        };
        let last = last_char(&stem).ok_or_else(absent)?;
        let a = if is_husher(last) { "а" } else { "я" };
        let stem = stem.strip_suffix('ь').unwrap_or(&stem);
        Ok(RussianWord::from_normalized(format!("{stem}{a}{}", if m.reflexive { "сь" } else { "" })))
    }

    /// Masculine nominative singular of a participle; inflect it with the
    /// adjective functions.
    pub fn participle_lemma(&self, infinitive: &str, kind: ParticipleKind) -> Result<RussianWord> {
        let m = self.verb_model(infinitive)?;
        let absent = |form| Error::FormAbsent { lemma: m.lemma.clone(), form };
        let text = match kind {
            ParticipleKind::PresentActive => {
                if !m.aspect.has_present() {
                    return Err(absent("present active participle"));
                }
                let third_pl = match (&m.present_forms, &m.present) {
                    (Some(f), _) if f.len() == 6 && f[5] != "-" => f[5].clone(),
                    (None, Some(p)) => p.form(Person::P3, true),
                    _ => return Err(absent("present active participle")),
                };
                format!("{}щий", drop_chars(&third_pl, 1))
            }
            ParticipleKind::PastActive => match &m.overrides[0] {
                Some(f) if f == "-" => return Err(absent("past active participle")),
                Some(f) => f.clone(),
                None => {
                    let bf = participle_stem(&m);
                    if last_char(&bf).is_some_and(is_vowel) {
                        format!("{bf}вший")
                    } else {
                        format!("{bf}ший")
                    }
                }
            },
            ParticipleKind::PastPassive => {
                if m.reflexive {
                    return Err(absent("past passive participle"));
                }
                let over = self
                    .verb_lookup(PASSIVE, &m.base)
                    .and_then(|h| field(&h, 0))
                    .or_else(|| m.overrides[3].clone());
                match over {
                    Some(f) if f == "-" => return Err(absent("past passive participle")),
                    Some(f) => f,
                    None => past_passive(&m).ok_or_else(|| absent("past passive participle"))?,
                }
            }
        };
        let text = if m.reflexive { format!("{text}ся") } else { text };
        Ok(RussianWord::from_normalized(text))
    }
}

fn person_index(p: Person) -> usize {
    match p {
        Person::P1 => 0,
        Person::P2 => 1,
        Person::P3 => 2,
    }
}

/// Reflexive gerund from a non-reflexive one: читав → читавшись, читая → читаясь.
fn reflexive_gerund(m: &VerbModel, form: String) -> String {
    if !m.reflexive || form == "-" {
        form
    } else if form.ends_with('в') {
        format!("{form}шись")
    } else {
        format!("{form}сь")
    }
}

fn with_reflexive(m: &VerbModel, form: String) -> String {
    if m.reflexive {
        let suffix = reflexive_suffix(&form);
        format!("{form}{suffix}")
    } else {
        form
    }
}

/// Stem before `-вший`/`-ший`.
fn participle_stem(m: &VerbModel) -> String {
    if let Some(p) = &m.present {
        if m.base.ends_with("ти") && (p.stem.ends_with('д') || p.stem.ends_with('т')) {
            return p.stem.clone();
        }
    }
    match m.past_masc.strip_suffix('л') {
        Some(s) if last_char(s).is_some_and(is_vowel) => s.to_string(),
        _ => m.past_masc.clone(),
    }
}

fn basic_form_of(m: &VerbModel) -> BasicForm {
    let stem = participle_stem(m);
    let ti = m.base.ends_with("ти");
    if ti && m.aspect.is_perfective() {
        if let Some(p) = &m.present {
            return BasicForm { kind: BasicFormKind::Bf3, text: p.stem.clone() };
        }
        if let Some(f) = m.present_forms.as_ref().filter(|f| f.len() == 6 && f[5] != "-") {
            return BasicForm { kind: BasicFormKind::Bf3, text: drop_chars(&f[5], 2).to_string() };
        }
    }
    if last_char(&stem).is_some_and(is_vowel) {
        BasicForm { kind: BasicFormKind::Bf2, text: stem }
    } else {
        BasicForm { kind: BasicFormKind::Bf1, text: stem }
    }
}

fn past_passive(m: &VerbModel) -> Option<String> {
    let b = m.base.as_str();
    let tyj = ["нуть", "ыть", "уть", "оть", "ереть"];
    if tyj.iter().any(|e| b.ends_with(e)) {
        let stem = if b.ends_with("ереть") { drop_chars(b, 3).to_string() } else { drop_chars(b, 2).to_string() };
        return Some(format!("{stem}тый"));
    }
    if b.ends_with("ать") || b.ends_with("ять") {
        return Some(format!("{}нный", drop_chars(b, 2)));
    }
    let p = m.present.as_ref()?;
    if b.ends_with("ить") && p.class == Class::FirstSoft {
        return Some(format!("{}тый", drop_chars(b, 2)));
    }
    let stem = match p.class {
        Class::Second if b.ends_with("ить") => {
            let s = p.first_sg_stem();
            if p.first_sg.is_none() && p.stem.ends_with('д') && s.ends_with('ж') && !s.ends_with("жж") {
                format!("{s}д")
            } else {
                s
            }
        }
        Class::FirstVelar => p.other_stem(),
        _ if b.ends_with("еть") && p.class == Class::First => return Some(format!("{}тый", drop_chars(b, 2))),
        _ => p.stem.clone(),
    };
    Some(format!("{stem}енный"))
}

/// Aspect from the shape of the infinitive when no table entry applies.
fn aspect_by_shape(base: &str) -> Aspect {
    let imperfective_suffixes = ["ывать", "ивать", "авать", "евать"];
    if imperfective_suffixes.iter().any(|s| base.ends_with(s)) && !base.ends_with("ревать") {
        return Aspect::Imperfective;
    }
    if base.ends_with("нуть") {
        return Aspect::Perfective;
    }
    if !is_prefixed(base) {
        return Aspect::Imperfective;
    }
    // Secondary imperfectives of prefixed verbs: -ать/-ять paired with -ить.
    let derived = ["щать", "чать", "жать", "шать", "лять", "нять", "рять", "вять", "ждать"];
    if derived.iter().any(|s| base.ends_with(s)) && !base.ends_with("ержать") {
        return Aspect::Imperfective;
    }
    Aspect::Perfective
}

/// True if the infinitive starts with a prefix followed by a syllabic root.
fn is_prefixed(base: &str) -> bool {
    PREFIXES.iter().any(|p| {
        base.strip_prefix(p)
            .is_some_and(|rest| rest.chars().count() >= 4 && rest.chars().any(is_vowel) && vowels_before_ending(rest) >= 1)
    })
}

/// Vowels in a stem before the infinitive ending.
fn vowels_before_ending(rest: &str) -> usize {
    let stem = drop_chars(rest, 3);
    stem.chars().filter(|c| is_vowel(*c)).count()
}
