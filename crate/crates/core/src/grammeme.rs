//! Grammatical categories, their wire codes and the fixed paradigm grids.
//!
//! Every category value has exactly one canonical short code. The codes are
//! the normative mapping used by the query protocol, the CLI and the
//! verification reports:
//!
//! | category | codes |
//! |----------|-------|
//! | person   | `p1` `p2` `p3` |
//! | number   | `n1` singular, `nx` plural, `n2` after 2–4, `n5` after 5+ |
//! | gender   | `gm` `gf` `gn` |
//! | tense    | `tc` present, `tp` past, `tf` future |
//! | case     | `ci` `cr` `cd` `cv` `ct` `cp` |
//! | animacy  | `a` animate, `an` inanimate |
//! | degree   | `fc` comparative, `fs` superlative |
//! | numeral  | `card` `ordi` `frac` |
//!
//! Two input aliases are accepted by [`parse_code`] but never rendered:
//! `ti` (instrumental) and `na` (inanimate).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

macro_rules! coded_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $code:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn code(self) -> &'static str {
                match self {
                    $($name::$variant => $code),+
                }
            }

            fn from_canonical(token: &str) -> Option<Self> {
                match token {
                    $($code => Some($name::$variant),)+
                    _ => None,
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.code())
            }
        }
    };
}

coded_enum!(
    /// Grammatical person.
    Person { P1 => "p1", P2 => "p2", P3 => "p3" }
);

coded_enum!(
    /// Grammatical number, including the two numeral-governed plurals.
    NumberCat {
        N1 => "n1",
        NX => "nx",
        N2 => "n2",
        N5 => "n5",
    }
);

coded_enum!(
    Gender { M => "gm", F => "gf", N => "gn" }
);

coded_enum!(
    Tense { Present => "tc", Past => "tp", Future => "tf" }
);

coded_enum!(
    Case {
        Nom => "ci",
        Gen => "cr",
        Dat => "cd",
        Acc => "cv",
        Ins => "ct",
        Prep => "cp",
    }
);

coded_enum!(
    Animacy { Animate => "a", Inanimate => "an" }
);

coded_enum!(
    /// Degree of comparison (adverbs only).
    Degree { Comparative => "fc", Superlative => "fs" }
);

coded_enum!(
    NumeralKind { Cardinal => "card", Ordinal => "ordi", Fractional => "frac" }
);

impl NumberCat {
    /// Singular or plural after collapsing the numeral-governed plurals.
    pub fn is_plural(self) -> bool {
        self != NumberCat::N1
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match parse_code(s)? {
            Grammeme::Case(c) => Ok(c),
            _ => Err(Error::UnknownCode(s.to_string())),
        }
    }
}

/// Any single grammeme value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grammeme {
    Person(Person),
    Number(NumberCat),
    Gender(Gender),
    Tense(Tense),
    Case(Case),
    Animacy(Animacy),
    Degree(Degree),
    NumeralKind(NumeralKind),
}

impl Grammeme {
    /// Every grammeme value, in table order.
    pub fn all() -> impl Iterator<Item = Grammeme> {
        Person::ALL
            .iter()
            .map(|&v| Grammeme::Person(v))
            .chain(NumberCat::ALL.iter().map(|&v| Grammeme::Number(v)))
            .chain(Gender::ALL.iter().map(|&v| Grammeme::Gender(v)))
            .chain(Tense::ALL.iter().map(|&v| Grammeme::Tense(v)))
            .chain(Case::ALL.iter().map(|&v| Grammeme::Case(v)))
            .chain(Animacy::ALL.iter().map(|&v| Grammeme::Animacy(v)))
            .chain(Degree::ALL.iter().map(|&v| Grammeme::Degree(v)))
            .chain(NumeralKind::ALL.iter().map(|&v| Grammeme::NumeralKind(v)))
    }
}

/// Parses one wire code. Accepts the canonical codes plus the `ti`/`na` aliases.
pub fn parse_code(token: &str) -> Result<Grammeme, Error> {
    let token = token.trim();
    let found = match token {
        "ti" => Some(Grammeme::Case(Case::Ins)),
        "na" => Some(Grammeme::Animacy(Animacy::Inanimate)),
        _ => Person::from_canonical(token)
            .map(Grammeme::Person)
            .or_else(|| NumberCat::from_canonical(token).map(Grammeme::Number))
            .or_else(|| Gender::from_canonical(token).map(Grammeme::Gender))
            .or_else(|| Tense::from_canonical(token).map(Grammeme::Tense))
            .or_else(|| Case::from_canonical(token).map(Grammeme::Case))
            .or_else(|| Animacy::from_canonical(token).map(Grammeme::Animacy))
            .or_else(|| Degree::from_canonical(token).map(Grammeme::Degree))
            .or_else(|| NumeralKind::from_canonical(token).map(Grammeme::NumeralKind)),
    };
    found.ok_or_else(|| Error::UnknownCode(token.to_string()))
}

/// Canonical code of a grammeme value.
pub fn render_code(value: Grammeme) -> &'static str {
    match value {
        Grammeme::Person(v) => v.code(),
        Grammeme::Number(v) => v.code(),
        Grammeme::Gender(v) => v.code(),
        Grammeme::Tense(v) => v.code(),
        Grammeme::Case(v) => v.code(),
        Grammeme::Animacy(v) => v.code(),
        Grammeme::Degree(v) => v.code(),
        Grammeme::NumeralKind(v) => v.code(),
    }
}

impl fmt::Display for Grammeme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(render_code(*self))
    }
}

/// The paradigm families the engine generates, one per benchmark row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Ordinal,
    Cardinal,
    PresentActiveParticiple,
    PastActiveParticiple,
    PastPassiveParticiple,
    Gerund,
    Imperative,
}

impl Pos {
    pub const ALL: [Pos; 11] = [
        Pos::Noun,
        Pos::Verb,
        Pos::Adjective,
        Pos::Adverb,
        Pos::Ordinal,
        Pos::Cardinal,
        Pos::PresentActiveParticiple,
        Pos::PastActiveParticiple,
        Pos::PastPassiveParticiple,
        Pos::Gerund,
        Pos::Imperative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adjective => "adjective",
            Pos::Adverb => "adverb",
            Pos::Ordinal => "ordinal",
            Pos::Cardinal => "cardinal",
            Pos::PresentActiveParticiple => "participle-present-active",
            Pos::PastActiveParticiple => "participle-past-active",
            Pos::PastPassiveParticiple => "participle-past-passive",
            Pos::Gerund => "gerund",
            Pos::Imperative => "imperative",
        }
    }

    /// Number of cells in the benchmark grid.
    pub fn grid_len(self) -> usize {
        match self {
            Pos::Noun => 12,
            Pos::Verb => 24,
            Pos::Adjective
            | Pos::PresentActiveParticiple
            | Pos::PastActiveParticiple
            | Pos::PastPassiveParticiple => 28,
            Pos::Adverb | Pos::Gerund | Pos::Imperative => 2,
            Pos::Ordinal => 18,
            Pos::Cardinal => 24,
        }
    }

    /// True for the families whose lemma is an infinitive.
    pub fn is_verbal(self) -> bool {
        matches!(
            self,
            Pos::Verb
                | Pos::Gerund
                | Pos::Imperative
                | Pos::PresentActiveParticiple
                | Pos::PastActiveParticiple
                | Pos::PastPassiveParticiple
        )
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pos {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().to_ascii_lowercase();
        let pos = match s.as_str() {
            "noun" | "nouns" => Pos::Noun,
            "verb" | "verbs" => Pos::Verb,
            "adjective" | "adjectives" | "adj" => Pos::Adjective,
            "adverb" | "adverbs" => Pos::Adverb,
            "ordinal" | "ordinals" => Pos::Ordinal,
            "cardinal" | "cardinals" => Pos::Cardinal,
            "participle-present-active" | "prtf-pres-actv" => Pos::PresentActiveParticiple,
            "participle-past-active" | "prtf-past-actv" => Pos::PastActiveParticiple,
            "participle-past-passive" | "prtf-past-pssv" => Pos::PastPassiveParticiple,
            "gerund" | "gerunds" => Pos::Gerund,
            "imperative" | "imperatives" => Pos::Imperative,
            _ => return Err(Error::UnknownPos(s)),
        };
        Ok(pos)
    }
}

/// One cell of a paradigm: a paradigm family plus the grammemes selecting it.
///
/// Only the categories that apply to `pos` are set. Gerund cells use `tense`
/// to tell the perfective-style (past) form from the imperfective-style
/// (present) one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FormSpec {
    pub pos: Option<Pos>,
    pub person: Option<Person>,
    pub number: Option<NumberCat>,
    pub gender: Option<Gender>,
    pub tense: Option<Tense>,
    pub case: Option<Case>,
    pub animacy: Option<Animacy>,
    pub degree: Option<Degree>,
    pub numeral_kind: Option<NumeralKind>,
}

impl FormSpec {
    fn of(pos: Pos) -> Self {
        FormSpec { pos: Some(pos), ..Default::default() }
    }

    pub fn noun(number: NumberCat, case: Case) -> Self {
        FormSpec { number: Some(number), case: Some(case), ..Self::of(Pos::Noun) }
    }

    pub fn adjectival(pos: Pos, number: NumberCat, gender: Gender, case: Case, animacy: Animacy) -> Self {
        FormSpec {
            number: Some(number),
            gender: Some(gender),
            case: Some(case),
            animacy: Some(animacy),
            ..Self::of(pos)
        }
    }

    pub fn verb(tense: Tense, person: Person, number: NumberCat, gender: Gender) -> Self {
        FormSpec {
            tense: Some(tense),
            person: Some(person),
            number: Some(number),
            gender: Some(gender),
            ..Self::of(Pos::Verb)
        }
    }

    pub fn gerund(tense: Tense) -> Self {
        FormSpec { tense: Some(tense), ..Self::of(Pos::Gerund) }
    }

    pub fn imperative(number: NumberCat) -> Self {
        FormSpec { number: Some(number), ..Self::of(Pos::Imperative) }
    }

    pub fn adverb(degree: Degree) -> Self {
        FormSpec { degree: Some(degree), ..Self::of(Pos::Adverb) }
    }

    pub fn ordinal(gender: Gender, case: Case) -> Self {
        FormSpec {
            gender: Some(gender),
            case: Some(case),
            numeral_kind: Some(NumeralKind::Ordinal),
            ..Self::of(Pos::Ordinal)
        }
    }

    /// A cardinal cell; `number` is `NX` for the plural column, `N1` otherwise.
    pub fn cardinal(number: NumberCat, gender: Gender, case: Case) -> Self {
        FormSpec {
            number: Some(number),
            gender: Some(gender),
            case: Some(case),
            numeral_kind: Some(NumeralKind::Cardinal),
            ..Self::of(Pos::Cardinal)
        }
    }

    /// The set grammemes in canonical order.
    pub fn grammemes(&self) -> Vec<Grammeme> {
        let mut out = Vec::with_capacity(5);
        out.extend(self.person.map(Grammeme::Person));
        out.extend(self.number.map(Grammeme::Number));
        out.extend(self.gender.map(Grammeme::Gender));
        out.extend(self.tense.map(Grammeme::Tense));
        out.extend(self.case.map(Grammeme::Case));
        out.extend(self.animacy.map(Grammeme::Animacy));
        out.extend(self.degree.map(Grammeme::Degree));
        out.extend(self.numeral_kind.map(Grammeme::NumeralKind));
        out
    }

    /// `;`-joined codes, e.g. `nx;cr` or `p3;n1;gm;tp`.
    pub fn code_string(&self) -> String {
        let codes: Vec<&str> = self.grammemes().into_iter().map(render_code).collect();
        codes.join(";")
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code_string())
    }
}

/// Plural sub-paradigms of adjectives carry this placeholder gender.
pub const PLURAL_GENDER: Gender = Gender::M;

fn adjectival_grid(pos: Pos) -> Vec<FormSpec> {
    let columns = [
        (NumberCat::N1, Gender::M),
        (NumberCat::N1, Gender::F),
        (NumberCat::N1, Gender::N),
        (NumberCat::NX, PLURAL_GENDER),
    ];
    let mut grid = Vec::with_capacity(28);
    for (number, gender) in columns {
        for &case in Case::ALL {
            grid.push(FormSpec::adjectival(pos, number, gender, case, Animacy::Inanimate));
            if case == Case::Acc {
                grid.push(FormSpec::adjectival(pos, number, gender, case, Animacy::Animate));
            }
        }
    }
    grid
}

/// The fixed, ordered cell list generated for one lemma of `pos`.
///
/// Ordering: numbers `n1` before `nx`, genders `gm gf gn`, cases in code-table
/// order, tenses `tc tp tf`. Layouts:
///
/// * noun: {n1, nx} × 6 cases = 12
/// * verb: present 3 persons × {n1, nx} (6), past 3 persons × {gm, gf, gn, nx} (12),
///   future 3 persons × {n1, nx} (6) = 24
/// * adjective and each participle family: {gm, gf, gn singular, plural} ×
///   (6 cases + animate accusative) = 28
/// * adverb: {fc, fs}; gerund: {tp, tc}; imperative: {n1, nx}
/// * ordinal: 3 genders × 6 cases = 18
/// * cardinal: {gm, gf, gn, nx} × 6 cases = 24
pub fn benchmark_grid(pos: Pos) -> Vec<FormSpec> {
    match pos {
        Pos::Noun => [NumberCat::N1, NumberCat::NX]
            .iter()
            .flat_map(|&n| Case::ALL.iter().map(move |&c| FormSpec::noun(n, c)))
            .collect(),
        Pos::Verb => {
            let mut grid = Vec::with_capacity(24);
            for &tense in Tense::ALL {
                for &person in Person::ALL {
                    if tense == Tense::Past {
                        for &gender in Gender::ALL {
                            grid.push(FormSpec::verb(tense, person, NumberCat::N1, gender));
                        }
                        grid.push(FormSpec::verb(tense, person, NumberCat::NX, Gender::M));
                    } else {
                        for number in [NumberCat::N1, NumberCat::NX] {
                            grid.push(FormSpec::verb(tense, person, number, Gender::M));
                        }
                    }
                }
            }
            grid
        }
        Pos::Adjective
        | Pos::PresentActiveParticiple
        | Pos::PastActiveParticiple
        | Pos::PastPassiveParticiple => adjectival_grid(pos),
        Pos::Adverb => vec![
            FormSpec::adverb(Degree::Comparative),
            FormSpec::adverb(Degree::Superlative),
        ],
        Pos::Ordinal => Gender::ALL
            .iter()
            .flat_map(|&g| Case::ALL.iter().map(move |&c| FormSpec::ordinal(g, c)))
            .collect(),
        Pos::Cardinal => {
            let columns = [
                (NumberCat::N1, Gender::M),
                (NumberCat::N1, Gender::F),
                (NumberCat::N1, Gender::N),
                (NumberCat::NX, Gender::M),
            ];
            columns
                .iter()
                .flat_map(|&(n, g)| Case::ALL.iter().map(move |&c| FormSpec::cardinal(n, g, c)))
                .collect()
        }
        Pos::Gerund => vec![FormSpec::gerund(Tense::Past), FormSpec::gerund(Tense::Present)],
        Pos::Imperative => vec![
            FormSpec::imperative(NumberCat::N1),
            FormSpec::imperative(NumberCat::NX),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parses_published_codes() {
        assert_eq!(parse_code("cr").unwrap(), Grammeme::Case(Case::Gen));
        assert_eq!(parse_code("p3").unwrap(), Grammeme::Person(Person::P3));
        assert_eq!(parse_code("zz"), Err(Error::UnknownCode("zz".into())));
    }

    #[test]
    fn renders_codes() {
        assert_eq!(render_code(Grammeme::Case(Case::Prep)), "cp");
        assert_eq!(render_code(Grammeme::Number(NumberCat::NX)), "nx");
        assert_eq!(render_code(Grammeme::Tense(Tense::Future)), "tf");
    }

    #[test]
    fn aliases_parse_but_render_canonically() {
        assert_eq!(parse_code("ti").unwrap(), Grammeme::Case(Case::Ins));
        assert_eq!(parse_code("na").unwrap(), Grammeme::Animacy(Animacy::Inanimate));
        assert_eq!(render_code(parse_code("ti").unwrap()), "ct");
    }

    #[test]
    fn code_round_trip_is_bijective() {
        let mut seen = HashSet::new();
        for g in Grammeme::all() {
            let code = render_code(g);
            assert!(seen.insert(code), "duplicate code {code}");
            assert_eq!(parse_code(code).unwrap(), g);
        }
        assert_eq!(seen.len(), 3 + 4 + 3 + 3 + 6 + 2 + 2 + 3);
    }

    #[test]
    fn grid_sizes() {
        for pos in Pos::ALL {
            let grid = benchmark_grid(pos);
            assert_eq!(grid.len(), pos.grid_len(), "{pos}");
            let unique: HashSet<_> = grid.iter().collect();
            assert_eq!(unique.len(), grid.len(), "{pos} has duplicate cells");
        }
        assert_eq!(benchmark_grid(Pos::Noun).len(), 12);
        assert_eq!(benchmark_grid(Pos::Adjective).len(), 28);
        assert_eq!(benchmark_grid(Pos::Gerund).len(), 2);
    }

    #[test]
    fn grid_applicability() {
        for spec in benchmark_grid(Pos::Noun) {
            assert!(spec.number.is_some() && spec.case.is_some());
            assert!(spec.person.is_none() && spec.gender.is_none() && spec.tense.is_none());
            assert!(spec.animacy.is_none());
        }
        for spec in benchmark_grid(Pos::Adjective) {
            assert!(spec.number.is_some() && spec.gender.is_some());
            assert!(spec.case.is_some() && spec.animacy.is_some());
            assert!(spec.person.is_none() && spec.tense.is_none());
        }
        for spec in benchmark_grid(Pos::Verb) {
            assert!(spec.tense.is_some() && spec.person.is_some());
            assert!(spec.number.is_some() && spec.gender.is_some());
            assert!(spec.case.is_none());
        }
    }

    #[test]
    fn grid_order_is_stable() {
        let noun: Vec<String> = benchmark_grid(Pos::Noun).iter().map(|s| s.code_string()).collect();
        assert_eq!(noun[0], "n1;ci");
        assert_eq!(noun[7], "nx;cr");
        let verb = benchmark_grid(Pos::Verb);
        assert_eq!(verb[0].code_string(), "p1;n1;gm;tc");
        assert_eq!(verb[6].code_string(), "p1;n1;gm;tp");
        assert_eq!(verb[23].code_string(), "p3;nx;gm;tf");
        let adj = benchmark_grid(Pos::Adjective);
        assert_eq!(adj[3].code_string(), "n1;gm;cv;an");
        assert_eq!(adj[4].code_string(), "n1;gm;cv;a");
    }

    #[test]
    fn pos_names_round_trip() {
        for pos in Pos::ALL {
            assert_eq!(pos.name().parse::<Pos>().unwrap(), pos);
        }
        assert!("pronoun".parse::<Pos>().is_err());
    }
}
