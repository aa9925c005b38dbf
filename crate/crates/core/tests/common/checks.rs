//! Invariant checks shared by the property suites and the acceptance run.
//! Each returns a description of the first violation.

use flexia::numeral::{agreement_class, MAX_NUMBER};
use flexia::wire::handle_bytes;
use flexia::{
    normalize, parse_code, render_code, Animacy, Case, Degree, Engine, Gender, Grammeme, NumberCat,
    ParticipleKind, Person, Pos, Tables, Tense,
};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn is_reflexive(verb: &str) -> bool {
    verb.ends_with("ся") || verb.ends_with("сь")
}

// grammeme

pub fn code_round_trip(g: Grammeme) -> Check {
    let code = render_code(g);
    ensure!(parse_code(code).ok() == Some(g), "{code} does not parse back to {g:?}");
    Ok(())
}

// normalize

pub fn normalize_idempotent(raw: &str) -> Check {
    if let Ok(once) = normalize(raw) {
        let twice = normalize(once.as_str()).map_err(|e| format!("{raw:?}: {e}"))?;
        ensure!(twice == once, "{raw:?}: {} then {}", once.as_str(), twice.as_str());
    }
    Ok(())
}

pub fn normalize_clean(raw: &str) -> Check {
    if let Ok(word) = normalize(raw) {
        let s = word.as_str();
        ensure!(!s.contains(['ё', 'Ё']), "{raw:?} -> {s} keeps ё");
        ensure!(!s.chars().any(char::is_uppercase), "{raw:?} -> {s} keeps uppercase");
        ensure!(s == s.trim(), "{raw:?} -> {s:?} keeps whitespace");
    }
    Ok(())
}

// noun

/// Nominative singular equals the normalized lemma. Suppletive rows of the
/// paradigm table are exempt.
pub fn nominative_identity(e: &Engine, lemma: &str) -> Check {
    let Ok(word) = normalize(lemma) else { return Ok(()) };
    if e.tables().get("noun_paradigms").get(word.as_str()).is_some() {
        return Ok(());
    }
    if let Ok(form) = e.inflect_noun(lemma, NumberCat::N1, Case::Nom) {
        ensure!(form == word, "{lemma} -> {}", form.as_str());
    }
    Ok(())
}

/// All twelve forms of a noun the engine treats as indeclinable are the lemma.
pub fn indeclinable_constant(e: &Engine, lemma: &str) -> Check {
    let Ok(word) = normalize(lemma) else { return Ok(()) };
    if e.classify_noun(word.as_str()).kind != flexia::DeclensionKind::Indeclinable {
        return Ok(());
    }
    let p = e.paradigm(Pos::Noun, lemma).map_err(|err| format!("{lemma}: {err}"))?;
    ensure!(p.len() == 12, "{lemma}: {} cells", p.len());
    for c in &p.cells {
        ensure!(c.form.as_deref() == Ok(word.as_str()), "{lemma}: {} -> {:?}", c.spec.code_string(), c.form);
    }
    Ok(())
}

// adjective

/// Masculine and plural animate accusatives equal the genitive, inanimate
/// ones the nominative; feminine and neuter ignore animacy.
pub fn accusative_identities(e: &Engine, lemma: &str) -> Check {
    if e.adjective_forms(lemma).is_err() {
        return Ok(());
    }
    let f = |n, g, c, a| e.inflect_adjective(lemma, n, g, c, a).map(|w| w.into_string()).map_err(|e| e.to_string());
    use Animacy::{Animate as An, Inanimate as In};
    use NumberCat::{N1, NX};
    let pairs = [
        ("masc acc anim = gen", (N1, Gender::M, Case::Acc, An), (N1, Gender::M, Case::Gen, In)),
        ("masc acc inan = nom", (N1, Gender::M, Case::Acc, In), (N1, Gender::M, Case::Nom, In)),
        ("plur acc anim = gen", (NX, Gender::M, Case::Acc, An), (NX, Gender::M, Case::Gen, In)),
        ("plur acc inan = nom", (NX, Gender::M, Case::Acc, In), (NX, Gender::M, Case::Nom, In)),
        ("fem acc invariant", (N1, Gender::F, Case::Acc, An), (N1, Gender::F, Case::Acc, In)),
        ("neut acc invariant", (N1, Gender::N, Case::Acc, An), (N1, Gender::N, Case::Acc, In)),
    ];
    for (name, a, b) in pairs {
        let (x, y) = (f(a.0, a.1, a.2, a.3)?, f(b.0, b.1, b.2, b.3)?);
        ensure!(x == y, "{lemma}: {name}: {x} vs {y}");
    }
    Ok(())
}

/// The identities on the participles of a verb.
pub fn participle_accusative_identities(e: &Engine, verb: &str) -> Check {
    for kind in [ParticipleKind::PresentActive, ParticipleKind::PastActive, ParticipleKind::PastPassive] {
        if let Ok(p) = e.participle_lemma(verb, kind) {
            accusative_identities(e, p.as_str())?;
        }
    }
    Ok(())
}

// verb

/// Singular past forms do not depend on person, plural ones on person or gender.
pub fn past_irrelevance(e: &Engine, verb: &str) -> Check {
    let past = |p, n, g| e.conjugate(verb, p, n, g, Tense::Past).map(|w| w.into_string()).ok();
    for &g in Gender::ALL {
        let first = past(Person::P1, NumberCat::N1, g);
        for &p in Person::ALL {
            ensure!(past(p, NumberCat::N1, g) == first, "{verb}: past {p:?} {g:?}");
        }
    }
    let first = past(Person::P1, NumberCat::NX, Gender::M);
    for &p in Person::ALL {
        for &g in Gender::ALL {
            ensure!(past(p, NumberCat::NX, g) == first, "{verb}: plural past {p:?} {g:?}");
        }
    }
    Ok(())
}

/// Every form of a reflexive verb ends in -ся/-сь.
pub fn reflexive_closure(e: &Engine, verb: &str) -> Check {
    if !is_reflexive(verb) {
        return Ok(());
    }
    let families = [
        Pos::Verb,
        Pos::Gerund,
        Pos::Imperative,
        Pos::PresentActiveParticiple,
        Pos::PastActiveParticiple,
        Pos::PastPassiveParticiple,
    ];
    for pos in families {
        let Ok(p) = e.paradigm(pos, verb) else { continue };
        for cell in &p.cells {
            if let Ok(form) = &cell.form {
                ensure!(is_reflexive(form), "{pos} {verb}: {} -> {form}", cell.spec.code_string());
            }
        }
    }
    Ok(())
}

// numeral

/// Depends on the value mod 100 only and is defined for every value.
pub fn agreement_class_periodic(value: u64) -> Check {
    let class = agreement_class(value);
    ensure!(matches!(class, NumberCat::N1 | NumberCat::N2 | NumberCat::N5), "{value} -> {class:?}");
    ensure!(class == agreement_class(value % 100), "{value} differs from {}", value % 100);
    ensure!(class == agreement_class(value + 100), "{value} differs from {}", value + 100);
    Ok(())
}

pub fn agreement_class_total() -> Check {
    (0..=u64::from(MAX_NUMBER)).try_for_each(agreement_class_periodic)
}

// exception precedence

const LETTERS: [char; 16] = ['а', 'б', 'в', 'г', 'д', 'е', 'ж', 'з', 'и', 'к', 'л', 'м', 'н', 'о', 'п', 'р'];

/// Artificial forms no rule produces.
pub fn sentinels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("ъъъ{}", LETTERS[i])).collect()
}

pub fn engine_with(table: &str, lemma: &str, values: Vec<String>) -> Engine {
    let mut tables = Tables::builtin();
    tables.get_mut(table).insert(lemma, values);
    Engine::with_tables(tables)
}

fn same(what: &str, got: Result<String, flexia::Error>, want: &str) -> Check {
    match got {
        Ok(g) if g == want => Ok(()),
        other => Err(format!("{what}: {other:?}, override {want}")),
    }
}

pub fn noun_override(lemma: &str) -> Check {
    let forms = sentinels(12);
    let e = engine_with("noun_paradigms", lemma, forms.clone());
    for (i, &case) in Case::ALL.iter().enumerate() {
        same(lemma, e.inflect_noun(lemma, NumberCat::N1, case).map(|w| w.into_string()), &forms[i])?;
        same(lemma, e.inflect_noun(lemma, NumberCat::NX, case).map(|w| w.into_string()), &forms[6 + i])?;
    }
    Ok(())
}

/// A full paradigm row outranks the indeclinable list, so such lemmas are
/// left out.
pub fn indeclinable_override(lemma: &str) -> Check {
    let e = engine_with("noun_indeclinable", lemma, Vec::new());
    if e.tables().get("noun_paradigms").get(lemma).is_some() {
        return Ok(());
    }
    let p = e.paradigm(Pos::Noun, lemma).map_err(|err| err.to_string())?;
    for c in p.cells {
        same(lemma, c.form, lemma)?;
    }
    Ok(())
}

pub fn gerund_override(verb: &str) -> Check {
    let s = sentinels(2);
    let e = engine_with("verb_gerund", verb, s.clone());
    same(verb, e.past_gerund(verb).map(|w| w.into_string()), &s[0])?;
    if e.get_perfectness(verb).is_ok_and(|a| a.has_present()) {
        same(verb, e.imperfective_gerund(verb).map(|w| w.into_string()), &s[1])?;
    }
    Ok(())
}

pub fn imperative_override(verb: &str) -> Check {
    if is_reflexive(verb) {
        return Ok(());
    }
    let s = sentinels(1);
    let e = engine_with("verb_imperative", verb, s.clone());
    same(verb, e.imperative(verb, NumberCat::N1).map(|w| w.into_string()), &s[0])?;
    same(verb, e.imperative(verb, NumberCat::NX).map(|w| w.into_string()), &format!("{}те", s[0]))
}

pub fn verb_paradigm_override(verb: &str) -> Check {
    if is_reflexive(verb) {
        return Ok(());
    }
    let mut row = sentinels(11);
    // The feminine past carries the stem.
    row[7] = "ъъъжа".to_string();
    let e = engine_with("verb_paradigms", verb, row.clone());
    let perfective = e.get_perfectness(verb).map_err(|err| err.to_string())?.is_perfective();
    let tense = if perfective { Tense::Future } else { Tense::Present };
    let cells = Person::ALL
        .iter()
        .map(|&p| (p, NumberCat::N1))
        .chain(Person::ALL.iter().map(|&p| (p, NumberCat::NX)));
    for (i, (p, n)) in cells.enumerate() {
        same(verb, e.conjugate(verb, p, n, Gender::M, tense).map(|w| w.into_string()), &row[i])?;
    }
    let past = |g| e.conjugate(verb, Person::P1, NumberCat::N1, g, Tense::Past).map(|w| w.into_string());
    same(verb, past(Gender::M), &row[6])?;
    same(verb, past(Gender::F), &row[7])?;
    same(verb, e.imperative(verb, NumberCat::N1).map(|w| w.into_string()), &row[10])
}

pub fn passive_override(verb: &str) -> Check {
    if is_reflexive(verb) {
        return Ok(());
    }
    let e = engine_with("verb_passive", verb, vec!["ъъъанный".to_string()]);
    same(verb, e.participle_lemma(verb, ParticipleKind::PastPassive).map(|w| w.into_string()), "ъъъанный")
}

pub fn comparative_override(adverb: &str) -> Check {
    let e = engine_with("adverb_comparative", adverb, sentinels(1));
    same(adverb, e.adverb_degree(adverb, Degree::Comparative).map(|w| w.into_string()), "ъъъа")
}

// determinism

/// Two engines built separately give byte-identical paradigms and wire replies.
pub fn deterministic(pos: Pos, lemma: &str) -> Check {
    let a = Engine::builtin().paradigm(pos, lemma).map(|p| p.to_tsv());
    let b = Engine::with_tables(Tables::builtin()).paradigm(pos, lemma).map(|p| p.to_tsv());
    ensure!(a == b, "{pos} {lemma}: paradigms differ");
    let query = format!("ru_noun;{lemma};cr;nx\0");
    let first = handle_bytes(&Engine::builtin(), query.as_bytes()).encode();
    ensure!(handle_bytes(&Engine::builtin(), query.as_bytes()).encode() == first, "{lemma}: replies differ");
    Ok(())
}
