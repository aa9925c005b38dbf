//! Agreement and small text synthesis: adjective–noun matching, numeral
//! phrases, and arithmetic formulas read out in words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grammeme::{Animacy, Case, Gender, NumberCat};
use crate::numeral::{agreement_class, cardinal_text, MAX_NUMBER};
use crate::rulebase::{normalize, RussianWord};
use crate::Engine;

/// The grammemes a dependent word agrees with. Build one with
/// [`Engine::noun_spec`] and override any field the heuristics get wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounSpec {
    pub lemma: RussianWord,
    pub gender: Gender,
    pub animacy: Animacy,
    pub number: NumberCat,
    pub case: Case,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Plus,
    Minus,
    Times,
    Divide,
    Equals,
}

impl Operator {
    fn words(self) -> &'static str {
        match self {
            Operator::Plus => "плюс",
            Operator::Minus => "минус",
            Operator::Times => "умножить на",
            Operator::Divide => "разделить на",
            Operator::Equals => "равно",
        }
    }

    /// Case of the operand that follows.
    fn governs(self) -> Case {
        match self {
            Operator::Plus | Operator::Minus => Case::Nom,
            Operator::Times | Operator::Divide => Case::Acc,
            Operator::Equals => Case::Dat,
        }
    }

    fn symbol(self) -> char {
        match self {
            Operator::Plus => '+',
            Operator::Minus => '-',
            Operator::Times => '×',
            Operator::Divide => '÷',
            Operator::Equals => '=',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Integer(u32),
    Fraction(u32, u32),
}

/// A flat infix formula: operand (operator operand)*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub first: Operand,
    pub rest: Vec<(Operator, Operand)>,
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let operand = |o: &Operand| match o {
            Operand::Integer(n) => n.to_string(),
            Operand::Fraction(a, b) => format!("{a}/{b}"),
        };
        write!(f, "{}", operand(&self.first))?;
        for (op, o) in &self.rest {
            write!(f, "{}{}", op.symbol(), operand(o))?;
        }
        Ok(())
    }
}

fn parse_literal(digits: &str, whole: &str) -> Result<u32> {
    let value: u64 = digits.parse().map_err(|_| Error::MalformedFormula(whole.to_string()))?;
    if value > MAX_NUMBER as u64 {
        return Err(Error::OutOfRange(digits.to_string()));
    }
    Ok(value as u32)
}

impl FromStr for Formula {
    type Err = Error;

    /// Accepts `+`, `-`/`−`, `*`/`×`, `:`/`÷` and `=`; `a/b` is a fraction
    /// literal. Spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedFormula(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut operands = Vec::new();
        let mut operators = Vec::new();
        let mut current = String::new();
        for ch in text.chars() {
            let op = match ch {
                '+' => Some(Operator::Plus),
                '-' | '−' => Some(Operator::Minus),
                '*' | '×' | 'x' | 'х' => Some(Operator::Times),
                ':' | '÷' => Some(Operator::Divide),
                '=' => Some(Operator::Equals),
                '0'..='9' | '/' => None,
                _ => return Err(malformed()),
            };
            match op {
                Some(op) => {
                    operands.push(std::mem::take(&mut current));
                    operators.push(op);
                }
                None => current.push(ch),
            }
        }
        operands.push(current);
        let parsed = operands
            .iter()
            .map(|o| match o.split_once('/') {
                _ if o.is_empty() => Err(malformed()),
                Some((a, b)) => {
                    if a.is_empty() || b.is_empty() || b.contains('/') {
                        return Err(malformed());
                    }
                    let (a, b) = (parse_literal(a, s)?, parse_literal(b, s)?);
                    if a == 0 || b < 2 {
                        return Err(Error::OutOfRange(format!("{a}/{b}")));
                    }
                    Ok(Operand::Fraction(a, b))
                }
                None => Ok(Operand::Integer(parse_literal(o, s)?)),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut iter = parsed.into_iter();
        let first = iter.next().ok_or_else(malformed)?;
        Ok(Formula { first, rest: operators.into_iter().zip(iter).collect() })
    }
}

impl Engine {
    /// Gender and animacy of a noun read off its shape and the tables.
    pub fn noun_spec(&self, lemma: &str, number: NumberCat, case: Case) -> Result<NounSpec> {
        let lemma = normalize(lemma)?;
        Ok(NounSpec {
            gender: self.noun_gender(lemma.as_str()),
            animacy: self.noun_animacy(lemma.as_str()),
            lemma,
            number,
            case,
        })
    }

    /// The adjective form agreeing with `target`.
    pub fn match_adjective(&self, adjective: &str, target: &NounSpec) -> Result<RussianWord> {
        self.inflect_adjective(adjective, target.number, target.gender, target.case, target.animacy)
    }

    /// `value` + noun with numeral government (`три машины`, `пяти машинам`).
    pub fn number_phrase(&self, value: u32, noun: &str, case: Case) -> Result<String> {
        let noun = normalize(noun)?;
        let gender = self.noun_gender(noun.as_str());
        let number = cardinal_text(value, case, Some(gender))?;
        let form = self.inflect_noun(noun.as_str(), agreement_class(value as u64), case)?;
        Ok(format!("{number} {form}"))
    }

    fn operand_text(&self, operand: Operand, case: Case) -> Result<String> {
        match operand {
            Operand::Integer(n) => cardinal_text(n, case, Some(Gender::M)),
            Operand::Fraction(a, b) => self.fraction_words(a, b, case),
        }
    }

    /// Reads a formula out: operands in the nominative, the operand after
    /// `равно` in the dative, after `на` in the accusative.
    pub fn formula_to_text(&self, formula: &Formula) -> Result<String> {
        let mut words = vec![self.operand_text(formula.first, Case::Nom)?];
        for &(op, operand) in &formula.rest {
            words.push(op.words().to_string());
            words.push(self.operand_text(operand, op.governs())?);
        }
        Ok(words.join(" "))
    }

    /// Parses and reads out a formula in one step.
    pub fn formula_str_to_text(&self, formula: &str) -> Result<String> {
        self.formula_to_text(&formula.parse()?)
    }
}
