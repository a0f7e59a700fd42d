//! Semigroup presentations `⟨Σ | R⟩`, their text format, and the `a`/`b`
//! absorbing-letter transform.
//!
//! File format (UTF-8, line oriented):
//!
//! ```text
//! # the Dunce hat
//! letters: x
//! rule: x x = x
//! ```
//!
//! Exactly one `letters:` line, which must precede every `rule:` line. Rule
//! sides are whitespace-separated symbol tokens and may not be empty.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Characters that may not appear inside a symbol name.
pub const RESERVED: &[char] = &['=', '#', '%', ':'];

/// Index of a symbol in a presentation's alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word over the alphabet; the empty word is the monoid identity.
pub type Word = Vec<Letter>;

/// Orientation of a relation application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orient {
    /// lhs → rhs
    F,
    /// rhs → lhs
    B,
}

impl Orient {
    pub fn flip(self) -> Self {
        match self {
            Orient::F => Orient::B,
            Orient::B => Orient::F,
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Orient::F => 0,
            Orient::B => 1,
        }
    }
}

impl fmt::Display for Orient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orient::F => "F",
            Orient::B => "B",
        })
    }
}

impl FromStr for Orient {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "F" => Ok(Orient::F),
            "B" => Ok(Orient::B),
            other => Err(format!("expected F or B, found `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol(pub String);

impl Symbol {
    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Self { lhs, rhs }
    }

    /// The side consumed when applied with orientation `o`.
    pub fn input(&self, o: Orient) -> &[Letter] {
        match o {
            Orient::F => &self.lhs,
            Orient::B => &self.rhs,
        }
    }

    /// The side produced when applied with orientation `o`.
    pub fn output(&self, o: Orient) -> &[Letter] {
        match o {
            Orient::F => &self.rhs,
            Orient::B => &self.lhs,
        }
    }
}

/// A problem found by [`Presentation::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownSymbol { relation: usize, letter: Letter },
    DuplicateSymbol(String),
    EmptySide(usize),
    InvalidSymbolName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Presentation {
    pub alphabet: Vec<Symbol>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(alphabet: Vec<Symbol>, relations: Vec<Relation>) -> Result<Self> {
        let p = Self { alphabet, relations };
        match p.validate().into_iter().next() {
            None => Ok(p),
            Some(v) => Err(p.violation_error(v)),
        }
    }

    /// Builds a presentation from string slices, e.g.
    /// `from_strs(&["x"], &[(&["x", "x"], &["x"])])`.
    pub fn from_strs(letters: &[&str], rules: &[(&[&str], &[&str])]) -> Result<Self> {
        let alphabet = letters.iter().map(|s| Symbol(s.to_string())).collect();
        let mut p = Self { alphabet, relations: Vec::new() };
        for (i, (l, r)) in rules.iter().enumerate() {
            let lhs = p.lookup_all(l)?;
            let rhs = p.lookup_all(r)?;
            if lhs.is_empty() || rhs.is_empty() {
                return Err(Error::EmptySide(i));
            }
            p.relations.push(Relation::new(lhs, rhs));
        }
        Self::new(p.alphabet, p.relations)
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.alphabet.len() as u32).map(Letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.alphabet[l.index()].0
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.alphabet.iter().position(|s| s.0 == name).map(|i| Letter(i as u32))
    }

    fn lookup_all(&self, names: &[&str]) -> Result<Word> {
        names.iter().map(|n| self.lookup(n).ok_or_else(|| Error::UnknownSymbol(n.to_string()))).collect()
    }

    pub fn relation(&self, index: usize) -> Option<&Relation> {
        self.relations.get(index)
    }

    /// All invariant violations; empty iff the presentation is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for s in &self.alphabet {
            if !Symbol::is_valid_name(&s.0) {
                out.push(Violation::InvalidSymbolName(s.0.clone()));
            }
            if !seen.insert(&s.0) {
                out.push(Violation::DuplicateSymbol(s.0.clone()));
            }
        }
        for (i, r) in self.relations.iter().enumerate() {
            if r.lhs.is_empty() || r.rhs.is_empty() {
                out.push(Violation::EmptySide(i));
            }
            for &l in r.lhs.iter().chain(&r.rhs) {
                if l.index() >= self.alphabet.len() {
                    out.push(Violation::UnknownSymbol { relation: i, letter: l });
                }
            }
        }
        out
    }

    fn violation_error(&self, v: Violation) -> Error {
        match v {
            Violation::UnknownSymbol { letter, .. } => Error::UnknownSymbol(format!("#{}", letter.0)),
            Violation::DuplicateSymbol(s) => Error::DuplicateSymbol(s),
            Violation::EmptySide(i) => Error::EmptySide(i),
            Violation::InvalidSymbolName(s) => Error::InvalidSymbolName(s),
        }
    }

    /// Parses a word given as whitespace-separated symbols. `%` is the empty
    /// word. When every symbol is a single character, a token such as `xxx`
    /// is also accepted and split into characters.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "%" {
            return Ok(Word::new());
        }
        let single_chars = self.alphabet.iter().all(|s| s.0.chars().count() == 1);
        let mut word = Word::new();
        for tok in text.split_whitespace() {
            if let Some(l) = self.lookup(tok) {
                word.push(l);
                continue;
            }
            if !single_chars {
                return Err(Error::UnknownSymbol(tok.to_string()));
            }
            for c in tok.chars() {
                let mut buf = [0u8; 4];
                let l = self.lookup(c.encode_utf8(&mut buf)).ok_or_else(|| Error::UnknownSymbol(tok.to_string()))?;
                word.push(l);
            }
        }
        Ok(word)
    }

    /// Space-separated symbol names, as used in the file formats.
    pub fn format_word(&self, w: &[Letter]) -> String {
        w.iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(" ")
    }

    /// Human-oriented rendering: `%` for the empty word, symbols run
    /// together when they are all single characters.
    pub fn show_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "%".to_string();
        }
        if self.alphabet.iter().all(|s| s.0.chars().count() == 1) {
            w.iter().map(|&l| self.name(l)).collect()
        } else {
            self.format_word(w)
        }
    }

    /// Hex SHA-256 of the serialized presentation.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn fresh_name(&self, base: &str, also_taken: &[&str]) -> String {
        let taken = |n: &str| self.lookup(n).is_some() || also_taken.contains(&n);
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|n| !taken(n)).expect("unbounded suffix search")
    }

    /// Adds two fresh letters `a`, `b` with relations `a·x = a` and
    /// `x·b = b` for every original letter `x`. The resulting presentation
    /// has an idempotent dividing `a·b` iff the original semigroup has an
    /// idempotent at all.
    pub fn q_transform(&self) -> Presentation {
        let a_name = self.fresh_name("a", &[]);
        let b_name = self.fresh_name("b", &[&a_name]);
        let n = self.alphabet.len() as u32;
        let (a, b) = (Letter(n), Letter(n + 1));
        let mut alphabet = self.alphabet.clone();
        alphabet.push(Symbol(a_name));
        alphabet.push(Symbol(b_name));
        let mut relations = self.relations.clone();
        relations.extend(self.letters().map(|x| Relation::new(vec![a, x], vec![a])));
        relations.extend(self.letters().map(|x| Relation::new(vec![x, b], vec![b])));
        Presentation { alphabet, relations }
    }

    /// Pretty one-line form, e.g. `⟨x | x x = x⟩`.
    pub fn summary(&self) -> String {
        let letters = self.alphabet.iter().map(|s| s.0.as_str()).collect::<Vec<_>>().join(", ");
        let rules = self
            .relations
            .iter()
            .map(|r| format!("{} = {}", self.show_word(&r.lhs), self.show_word(&r.rhs)))
            .collect::<Vec<_>>()
            .join(", ");
        format!("⟨{letters} | {rules}⟩")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letters:")?;
        for s in &self.alphabet {
            write!(f, " {}", s.0)?;
        }
        writeln!(f)?;
        for r in &self.relations {
            writeln!(f, "rule: {} = {}", self.format_word(&r.lhs), self.format_word(&r.rhs))?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_presentation(text)
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p: Option<Presentation> = None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: &str| Error::Parse { line: line_no, message: message.to_string() };
        let (key, rest) = line.split_once(':').ok_or_else(|| parse_err("expected `key: value`"))?;
        match key.trim() {
            "letters" => {
                if p.is_some() {
                    return Err(parse_err("more than one `letters:` line"));
                }
                let mut alphabet: Vec<Symbol> = Vec::new();
                for tok in rest.split_whitespace() {
                    if !Symbol::is_valid_name(tok) {
                        return Err(Error::InvalidSymbolName(tok.to_string()));
                    }
                    if alphabet.iter().any(|s| s.0 == tok) {
                        return Err(Error::DuplicateSymbol(tok.to_string()));
                    }
                    alphabet.push(Symbol(tok.to_string()));
                }
                p = Some(Presentation { alphabet, relations: Vec::new() });
            }
            "rule" => {
                let pres = p.as_mut().ok_or_else(|| parse_err("`rule:` before `letters:`"))?;
                let (l, r) = rest.split_once('=').ok_or_else(|| parse_err("rule without `=`"))?;
                if r.contains('=') {
                    return Err(parse_err("rule with more than one `=`"));
                }
                let index = pres.relations.len();
                let side = |s: &str| -> Result<Word> {
                    let toks: Vec<&str> = s.split_whitespace().collect();
                    if toks.is_empty() {
                        return Err(Error::EmptySide(index));
                    }
                    pres.lookup_all(&toks)
                };
                let lhs = side(l)?;
                let rhs = side(r)?;
                pres.relations.push(Relation::new(lhs, rhs));
            }
            other => return Err(parse_err(&format!("unknown key `{other}`"))),
        }
    }
    p.ok_or(Error::Parse { line: 0, message: "missing `letters:` line".to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dunce() -> Presentation {
        "letters: x\nrule: x x = x".parse().unwrap()
    }

    #[test]
    fn parses_dunce_hat() {
        let p = dunce();
        assert_eq!(p.alphabet, vec![Symbol("x".into())]);
        assert_eq!(p.relations, vec![Relation::new(vec![Letter(0); 2], vec![Letter(0)])]);
    }

    #[test]
    fn parses_free_semigroup() {
        let p: Presentation = "letters: a b\n".parse().unwrap();
        assert_eq!(p.rank(), 2);
        assert!(p.relations.is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!("letters: x\nrule: = x".parse::<Presentation>(), Err(Error::EmptySide(0)));
        assert_eq!("letters: x\nrule: x = ".parse::<Presentation>(), Err(Error::EmptySide(0)));
        assert_eq!("letters: x\nrule: x = y".parse::<Presentation>(), Err(Error::UnknownSymbol("y".into())));
        assert_eq!("letters: x x".parse::<Presentation>(), Err(Error::DuplicateSymbol("x".into())));
        assert!(matches!("rule: x = x".parse::<Presentation>(), Err(Error::Parse { .. })));
        assert!(matches!("letters: x\nletters: y".parse::<Presentation>(), Err(Error::Parse { .. })));
        assert!(matches!("".parse::<Presentation>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_multichar_symbols() {
        let text = "# header\nletters: foo bar # trailing\n\nrule: foo bar = bar\n";
        let p: Presentation = text.parse().unwrap();
        assert_eq!(p.name(Letter(0)), "foo");
        assert_eq!(p.relations[0].lhs, vec![Letter(0), Letter(1)]);
        assert_eq!(p.to_string(), "letters: foo bar\nrule: foo bar = bar\n");
    }

    #[test]
    fn q_transform_examples() {
        let q = dunce().q_transform();
        assert_eq!(q.to_string(), "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b\n");

        let c: Presentation = "letters: c".parse().unwrap();
        assert_eq!(c.q_transform().to_string(), "letters: c a b\nrule: a c = a\nrule: c b = b\n");

        let xy: Presentation = "letters: x y\nrule: x y = y".parse().unwrap();
        assert_eq!(
            xy.q_transform().to_string(),
            "letters: x y a b\nrule: x y = y\nrule: a x = a\nrule: a y = a\nrule: x b = b\nrule: y b = b\n"
        );
    }

    #[test]
    fn q_transform_picks_fresh_names() {
        let p: Presentation = "letters: a b a1".parse().unwrap();
        let q = p.q_transform();
        assert_eq!(q.name(Letter(3)), "a2");
        assert_eq!(q.name(Letter(4)), "b1");
        assert!(q.validate().is_empty());
    }

    #[test]
    fn validate_reports_violations() {
        assert!(dunce().validate().is_empty());
        let bad = Presentation {
            alphabet: vec![Symbol("x".into()), Symbol("x".into())],
            relations: vec![Relation::new(vec![Letter(5)], vec![Letter(0)]), Relation::new(vec![], vec![Letter(0)])],
        };
        let v = bad.validate();
        assert!(v.contains(&Violation::DuplicateSymbol("x".into())));
        assert!(v.contains(&Violation::UnknownSymbol { relation: 0, letter: Letter(5) }));
        assert!(v.contains(&Violation::EmptySide(1)));
    }

    #[test]
    fn words() {
        let p = dunce();
        assert_eq!(p.parse_word("x x x").unwrap(), vec![Letter(0); 3]);
        assert_eq!(p.parse_word("xxx").unwrap(), vec![Letter(0); 3]);
        assert_eq!(p.parse_word("%").unwrap(), Word::new());
        assert!(p.parse_word("y").is_err());
        assert_eq!(p.show_word(&[]), "%");
        assert_eq!(p.show_word(&[Letter(0); 2]), "xx");

        let multi: Presentation = "letters: foo bar".parse().unwrap();
        assert!(multi.parse_word("foobar").is_err());
        assert_eq!(multi.show_word(&[Letter(0), Letter(1)]), "foo bar");
    }

    #[test]
    fn fingerprint_is_stable() {
        assert_eq!(dunce().fingerprint(), dunce().fingerprint());
        assert_ne!(dunce().fingerprint(), dunce().q_transform().fingerprint());
        assert_eq!(dunce().fingerprint().len(), 64);
    }
}
