//! Bounded word problem for the monoid presented by `⟨Σ | R⟩`.
//!
//! Equality claims come with a [`Derivation`] that replays one word into the
//! other. Inequality is only claimed decisively when the search space was
//! exhausted without hitting a cap, or when a confluent completed system
//! separates the two words.

mod completion;
mod idempotent;
mod search;

use std::fmt;

pub use completion::{kb_complete, CompletedSystem, KbBudget};
pub use idempotent::{idempotent_search, IdempotentSearch};
pub use search::{equal_mod_p, reachable_where, SearchOutcome};

use crate::diagram::{parse_atom_fields, Atom, Diagram};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Longest intermediate word the search may visit.
    pub max_word_len: usize,
    /// Total words the search may store (both directions together).
    pub node_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_word_len: 24, node_budget: 2_000_000 }
    }
}

/// A chain of single relation applications starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Derivation {
    pub start: Word,
    pub steps: Vec<Atom>,
}

impl Derivation {
    pub fn new(start: Word, steps: Vec<Atom>) -> Self {
        Self { start, steps }
    }

    pub fn replay(&self, p: &Presentation) -> Result<Word> {
        self.to_diagram().bottom(p)
    }

    fn to_diagram(&self) -> Diagram {
        Diagram { top: self.start.clone(), atoms: self.steps.clone() }
    }

    /// The same chain read backwards.
    pub fn reversed(&self, p: &Presentation) -> Result<Derivation> {
        let inv = self.to_diagram().inverse(p)?;
        Ok(Derivation { start: inv.top, steps: inv.atoms })
    }

    /// One line per step, `<F|B> <offset> <rel>`, prefixed by `key`.
    pub fn to_text(&self, p: &Presentation, key: &str) -> String {
        let mut s = format!("{key}-start: {}\n", p.format_word(&self.start));
        for a in &self.steps {
            s.push_str(&format!("{key}-step: {} {} {}\n", a.orient, a.offset, a.rel));
        }
        s
    }

    pub fn parse_step(text: &str) -> std::result::Result<Atom, String> {
        parse_atom_fields(text)
    }
}

/// A derivation is a diagram built one cell at a time.
pub fn derivation_to_diagram(p: &Presentation, d: &Derivation) -> Result<Diagram> {
    let diagram = d.to_diagram();
    diagram.bottom(p)?;
    Ok(diagram)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictKind {
    Equal(Derivation),
    /// Search finished without connecting the words. `decisive` means the
    /// words are provably different in the monoid.
    NoWitnessUnderCap {
        decisive: bool,
    },
    /// A cap was hit before the search finished.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub caps: Caps,
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self.kind, VerdictKind::Equal(_))
    }

    pub fn is_decisively_distinct(&self) -> bool {
        matches!(self.kind, VerdictKind::NoWitnessUnderCap { decisive: true })
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match &self.kind {
            VerdictKind::Equal(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            VerdictKind::Equal(d) => write!(f, "EQUAL ({} steps)", d.steps.len()),
            VerdictKind::NoWitnessUnderCap { decisive: true } => f.write_str("DISTINCT"),
            VerdictKind::NoWitnessUnderCap { decisive: false } => {
                write!(f, "NO WITNESS (max word length {}, budget {})", self.caps.max_word_len, self.caps.node_budget)
            }
            VerdictKind::Unknown => {
                write!(f, "UNKNOWN (max word length {}, budget {})", self.caps.max_word_len, self.caps.node_budget)
            }
        }
    }
}

/// Word-problem engine with an optional completed rewriting system used to
/// settle inequalities and to skip hopeless searches.
#[derive(Debug, Clone)]
pub struct WordProblem<'p> {
    pub presentation: &'p Presentation,
    pub caps: Caps,
    pub system: Option<CompletedSystem>,
}

impl<'p> WordProblem<'p> {
    pub fn new(p: &'p Presentation, caps: Caps) -> Self {
        Self { presentation: p, caps, system: None }
    }

    /// Attempts a completion; a timeout just leaves the engine search-only.
    pub fn with_completion(mut self, budget: KbBudget) -> Self {
        self.system = kb_complete(self.presentation, budget).ok().filter(|s| s.confluent);
        self
    }

    /// Normal-form verdict from the completed system, if one is available.
    pub fn normal_forms_agree(
        &self,
        u: &[crate::presentation::Letter],
        v: &[crate::presentation::Letter],
    ) -> Option<bool> {
        self.system.as_ref().map(|s| s.normal_form(u) == s.normal_form(v))
    }

    pub fn decide(&self, u: &Word, v: &Word) -> Verdict {
        let p = self.presentation;
        if self.normal_forms_agree(u, v) == Some(false) {
            return Verdict { kind: VerdictKind::NoWitnessUnderCap { decisive: true }, caps: self.caps };
        }
        let verdict = equal_mod_p(p, u, v, self.caps);
        match (&verdict.kind, self.normal_forms_agree(u, v)) {
            // the system says equal but the capped search found no chain
            (VerdictKind::NoWitnessUnderCap { .. }, Some(true)) => {
                Verdict { kind: VerdictKind::Unknown, caps: self.caps }
            }
            _ => verdict,
        }
    }
}

pub(crate) fn check_derivation_ends(p: &Presentation, d: &Derivation, from: &Word, to: &Word) -> Result<()> {
    if &d.start != from {
        return Err(Error::BadWitness(format!(
            "derivation starts at {} instead of {}",
            p.show_word(&d.start),
            p.show_word(from)
        )));
    }
    let end = d.replay(p)?;
    if &end != to {
        return Err(Error::BadWitness(format!(
            "derivation ends at {} instead of {}",
            p.show_word(&end),
            p.show_word(to)
        )));
    }
    Ok(())
}
