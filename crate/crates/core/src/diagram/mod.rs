//! Diagrams as sequences of cell applications ("atoms") read top to bottom.
//!
//! A diagram is stored as its top word plus the ordered atoms that build it
//! cell by cell. Two atom sequences that differ by interchanging independent
//! cells describe the same planar diagram; see [`crate::canonical`].

mod planar;

use std::fmt;

pub use planar::{Cell, Edge, EdgeId, PlanarGraph, VertexId};

use crate::error::{Error, Result};
use crate::presentation::{Letter, Orient, Presentation, Word};

/// One cell: relation `rel` applied with orientation `orient` to the running
/// word at prefix length `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub offset: usize,
    pub rel: usize,
    pub orient: Orient,
}

impl Atom {
    pub const fn new(orient: Orient, offset: usize, rel: usize) -> Self {
        Self { offset, rel, orient }
    }

    pub const fn f(offset: usize, rel: usize) -> Self {
        Self::new(Orient::F, offset, rel)
    }

    pub const fn b(offset: usize, rel: usize) -> Self {
        Self::new(Orient::B, offset, rel)
    }

    /// The mirror-image cell at the same position.
    pub fn mirror(self) -> Self {
        Self { orient: self.orient.flip(), ..self }
    }

    pub fn shifted(self, by: usize) -> Self {
        Self { offset: self.offset + by, ..self }
    }

    /// Normal-form tie-break key.
    pub fn key(&self) -> (usize, usize, u8) {
        (self.offset, self.rel, self.orient.code())
    }

    pub fn input<'p>(&self, p: &'p Presentation) -> &'p [Letter] {
        p.relations[self.rel].input(self.orient)
    }

    pub fn output<'p>(&self, p: &'p Presentation) -> &'p [Letter] {
        p.relations[self.rel].output(self.orient)
    }

    /// Width change `|output| - |input|`.
    pub fn delta(&self, p: &Presentation) -> isize {
        self.output(p).len() as isize - self.input(p).len() as isize
    }

    pub fn applies_to(&self, p: &Presentation, w: &[Letter]) -> bool {
        match p.relation(self.rel) {
            Some(r) => {
                let input = r.input(self.orient);
                w.len() >= self.offset + input.len() && &w[self.offset..self.offset + input.len()] == input
            }
            None => false,
        }
    }

    pub fn apply(&self, p: &Presentation, w: &[Letter]) -> Option<Word> {
        if !self.applies_to(p, w) {
            return None;
        }
        let input = self.input(p).len();
        let mut out = Vec::with_capacity(w.len() + self.output(p).len());
        out.extend_from_slice(&w[..self.offset]);
        out.extend_from_slice(self.output(p));
        out.extend_from_slice(&w[self.offset + input..]);
        Some(out)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.orient, self.offset)?;
        if self.rel != 0 {
            write!(f, ":r{}", self.rel)?;
        }
        Ok(())
    }
}

/// A `(top, bottom)`-diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Diagram {
    pub top: Word,
    pub atoms: Vec<Atom>,
}

impl Diagram {
    pub fn new(top: Word, atoms: Vec<Atom>) -> Self {
        Self { top, atoms }
    }

    /// The trivial `(w, w)`-diagram.
    pub fn trivial(w: Word) -> Self {
        Self { top: w, atoms: Vec::new() }
    }

    /// Builds and validates in one step.
    pub fn checked(p: &Presentation, top: Word, atoms: Vec<Atom>) -> Result<Self> {
        let d = Self { top, atoms };
        d.bottom(p)?;
        Ok(d)
    }

    pub fn cells(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Every intermediate word, `top` first and bottom last.
    pub fn words(&self, p: &Presentation) -> Result<Vec<Word>> {
        let mut out = Vec::with_capacity(self.atoms.len() + 1);
        out.push(self.top.clone());
        for (index, a) in self.atoms.iter().enumerate() {
            let next = a.apply(p, out.last().unwrap()).ok_or(Error::InvalidDiagram { index })?;
            out.push(next);
        }
        Ok(out)
    }

    /// Replays the atoms from `top`.
    pub fn bottom(&self, p: &Presentation) -> Result<Word> {
        let mut w = self.top.clone();
        for (index, a) in self.atoms.iter().enumerate() {
            w = a.apply(p, &w).ok_or(Error::InvalidDiagram { index })?;
        }
        Ok(w)
    }

    pub fn is_spherical(&self, p: &Presentation) -> Result<bool> {
        Ok(self.bottom(p)? == self.top)
    }

    /// Vertical gluing: `self` on top of `other`, without reduction.
    pub fn compose(&self, p: &Presentation, other: &Diagram) -> Result<Diagram> {
        if self.bottom(p)? != other.top {
            return Err(Error::SeamMismatch);
        }
        other.bottom(p)?;
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        Ok(Diagram { top: self.top.clone(), atoms })
    }

    /// Horizontal gluing: `self` to the left of `other`. The right summand's
    /// cells are applied after the left summand's, shifted past its bottom.
    pub fn sum(&self, p: &Presentation, other: &Diagram) -> Result<Diagram> {
        let shift = self.bottom(p)?.len();
        other.bottom(p)?;
        let mut top = self.top.clone();
        top.extend_from_slice(&other.top);
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().map(|a| a.shifted(shift)));
        Ok(Diagram { top, atoms })
    }

    /// Mirror image: a `(bottom, top)`-diagram.
    pub fn inverse(&self, p: &Presentation) -> Result<Diagram> {
        let top = self.bottom(p)?;
        let atoms = self.atoms.iter().rev().map(|a| a.mirror()).collect();
        Ok(Diagram { top, atoms })
    }

    pub fn realize(&self, p: &Presentation) -> Result<PlanarGraph> {
        PlanarGraph::realize(p, self)
    }

    /// Serializes in the diagram file format.
    pub fn to_text(&self, p: &Presentation) -> String {
        let mut s = String::from("top:");
        for &l in &self.top {
            s.push(' ');
            s.push_str(p.name(l));
        }
        s.push('\n');
        for a in &self.atoms {
            s.push_str(&format!("atom: {} {} {}\n", a.orient, a.offset, a.rel));
        }
        s
    }

    /// Parses the diagram file format (`top:` line, then `atom:` lines) and
    /// checks that every atom applies.
    pub fn parse(p: &Presentation, text: &str) -> Result<Diagram> {
        let mut top: Option<Word> = None;
        let mut atoms = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let (key, rest) = line.split_once(':').ok_or_else(|| err("expected `key: value`".into()))?;
            match key.trim() {
                "top" => {
                    if top.is_some() {
                        return Err(err("more than one `top:` line".into()));
                    }
                    let word = rest
                        .split_whitespace()
                        .map(|t| p.lookup(t).ok_or_else(|| Error::UnknownSymbol(t.to_string())))
                        .collect::<Result<Word>>()?;
                    top = Some(word);
                }
                "atom" => {
                    if top.is_none() {
                        return Err(err("`atom:` before `top:`".into()));
                    }
                    atoms.push(parse_atom_fields(rest).map_err(err)?);
                }
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let top = top.ok_or(Error::Parse { line: 0, message: "missing `top:` line".into() })?;
        Diagram::checked(p, top, atoms)
    }

    pub fn display(&self, p: &Presentation) -> String {
        let atoms = self.atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
        format!("[{atoms}] over {}", p.show_word(&self.top))
    }
}

/// Parses `<F|B> <offset> <relIndex>`.
pub fn parse_atom_fields(text: &str) -> std::result::Result<Atom, String> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(format!("expected `<F|B> <offset> <rel>`, found `{}`", text.trim()));
    }
    let orient = fields[0].parse()?;
    let offset = fields[1].parse().map_err(|e| format!("bad offset: {e}"))?;
    let rel = fields[2].parse().map_err(|e| format!("bad relation index: {e}"))?;
    Ok(Atom { offset, rel, orient })
}
