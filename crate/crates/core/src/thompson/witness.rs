//! Text format for embedding witnesses:
//!
//! ```text
//! presentation-hash: <sha256 of the canonical presentation text>
//! w: a b
//! w1: a
//! e: x
//! w2: b
//! idem-start: x x
//! idem-step: F 0 0
//! factor-start: a b
//! factor-step: B 0 1
//! begin y0
//! top: a b
//! atom: B 0 1
//! end y0
//! begin y1
//! ...
//! end y1
//! ```

use super::{EmbeddingWitness, IdempotentWitness, PairReport};
use crate::diagram::{parse_atom_fields, Diagram};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::rewrite::Derivation;

impl EmbeddingWitness {
    pub fn to_text(&self, p: &Presentation) -> String {
        let iw = &self.witness;
        let mut s = format!("presentation-hash: {}\n", p.fingerprint());
        for (key, word) in [("w", &self.w), ("w1", &iw.w1), ("e", &iw.e), ("w2", &iw.w2)] {
            s.push_str(&format!("{key}: {}\n", p.format_word(word)).replace(" \n", "\n"));
        }
        s.push_str(&iw.cert_idem.to_text(p, "idem"));
        s.push_str(&iw.cert_factor.to_text(p, "factor"));
        for (name, y) in [("y0", &self.y0), ("y1", &self.y1)] {
            s.push_str(&format!("begin {name}\n{}end {name}\n", y.to_text(p)));
        }
        s
    }
}

fn parse_word_field(p: &Presentation, text: &str) -> Result<Word> {
    text.split_whitespace()
        .filter(|t| *t != "%")
        .map(|t| p.lookup(t).ok_or_else(|| Error::UnknownSymbol(t.to_string())))
        .collect()
}

/// Parses a witness file written by [`EmbeddingWitness::to_text`]. The
/// stored pair report is recomputed from the parsed diagrams; callers that
/// want the full check should use [`super::verify_witness`].
pub fn parse_witness(p: &Presentation, text: &str) -> Result<EmbeddingWitness> {
    // symbols only make sense once the presentation is known to match
    let hash = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("presentation-hash:"))
        .ok_or_else(|| Error::BadWitness("missing presentation-hash".into()))?;
    if hash.trim() != p.fingerprint() {
        return Err(Error::BadWitness("presentation hash does not match".into()));
    }
    let mut words: [Option<Word>; 4] = Default::default();
    let mut idem = Derivation::default();
    let mut factor = Derivation::default();
    let mut seen_starts = [false; 2];
    let mut blocks: [Option<Diagram>; 2] = [None, None];
    let mut open: Option<(usize, usize, String)> = None;

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some((slot, start, body)) = open.as_mut() {
            if raw.trim() == format!("end y{slot}") {
                let d = Diagram::parse(p, body).map_err(|e| match e {
                    Error::Parse { line, message } => Error::Parse { line: line + *start, message },
                    other => other,
                })?;
                blocks[*slot] = Some(d);
                open = None;
            } else {
                body.push_str(raw);
                body.push('\n');
            }
            continue;
        }
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix("begin ") {
            let slot = match name.trim() {
                "y0" => 0,
                "y1" => 1,
                other => return Err(err(format!("unknown block `{other}`"))),
            };
            if blocks[slot].is_some() {
                return Err(err(format!("duplicate block y{slot}")));
            }
            open = Some((slot, line_no, String::new()));
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| err("expected `key: value`".into()))?;
        let key = key.trim();
        match key {
            "presentation-hash" => {}
            "w" | "w1" | "e" | "w2" => {
                let i = ["w", "w1", "e", "w2"].iter().position(|k| *k == key).unwrap();
                words[i] = Some(parse_word_field(p, rest)?);
            }
            "idem-start" | "factor-start" => {
                let i = usize::from(key == "factor-start");
                seen_starts[i] = true;
                let target = if i == 0 { &mut idem } else { &mut factor };
                target.start = parse_word_field(p, rest)?;
            }
            "idem-step" => idem.steps.push(parse_atom_fields(rest).map_err(err)?),
            "factor-step" => factor.steps.push(parse_atom_fields(rest).map_err(err)?),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    if let Some((slot, ..)) = open {
        return Err(Error::BadWitness(format!("unterminated block y{slot}")));
    }
    let [w, w1, e, w2] = words;
    let missing = |k: &str| Error::BadWitness(format!("missing `{k}:`"));
    let (w, w1, e, w2) =
        (w.ok_or(missing("w"))?, w1.ok_or(missing("w1"))?, e.ok_or(missing("e"))?, w2.ok_or(missing("w2"))?);
    if !seen_starts[0] {
        return Err(missing("idem-start"));
    }
    if !seen_starts[1] {
        return Err(missing("factor-start"));
    }
    let [y0, y1] = blocks;
    let y0 = y0.ok_or_else(|| Error::BadWitness("missing block y0".into()))?;
    let y1 = y1.ok_or_else(|| Error::BadWitness("missing block y1".into()))?;
    let report = super::verify_canonical_pair(p, &y0, &y1).unwrap_or(PairReport {
        rel1_ok: false,
        rel2_ok: false,
        noncommute: false,
        x_cells: Vec::new(),
        commutator_cells: 0,
    });
    Ok(EmbeddingWitness {
        w,
        witness: IdempotentWitness { e, w1, w2, cert_idem: idem, cert_factor: factor },
        y0,
        y1,
        report,
    })
}
