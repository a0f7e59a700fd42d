//! Thompson's group F as diagrams over the Dunce hat `⟨x | x² = x⟩`, the
//! canonical-generating-pair test, and the construction of a copy of F in
//! `D(P, w)` from an idempotent `e` with `w = w₁·e·w₂` in the monoid.
//!
//! A pair `(y₀, y₁)` that does not commute and satisfies
//! `x₂^{x₁} = x₃`, `x₃^{x₁} = x₄` (with `x_{i+1} = x_i^{x₀}` for `i ≥ 1`)
//! generates a copy of F, because every proper quotient of F is abelian.
//! [`verify_canonical_pair`] checks exactly that, so any pair it accepts is
//! a finite certificate regardless of how the pair was built.

mod witness;

pub use witness::parse_witness;

use crate::canonical::{equal_diagrams, reduce};
use crate::diagram::{Atom, Diagram};
use crate::error::{Error, Result};
use crate::groupops::conjugate;
use crate::presentation::{Letter, Orient, Presentation, Word};
use crate::rewrite::{
    derivation_to_diagram, idempotent_search, kb_complete, reachable_where, Caps, Derivation, KbBudget, SearchOutcome,
};

pub fn dunce_hat() -> Presentation {
    Presentation::from_strs(&["x"], &[(&["x", "x"], &["x"])]).expect("valid presentation")
}

const X: Letter = Letter(0);

/// The standard generators `x₀`, `x₁` of F as `(x, x)`-diagrams over the
/// Dunce hat.
pub fn f_generators() -> (Diagram, Diagram) {
    let y0 = Diagram::new(vec![X], vec![Atom::b(0, 0), Atom::b(0, 0), Atom::f(1, 0), Atom::f(0, 0)]);
    let y1 = Diagram::new(
        vec![X],
        vec![Atom::b(0, 0), Atom::b(1, 0), Atom::b(1, 0), Atom::f(2, 0), Atom::f(1, 0), Atom::f(0, 0)],
    );
    (y0, y1)
}

/// `x₀ … x_n`: `x₀ = y₀`, `x₁ = y₁`, `x_{i+1} = x_i^{x₀}` for `i ≥ 1`, all
/// reduced.
pub fn x_family(p: &Presentation, y0: &Diagram, y1: &Diagram, n: usize) -> Result<Vec<Diagram>> {
    let mut xs = vec![reduce(p, y0)?];
    if n >= 1 {
        xs.push(reduce(p, y1)?);
    }
    for i in 1..n {
        let next = conjugate(p, &xs[i], &xs[0])?;
        xs.push(next);
    }
    Ok(xs)
}

pub fn x_gen(p: &Presentation, i: usize, y0: &Diagram, y1: &Diagram) -> Result<Diagram> {
    Ok(x_family(p, y0, y1, i)?.pop().expect("nonempty family"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    /// `x₂^{x₁} = x₃`
    pub rel1_ok: bool,
    /// `x₃^{x₁} = x₄`
    pub rel2_ok: bool,
    /// `x₀ x₁ ≠ x₁ x₀`
    pub noncommute: bool,
    /// Cells of the reduced `x₀ … x₄`.
    pub x_cells: Vec<usize>,
    /// Cells of the reduced commutator `[x₀, x₁]`.
    pub commutator_cells: usize,
}

impl PairReport {
    pub fn pass(&self) -> bool {
        self.rel1_ok && self.rel2_ok && self.noncommute
    }
}

pub fn verify_canonical_pair(p: &Presentation, y0: &Diagram, y1: &Diagram) -> Result<PairReport> {
    if y0.top != y1.top {
        return Err(Error::BaseMismatch);
    }
    for y in [y0, y1] {
        if !y.is_spherical(p)? {
            return Err(Error::NotSpherical);
        }
    }
    let x = x_family(p, y0, y1, 4)?;
    let rel1_ok = equal_diagrams(p, &conjugate(p, &x[2], &x[1])?, &x[3])?;
    let rel2_ok = equal_diagrams(p, &conjugate(p, &x[3], &x[1])?, &x[4])?;
    let commutator = crate::groupops::commutator(p, &x[0], &x[1])?;
    Ok(PairReport {
        rel1_ok,
        rel2_ok,
        noncommute: !commutator.is_trivial(),
        x_cells: x.iter().map(Diagram::cells).collect(),
        commutator_cells: commutator.cells(),
    })
}

/// Checks that `cell` is an `(e·e, e)`-diagram and returns `e`.
fn idempotent_cell_base(p: &Presentation, cell: &Diagram) -> Result<Word> {
    let e = cell.bottom(p)?;
    if e.is_empty() {
        return Err(Error::NotIdempotentCell("empty bottom".into()));
    }
    let mut ee = e.clone();
    ee.extend_from_slice(&e);
    if cell.top != ee {
        return Err(Error::NotIdempotentCell(format!(
            "top {} is not the square of bottom {}",
            p.show_word(&cell.top),
            p.show_word(&e)
        )));
    }
    Ok(e)
}

/// Replaces every Dunce-hat cell of `d` by a copy of `cell` (an
/// `(e·e, e)`-diagram over `p`), or of its mirror image for expanding
/// cells, placed at the matching block of `e`s.
pub fn substitution_hom(p: &Presentation, cell: &Diagram, d: &Diagram) -> Result<Diagram> {
    let e = idempotent_cell_base(p, cell)?;
    let dunce = dunce_hat();
    d.bottom(&dunce)?;
    let mirror = cell.inverse(p)?;
    let top: Word = d.top.iter().flat_map(|_| e.iter().copied()).collect();
    let mut atoms = Vec::with_capacity(d.cells() * cell.cells());
    for a in &d.atoms {
        let block = match a.orient {
            Orient::F => &cell.atoms,
            Orient::B => &mirror.atoms,
        };
        atoms.extend(block.iter().map(|b| b.shifted(a.offset * e.len())));
    }
    Ok(Diagram { top, atoms })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentWitness {
    pub e: Word,
    pub w1: Word,
    pub w2: Word,
    /// `e·e ⇝ e`
    pub cert_idem: Derivation,
    /// `w ⇝ w₁·e·w₂`
    pub cert_factor: Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub w: Word,
    pub witness: IdempotentWitness,
    pub y0: Diagram,
    pub y1: Diagram,
    pub report: PairReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedOutcome {
    Found(Box<EmbeddingWitness>),
    /// No witness within the caps. `absent` is set only when the presented
    /// semigroup provably has no idempotent at all.
    NotFound {
        absent: bool,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Longest idempotent tried.
    pub max_idempotent_len: usize,
    pub caps: Caps,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        Self { max_idempotent_len: 4, caps: Caps { max_word_len: 24, node_budget: 200_000 } }
    }
}

/// Builds `(Y₀, Y₁)` from the two certificates: conjugate the substituted
/// F generators, padded by `w₁` and `w₂`, back to base `w`.
pub fn build_pair(p: &Presentation, witness: &IdempotentWitness) -> Result<(Diagram, Diagram)> {
    let gamma = derivation_to_diagram(p, &witness.cert_factor)?;
    let cell = derivation_to_diagram(p, &witness.cert_idem)?;
    let gamma_inv = gamma.inverse(p)?;
    let (f0, f1) = f_generators();
    let mut out = Vec::with_capacity(2);
    for f in [f0, f1] {
        let block = Diagram::trivial(witness.w1.clone())
            .sum(p, &substitution_hom(p, &cell, &f)?)?
            .sum(p, &Diagram::trivial(witness.w2.clone()))?;
        out.push(reduce(p, &gamma.compose(p, &block)?.compose(p, &gamma_inv)?)?);
    }
    let y1 = out.pop().unwrap();
    let y0 = out.pop().unwrap();
    Ok((y0, y1))
}

fn find_factor(w: &[Letter], e: &[Letter]) -> Option<usize> {
    (0..=w.len().checked_sub(e.len())?).find(|&i| &w[i..i + e.len()] == e)
}

/// Searches for `w = w₁·e·w₂`, `e² = e` and returns a verified copy of F in
/// `D(p, w)`.
pub fn embed_f(p: &Presentation, w: &Word, opts: EmbedOptions) -> Result<EmbedOutcome> {
    if w.is_empty() {
        return Ok(EmbedOutcome::NotFound { absent: false, reason: "empty base word".into() });
    }
    let idem = idempotent_search(p, opts.max_idempotent_len, opts.caps);
    if idem.found.is_empty() {
        // with no rules at all every word is its own class, so e·e ≠ e
        let absent = kb_complete(p, KbBudget::default()).is_ok_and(|s| s.confluent && s.rules.is_empty());
        let reason = if idem.decisive() {
            format!("no idempotent of length <= {}", opts.max_idempotent_len)
        } else {
            format!(
                "no idempotent of length <= {} found; {} candidates undecided",
                opts.max_idempotent_len,
                idem.undecided.len()
            )
        };
        return Ok(EmbedOutcome::NotFound { absent, reason });
    }
    let mut tried = Vec::new();
    for (e, cert_idem) in idem.found {
        let found = reachable_where(p, w, opts.caps, |word| find_factor(word, &e));
        let SearchOutcome::Found(pos, cert_factor) = found else {
            tried.push(p.show_word(&e));
            continue;
        };
        let end = cert_factor.replay(p)?;
        let witness =
            IdempotentWitness { w1: end[..pos].to_vec(), w2: end[pos + e.len()..].to_vec(), e, cert_idem, cert_factor };
        let (y0, y1) = build_pair(p, &witness)?;
        let report = verify_canonical_pair(p, &y0, &y1)?;
        if report.pass() {
            return Ok(EmbedOutcome::Found(Box::new(EmbeddingWitness { w: w.clone(), witness, y0, y1, report })));
        }
        tried.push(p.show_word(&witness.e));
    }
    Ok(EmbedOutcome::NotFound {
        absent: false,
        reason: format!("no verified factorization for idempotents [{}]", tried.join(", ")),
    })
}

/// Re-checks a witness from scratch: certificates replay, the stored pair
/// matches the one rebuilt from them, and the pair generates F canonically.
pub fn verify_witness(p: &Presentation, ew: &EmbeddingWitness) -> Result<PairReport> {
    let iw = &ew.witness;
    if iw.e.is_empty() {
        return Err(Error::BadWitness("empty idempotent".into()));
    }
    let mut ee = iw.e.clone();
    ee.extend_from_slice(&iw.e);
    crate::rewrite::check_derivation_ends(p, &iw.cert_idem, &ee, &iw.e)?;
    let mut factored = iw.w1.clone();
    factored.extend_from_slice(&iw.e);
    factored.extend_from_slice(&iw.w2);
    crate::rewrite::check_derivation_ends(p, &iw.cert_factor, &ew.w, &factored)?;
    for (name, y) in [("y0", &ew.y0), ("y1", &ew.y1)] {
        if y.top != ew.w || y.bottom(p)? != ew.w {
            return Err(Error::BadWitness(format!("{name} is not a (w, w)-diagram")));
        }
    }
    let (r0, r1) = build_pair(p, iw)?;
    if !equal_diagrams(p, &r0, &ew.y0)? || !equal_diagrams(p, &r1, &ew.y1)? {
        return Err(Error::BadWitness("stored pair differs from the one built from the certificates".into()));
    }
    let report = verify_canonical_pair(p, &ew.y0, &ew.y1)?;
    if !report.pass() {
        return Err(Error::BadWitness("pair does not generate F canonically".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Symbol;

    fn q() -> Presentation {
        "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b".parse().unwrap()
    }

    #[test]
    fn dunce_hat_shape() {
        let p = dunce_hat();
        assert_eq!(p.alphabet, vec![Symbol("x".into())]);
        assert_eq!(p.relations.len(), 1);
        assert!(p.validate().is_empty());
    }

    #[test]
    fn generators_replay() {
        let p = dunce_hat();
        let (y0, y1) = f_generators();
        assert_eq!(y0.bottom(&p).unwrap(), vec![X]);
        assert_eq!(y0.cells(), 4);
        assert_eq!(y1.bottom(&p).unwrap(), vec![X]);
        assert_eq!(y1.cells(), 6);
        assert!(crate::canonical::is_reduced(&p, &y0).unwrap());
        assert!(crate::canonical::is_reduced(&p, &y1).unwrap());
    }

    #[test]
    fn generators_are_canonical() {
        let p = dunce_hat();
        let (y0, y1) = f_generators();
        let r = verify_canonical_pair(&p, &y0, &y1).unwrap();
        assert!(r.rel1_ok && r.rel2_ok && r.noncommute, "{r:?}");
    }

    #[test]
    fn degenerate_pairs_fail() {
        let p = dunce_hat();
        let (y0, _) = f_generators();
        let r = verify_canonical_pair(&p, &y0, &y0).unwrap();
        assert!(!r.noncommute && !r.pass());
        let r = verify_canonical_pair(&p, &y0, &Diagram::trivial(vec![X])).unwrap();
        assert!(!r.pass());
        assert_eq!(verify_canonical_pair(&p, &y0, &Diagram::trivial(vec![X, X])), Err(Error::BaseMismatch));
    }

    #[test]
    fn x_family_examples() {
        let p = dunce_hat();
        let (y0, y1) = f_generators();
        assert_eq!(x_gen(&p, 0, &y0, &y1).unwrap(), reduce(&p, &y0).unwrap());
        assert_eq!(x_gen(&p, 2, &y0, &y1).unwrap(), conjugate(&p, &y1, &y0).unwrap());
        let x3 = x_gen(&p, 3, &y0, &y1).unwrap();
        let x4 = x_gen(&p, 4, &y0, &y1).unwrap();
        assert!(!equal_diagrams(&p, &x3, &x4).unwrap());
    }

    #[test]
    fn substitution_identity_on_dunce_hat() {
        let p = dunce_hat();
        let cell = Diagram::new(vec![X, X], vec![Atom::f(0, 0)]);
        let (y0, y1) = f_generators();
        assert_eq!(substitution_hom(&p, &cell, &y0).unwrap(), y0);
        assert_eq!(substitution_hom(&p, &cell, &y1).unwrap(), y1);
        assert_eq!(substitution_hom(&p, &cell, &Diagram::trivial(vec![X; 3])).unwrap(), Diagram::trivial(vec![X; 3]));
    }

    #[test]
    fn substitution_into_q() {
        let p = q();
        let cell = Diagram::new(p.parse_word("x x").unwrap(), vec![Atom::f(0, 0)]);
        let (y0, _) = f_generators();
        let img = substitution_hom(&p, &cell, &y0).unwrap();
        assert_eq!(img.cells(), 4 * cell.cells());
        assert!(img.is_spherical(&p).unwrap());
        assert_eq!(reduce(&p, &img).unwrap().cells(), 4);
    }

    #[test]
    fn substitution_rejects_bad_cells() {
        let p = q();
        let not_square = Diagram::new(p.parse_word("a x").unwrap(), vec![Atom::f(0, 1)]);
        let (y0, _) = f_generators();
        assert!(matches!(substitution_hom(&p, &not_square, &y0), Err(Error::NotIdempotentCell(_))));
    }

    #[test]
    fn embed_in_dunce_hat() {
        let p = dunce_hat();
        let EmbedOutcome::Found(w) = embed_f(&p, &vec![X], EmbedOptions::default()).unwrap() else {
            panic!("expected a witness")
        };
        assert_eq!(w.witness.e, vec![X]);
        assert!(w.witness.w1.is_empty() && w.witness.w2.is_empty());
        assert!(w.report.pass());
        let (y0, y1) = f_generators();
        assert_eq!(w.y0, y0);
        assert_eq!(w.y1, y1);
        assert!(verify_witness(&p, &w).is_ok());
    }

    #[test]
    fn embed_in_q() {
        let p = q();
        let ab = p.parse_word("a b").unwrap();
        let EmbedOutcome::Found(w) = embed_f(&p, &ab, EmbedOptions::default()).unwrap() else {
            panic!("expected a witness")
        };
        assert_eq!(p.show_word(&w.witness.w1), "a");
        assert_eq!(p.show_word(&w.witness.e), "x");
        assert_eq!(p.show_word(&w.witness.w2), "b");
        assert_eq!(w.witness.cert_factor.steps, vec![Atom::b(0, 1)]);
        assert_eq!(w.y0.top, ab);
        assert!(verify_witness(&p, &w).is_ok());
    }

    #[test]
    fn no_embedding_in_free_semigroup() {
        let p: Presentation = "letters: a b".parse().unwrap();
        let out = embed_f(&p, &p.parse_word("a b").unwrap(), EmbedOptions::default()).unwrap();
        assert!(matches!(out, EmbedOutcome::NotFound { absent: true, .. }));
    }
}
