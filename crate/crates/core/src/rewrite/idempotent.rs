use super::{Caps, Derivation, KbBudget, VerdictKind, WordProblem};
use crate::presentation::{Letter, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSearch {
    /// `(e, derivation e·e ⇝ e)`, shortest first, then shortlex.
    pub found: Vec<(Word, Derivation)>,
    /// Candidates for which neither equality nor inequality was settled.
    pub undecided: Vec<Word>,
    pub max_len: usize,
}

impl IdempotentSearch {
    /// True when every candidate up to `max_len` was decided.
    pub fn decisive(&self) -> bool {
        self.undecided.is_empty()
    }
}

/// Words of length `len` in shortlex order.
pub(crate) fn words_of_length(rank: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (rank as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    (0..if rank == 0 { 0 } else { total }).map(move |mut n| {
        let mut w = vec![Letter(0); len];
        for slot in w.iter_mut().rev() {
            *slot = Letter((n % rank as u128) as u32);
            n /= rank as u128;
        }
        w
    })
}

/// Every word `e` with `1 ≤ |e| ≤ max_len` and `e·e = e` in the presented
/// monoid, each with a derivation `e·e ⇝ e`.
pub fn idempotent_search(p: &Presentation, max_len: usize, caps: Caps) -> IdempotentSearch {
    let engine = WordProblem::new(p, caps).with_completion(KbBudget::default());
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for len in 1..=max_len {
        for e in words_of_length(p.rank(), len) {
            let mut ee = e.clone();
            ee.extend_from_slice(&e);
            match engine.decide(&ee, &e).kind {
                VerdictKind::Equal(d) => found.push((e, d)),
                VerdictKind::NoWitnessUnderCap { decisive: true } => {}
                _ => undecided.push(e),
            }
        }
    }
    IdempotentSearch { found, undecided, max_len }
}
