//! Knuth–Bendix completion for string rewriting under shortlex order (letters
//! ordered as in the alphabet). Always budgeted.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbBudget {
    pub max_rules: usize,
    /// Equations processed (relations plus critical pairs).
    pub max_steps: usize,
}

impl Default for KbBudget {
    fn default() -> Self {
        Self { max_rules: 200, max_steps: 20_000 }
    }
}

/// Oriented rules `lhs → rhs` with `lhs > rhs` in shortlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedSystem {
    pub rules: Vec<(Word, Word)>,
    pub confluent: bool,
}

pub fn shortlex(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

fn find(hay: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

/// Rewrites to an irreducible word, scanning left to right with a stack:
/// after each letter is pushed, a rule whose left side ends the stack is
/// applied and its right side goes back onto the input.
fn normalize(rules: &[(Word, Word)], w: &[Letter]) -> Word {
    let mut by_last: Vec<Vec<usize>> = Vec::new();
    for (k, (lhs, _)) in rules.iter().enumerate() {
        let last = lhs.last().map_or(0, |l| l.index());
        if by_last.len() <= last {
            by_last.resize(last + 1, Vec::new());
        }
        by_last[last].push(k);
    }
    let mut out: Word = Vec::with_capacity(w.len());
    let mut input: Vec<Letter> = w.iter().rev().copied().collect();
    while let Some(l) = input.pop() {
        out.push(l);
        let Some(candidates) = by_last.get(l.index()) else { continue };
        if let Some(&k) = candidates.iter().find(|&&k| out.ends_with(&rules[k].0)) {
            let (lhs, rhs) = &rules[k];
            out.truncate(out.len() - lhs.len());
            input.extend(rhs.iter().rev());
        }
    }
    out
}

impl CompletedSystem {
    pub fn normal_form(&self, w: &[Letter]) -> Word {
        normalize(&self.rules, w)
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.normal_form(u) == self.normal_form(v)
    }

    /// Critical pairs that do not rewrite to a common normal form.
    pub fn unresolved_critical_pairs(&self) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                for (a, b) in critical_pairs(&self.rules[i], &self.rules[j]) {
                    if self.normal_form(&a) != self.normal_form(&b) {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }
}

/// Overlaps of `l1` with `l2`: a proper suffix of `l1` equal to a prefix of
/// `l2`, and `l2` occurring inside `l1`.
pub(crate) fn critical_pairs((l1, r1): &(Word, Word), (l2, r2): &(Word, Word)) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut a = r1.clone();
            a.extend_from_slice(&l2[k..]);
            let mut b = l1[..l1.len() - k].to_vec();
            b.extend_from_slice(r2);
            out.push((a, b));
        }
    }
    if l1 != l2 && l2.len() <= l1.len() {
        for i in 0..=l1.len() - l2.len() {
            if l1[i..i + l2.len()] == l2[..] {
                let mut b = l1[..i].to_vec();
                b.extend_from_slice(r2);
                b.extend_from_slice(&l1[i + l2.len()..]);
                out.push((r1.clone(), b));
            }
        }
    }
    out
}

/// Runs completion on the presentation's relations. Pending equations are
/// processed first in, first out.
pub fn kb_complete(p: &Presentation, budget: KbBudget) -> Result<CompletedSystem> {
    let mut rules: Vec<(Word, Word)> = Vec::new();
    let mut pending: VecDeque<(Word, Word)> = p.relations.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect();
    let mut steps = 0usize;
    while let Some((a, b)) = pending.pop_front() {
        steps += 1;
        if steps > budget.max_steps {
            return Err(Error::Timeout);
        }
        let a = normalize(&rules, &a);
        let b = normalize(&rules, &b);
        let rule = match shortlex(&a, &b) {
            Ordering::Equal => continue,
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
        };

        // rules whose left side the new rule rewrites go back in the queue
        let mut kept = Vec::with_capacity(rules.len() + 1);
        for (l, r) in rules.drain(..) {
            if find(&l, &rule.0).is_some() {
                pending.push_back((l, r));
            } else {
                kept.push((l, r));
            }
        }
        rules = kept;
        rules.push(rule.clone());
        if rules.len() > budget.max_rules {
            return Err(Error::Timeout);
        }
        for k in 0..rules.len() {
            let rhs = normalize(&rules, &rules[k].1);
            rules[k].1 = rhs;
        }
        for other in rules.clone() {
            pending.extend(critical_pairs(&rule, &other));
            if other != rule {
                pending.extend(critical_pairs(&other, &rule));
            }
        }
    }
    Ok(CompletedSystem { rules, confluent: true })
}
