use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{Caps, Derivation, Verdict, VerdictKind};
use crate::diagram::Atom;
use crate::presentation::{Letter, Orient, Presentation, Word};

/// All single-relation rewrites of `w`, ordered by (offset, relation,
/// orientation). Returns whether any rewrite was dropped by the length cap.
fn neighbours(p: &Presentation, w: &[Letter], max_len: usize, out: &mut Vec<(Atom, Word)>) -> bool {
    out.clear();
    let mut pruned = false;
    for offset in 0..w.len() {
        for (rel, r) in p.relations.iter().enumerate() {
            for orient in [Orient::F, Orient::B] {
                let input = r.input(orient);
                if w.len() < offset + input.len() || &w[offset..offset + input.len()] != input {
                    continue;
                }
                let output = r.output(orient);
                if w.len() - input.len() + output.len() > max_len {
                    pruned = true;
                    continue;
                }
                let mut next = Vec::with_capacity(w.len() + output.len());
                next.extend_from_slice(&w[..offset]);
                next.extend_from_slice(output);
                next.extend_from_slice(&w[offset + input.len()..]);
                out.push((Atom { offset, rel, orient }, next));
            }
        }
    }
    pruned
}

/// One direction of the search: every visited word with the step that
/// first reached it.
struct Tree {
    words: Vec<Word>,
    parent: Vec<Option<(usize, Atom)>>,
    index: HashMap<Word, usize>,
    layer: Vec<usize>,
    pruned: bool,
}

impl Tree {
    fn new(root: &Word) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Self { words: vec![root.clone()], parent: vec![None], index, layer: vec![0], pruned: false }
    }

    fn len(&self) -> usize {
        self.words.len()
    }

    /// Steps from the root to node `i`.
    fn path(&self, mut i: usize) -> Vec<Atom> {
        let mut steps = Vec::new();
        while let Some((up, a)) = self.parent[i] {
            steps.push(a);
            i = up;
        }
        steps.reverse();
        steps
    }
}

enum Step {
    Met(usize, usize),
    Continue,
    OverBudget,
}

/// Expands one full layer of `grow`, checking each new word against `other`.
fn expand(p: &Presentation, grow: &mut Tree, other: &Tree, caps: Caps, other_len: usize) -> Step {
    let mut next_layer = Vec::new();
    let mut buf = Vec::new();
    for &node in &std::mem::take(&mut grow.layer) {
        let word = grow.words[node].clone();
        grow.pruned |= neighbours(p, &word, caps.max_word_len, &mut buf);
        for (atom, next) in buf.drain(..) {
            if let Entry::Vacant(slot) = grow.index.entry(next) {
                let id = grow.words.len();
                let next = slot.key().clone();
                slot.insert(id);
                grow.words.push(next);
                grow.parent.push(Some((node, atom)));
                if let Some(&hit) = other.index.get(&grow.words[id]) {
                    return Step::Met(id, hit);
                }
                if grow.words.len() + other_len > caps.node_budget {
                    return Step::OverBudget;
                }
                next_layer.push(id);
            }
        }
    }
    grow.layer = next_layer;
    Step::Continue
}

/// Bidirectional breadth-first search for a chain of relation applications
/// (either orientation) from `u` to `v`.
pub fn equal_mod_p(p: &Presentation, u: &Word, v: &Word, caps: Caps) -> Verdict {
    let verdict = |kind| Verdict { kind, caps };
    if u == v {
        return verdict(VerdictKind::Equal(Derivation::new(u.clone(), Vec::new())));
    }
    if u.len() > caps.max_word_len || v.len() > caps.max_word_len {
        return verdict(VerdictKind::Unknown);
    }
    let mut fwd = Tree::new(u);
    let mut bwd = Tree::new(v);
    loop {
        // grow the side with the smaller frontier; ties go forward. A side
        // cut short by the length cap proves nothing, so keep growing the
        // other one.
        let forward = !fwd.layer.is_empty() && (bwd.layer.is_empty() || fwd.layer.len() <= bwd.layer.len());
        let step = if forward {
            let other_len = bwd.len();
            expand(p, &mut fwd, &bwd, caps, other_len)
        } else {
            let other_len = fwd.len();
            expand(p, &mut bwd, &fwd, caps, other_len)
        };
        match step {
            Step::Met(a, b) => {
                let (f, g) = if forward { (a, b) } else { (b, a) };
                let mut steps = fwd.path(f);
                let back = bwd.path(g);
                steps.extend(back.iter().rev().map(|s| s.mirror()));
                return verdict(VerdictKind::Equal(Derivation::new(u.clone(), steps)));
            }
            Step::OverBudget => return verdict(VerdictKind::Unknown),
            Step::Continue => {}
        }
        let exhausted = |t: &Tree| t.layer.is_empty();
        if (exhausted(&fwd) && !fwd.pruned) || (exhausted(&bwd) && !bwd.pruned) {
            return verdict(VerdictKind::NoWitnessUnderCap { decisive: true });
        }
        if exhausted(&fwd) && exhausted(&bwd) {
            return verdict(VerdictKind::NoWitnessUnderCap { decisive: false });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T, Derivation),
    /// The reachable set under the caps was exhausted; `complete` is true
    /// when no rewrite was dropped by the length cap.
    Exhausted {
        complete: bool,
    },
    OverBudget,
}

/// Breadth-first search from `start` for the first word (in order of
/// derivation length, then enumeration order) accepted by `accept`.
pub fn reachable_where<T>(
    p: &Presentation,
    start: &Word,
    caps: Caps,
    mut accept: impl FnMut(&[Letter]) -> Option<T>,
) -> SearchOutcome<T> {
    if let Some(t) = accept(start) {
        return SearchOutcome::Found(t, Derivation::new(start.clone(), Vec::new()));
    }
    let mut tree = Tree::new(start);
    let mut buf = Vec::new();
    while !tree.layer.is_empty() {
        let mut next_layer = Vec::new();
        for node in std::mem::take(&mut tree.layer) {
            let word = tree.words[node].clone();
            tree.pruned |= neighbours(p, &word, caps.max_word_len, &mut buf);
            for (atom, next) in buf.drain(..) {
                if tree.index.contains_key(&next) {
                    continue;
                }
                let id = tree.words.len();
                tree.index.insert(next.clone(), id);
                tree.parent.push(Some((node, atom)));
                let hit = accept(&next);
                tree.words.push(next);
                if let Some(t) = hit {
                    return SearchOutcome::Found(t, Derivation::new(start.clone(), tree.path(id)));
                }
                if tree.len() > caps.node_budget {
                    return SearchOutcome::OverBudget;
                }
                next_layer.push(id);
            }
        }
        tree.layer = next_layer;
    }
    SearchOutcome::Exhausted { complete: !tree.pruned }
}
