//! Brute-force ground truth for small diagrams.
//!
//! Nothing here goes through [`crate::canonical`]: orbits are enumerated by
//! raw adjacent swaps on atom sequences and dipoles are only recognised when
//! the two cells sit next to each other. Agreement with the fast routines is
//! therefore meaningful evidence.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::diagram::{Atom, Diagram};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitBounds {
    pub max_cells: usize,
    pub max_orbit: usize,
    pub max_word_len: usize,
}

impl Default for OrbitBounds {
    fn default() -> Self {
        Self { max_cells: 10, max_orbit: 200_000, max_word_len: 32 }
    }
}

fn side_lengths(p: &Presentation, a: &Atom) -> (usize, usize) {
    let r = &p.relations[a.rel];
    let (lhs, rhs) = (r.lhs.len(), r.rhs.len());
    match a.orient {
        crate::presentation::Orient::F => (lhs, rhs),
        crate::presentation::Orient::B => (rhs, lhs),
    }
}

/// Swaps atoms `i`, `i+1` if the second one's input lies wholly to one side
/// of what the first one wrote.
fn raw_swap(p: &Presentation, atoms: &[Atom], i: usize) -> Option<Vec<Atom>> {
    let (a, b) = (atoms[i], atoms[i + 1]);
    let (a_in, a_out) = side_lengths(p, &a);
    let (b_in, b_out) = side_lengths(p, &b);
    let (na, nb) = if b.offset + b_in <= a.offset {
        let shift = a.offset + b_out - b_in;
        (Atom { offset: shift, ..a }, b)
    } else if b.offset >= a.offset + a_out {
        let shift = b.offset + a_in - a_out;
        (a, Atom { offset: shift, ..b })
    } else {
        return None;
    };
    let mut out = atoms.to_vec();
    out[i] = nb;
    out[i + 1] = na;
    Some(out)
}

fn check_cells(d: &Diagram, bounds: &OrbitBounds) -> Result<()> {
    if d.cells() > bounds.max_cells {
        return Err(Error::ExceededBounds(format!("{} cells > {}", d.cells(), bounds.max_cells)));
    }
    Ok(())
}

fn check_words(p: &Presentation, d: &Diagram, bounds: &OrbitBounds) -> Result<()> {
    let words = d.words(p)?;
    if let Some(w) = words.iter().find(|w| w.len() > bounds.max_word_len) {
        return Err(Error::ExceededBounds(format!("intermediate word of length {}", w.len())));
    }
    Ok(())
}

fn orbit_of(p: &Presentation, atoms: Vec<Atom>, bounds: &OrbitBounds) -> Result<BTreeSet<Vec<Atom>>> {
    let mut seen: HashSet<Vec<Atom>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(atoms.clone());
    queue.push_back(atoms);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if let Some(next) = raw_swap(p, &cur, i) {
                if seen.insert(next.clone()) {
                    if seen.len() > bounds.max_orbit {
                        return Err(Error::ExceededBounds(format!("orbit larger than {}", bounds.max_orbit)));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every atom sequence reachable from `d` by legal adjacent swaps.
pub fn swap_orbit(p: &Presentation, d: &Diagram, bounds: &OrbitBounds) -> Result<BTreeSet<Vec<Atom>>> {
    check_cells(d, bounds)?;
    check_words(p, d, bounds)?;
    orbit_of(p, d.atoms.clone(), bounds)
}

fn adjacent_dipole(a: &Atom, b: &Atom) -> bool {
    a.offset == b.offset && a.rel == b.rel && a.orient != b.orient
}

/// Terminal diagrams reachable by cancelling dipoles in every possible
/// order, each given as the smallest member of its swap orbit (which is the
/// left-greedy normal form).
pub fn all_reductions(p: &Presentation, d: &Diagram, bounds: &OrbitBounds) -> Result<BTreeSet<Diagram>> {
    check_cells(d, bounds)?;
    check_words(p, d, bounds)?;
    let mut memo: HashMap<Vec<Atom>, BTreeSet<Vec<Atom>>> = HashMap::new();
    let terminal = explore(p, d.atoms.clone(), bounds, &mut memo)?;
    Ok(terminal.into_iter().map(|atoms| Diagram { top: d.top.clone(), atoms }).collect())
}

fn explore(
    p: &Presentation,
    atoms: Vec<Atom>,
    bounds: &OrbitBounds,
    memo: &mut HashMap<Vec<Atom>, BTreeSet<Vec<Atom>>>,
) -> Result<BTreeSet<Vec<Atom>>> {
    let orbit = orbit_of(p, atoms, bounds)?;
    let rep = orbit.iter().next().cloned().unwrap_or_default();
    if let Some(hit) = memo.get(&rep) {
        return Ok(hit.clone());
    }
    let mut children: BTreeSet<Vec<Atom>> = BTreeSet::new();
    for member in &orbit {
        for k in 0..member.len().saturating_sub(1) {
            if adjacent_dipole(&member[k], &member[k + 1]) {
                let mut child = member.clone();
                child.drain(k..k + 2);
                children.insert(child);
            }
        }
    }
    let mut result = BTreeSet::new();
    if children.is_empty() {
        result.insert(rep.clone());
    }
    for child in children {
        result.extend(explore(p, child, bounds, memo)?);
    }
    memo.insert(rep, result.clone());
    Ok(result)
}

/// Whether `d1` and `d2` have a common fully reduced form.
pub fn oracle_equal(p: &Presentation, d1: &Diagram, d2: &Diagram, bounds: &OrbitBounds) -> Result<bool> {
    let r1 = all_reductions(p, d1, bounds)?;
    let r2 = all_reductions(p, d2, bounds)?;
    if d1.top != d2.top {
        return Ok(false);
    }
    Ok(r1.intersection(&r2).next().is_some())
}
