//! Interchange equivalence, a canonical representative per isotopy class,
//! and dipole reduction.
//!
//! Two atoms that are adjacent in a sequence commute when the second one
//! does not touch anything the first one produced. The planar diagram is the
//! equivalence class of sequences under such swaps; it is determined by the
//! cell/edge incidence of its realization, which is what the routines below
//! work on.

use std::collections::VecDeque;

use crate::diagram::{Atom, Diagram, EdgeId, PlanarGraph};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// Equality notion used by [`equal_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Equality {
    /// Equal as elements of the diagram group (dipoles cancelled first).
    #[default]
    Group,
    /// Equal as planar diagrams, no cancellation.
    Isotopy,
}

/// Exchanges atoms `i` and `i + 1`, fixing offsets so the pair still acts on
/// the same letters.
pub fn swap_adjacent(p: &Presentation, d: &Diagram, i: usize) -> Result<Diagram> {
    if i + 1 >= d.atoms.len() {
        return Err(Error::IndexOutOfRange(i));
    }
    d.bottom(p)?;
    let (first, second) = (d.atoms[i], d.atoms[i + 1]);
    let out_end = first.offset + first.output(p).len();
    let in_end = second.offset + second.input(p).len();
    let (new_first, new_second) = if in_end <= first.offset {
        let moved = first.offset as isize + second.delta(p);
        (second, Atom { offset: moved as usize, ..first })
    } else if second.offset >= out_end {
        let moved = second.offset as isize - first.delta(p);
        (Atom { offset: moved as usize, ..second }, first)
    } else {
        return Err(Error::NotIndependent(i, i + 1));
    };
    let mut atoms = d.atoms.clone();
    atoms[i] = new_first;
    atoms[i + 1] = new_second;
    Ok(Diagram { top: d.top.clone(), atoms })
}

/// Canonical representative of the isotopy class: at each step apply the
/// leftmost cell whose whole top path is already present.
pub fn normal_form(p: &Presentation, d: &Diagram) -> Result<Diagram> {
    let g = d.realize(p)?;
    Ok(Diagram { top: d.top.clone(), atoms: greedy_order(&g) })
}

fn greedy_order(g: &PlanarGraph) -> Vec<Atom> {
    let consumers = g.consumers();
    let producers = g.producers();
    let mut missing: Vec<usize> =
        g.cells.iter().map(|c| c.top.iter().filter(|e| producers[e.0].is_some()).count()).collect();
    let mut available: Vec<usize> = (0..g.cells.len()).filter(|&c| missing[c] == 0).collect();
    let mut frontier = g.top.clone();
    let mut atoms = Vec::with_capacity(g.cells.len());
    while !available.is_empty() {
        let (slot, offset) = available
            .iter()
            .enumerate()
            .map(|(slot, &c)| (slot, position(&frontier, g.cells[c].top[0])))
            .min_by_key(|&(slot, offset)| {
                let cell = &g.cells[available[slot]];
                (offset, cell.rel, cell.orient.code())
            })
            .expect("nonempty");
        let c = available.swap_remove(slot);
        let cell = &g.cells[c];
        frontier.splice(offset..offset + cell.top.len(), cell.bottom.iter().copied());
        atoms.push(Atom { offset, rel: cell.rel, orient: cell.orient });
        for e in &cell.bottom {
            if let Some(next) = consumers[e.0] {
                missing[next] -= 1;
                if missing[next] == 0 {
                    available.push(next);
                }
            }
        }
    }
    debug_assert_eq!(atoms.len(), g.cells.len());
    atoms
}

fn position(frontier: &[EdgeId], e: EdgeId) -> usize {
    frontier.iter().position(|&f| f == e).expect("edge on frontier")
}

fn is_mirror_pair(g: &PlanarGraph, upper: usize, lower: usize) -> bool {
    let (a, b) = (&g.cells[upper], &g.cells[lower]);
    a.rel == b.rel && a.orient != b.orient && a.bottom == b.top
}

/// All pairs `(i, j)`, `i < j`, of atoms forming a dipole: cell `j`'s top
/// path is exactly cell `i`'s bottom path and the two are mirror images.
pub fn find_dipoles(p: &Presentation, d: &Diagram) -> Result<Vec<(usize, usize)>> {
    let g = d.realize(p)?;
    let consumers = g.consumers();
    Ok((0..g.cells.len())
        .filter_map(|i| {
            let j = consumers[g.cells[i].bottom[0].0]?;
            is_mirror_pair(&g, i, j).then_some((i, j))
        })
        .collect())
}

pub fn is_reduced(p: &Presentation, d: &Diagram) -> Result<bool> {
    Ok(find_dipoles(p, d)?.is_empty())
}

/// Cancels dipoles until none remain and returns the result in normal form.
pub fn reduce(p: &Presentation, d: &Diagram) -> Result<Diagram> {
    let g = d.realize(p)?;
    let atoms = cancel_all(&g);
    normal_form(p, &Diagram { top: d.top.clone(), atoms })
}

/// Cancels dipoles on the realized graph. Cancelling a pair glues the
/// upper cell's top path onto the lower cell's bottom path; the glued edges
/// are tracked through `alias`.
fn cancel_all(g: &PlanarGraph) -> Vec<Atom> {
    let n = g.cells.len();
    let mut alias: Vec<usize> = (0..g.edges.len()).collect();
    let mut consumers = g.consumers();
    let producers = g.producers();
    let mut alive = vec![true; n];
    let resolve = |alias: &[usize], mut e: usize| {
        while alias[e] != e {
            e = alias[e];
        }
        e
    };

    let mut work: VecDeque<usize> = (0..n).collect();
    while let Some(upper) = work.pop_front() {
        if !alive[upper] {
            continue;
        }
        let a = &g.cells[upper];
        let Some(lower) = consumers[a.bottom[0].0] else { continue };
        let b = &g.cells[lower];
        if !alive[lower]
            || a.rel != b.rel
            || a.orient == b.orient
            || b.top.len() != a.bottom.len()
            || b.top.iter().zip(&a.bottom).any(|(x, y)| resolve(&alias, x.0) != y.0)
        {
            continue;
        }
        alive[upper] = false;
        alive[lower] = false;
        for (src, dst) in a.top.iter().zip(&b.bottom) {
            let src = resolve(&alias, src.0);
            alias[dst.0] = src;
            consumers[src] = consumers[dst.0];
            if let Some(up) = producers[src] {
                work.push_back(up);
            }
        }
    }

    let mut frontier: Vec<usize> = g.top.iter().map(|e| e.0).collect();
    let mut atoms = Vec::new();
    for (c, cell) in g.cells.iter().enumerate().filter(|&(c, _)| alive[c]) {
        let first = resolve(&alias, cell.top[0].0);
        let offset = frontier.iter().position(|&e| e == first).expect("input on frontier");
        debug_assert!(cell
            .top
            .iter()
            .enumerate()
            .all(|(k, e)| frontier.get(offset + k) == Some(&resolve(&alias, e.0))));
        frontier.splice(offset..offset + cell.top.len(), cell.bottom.iter().map(|e| e.0));
        atoms.push(Atom { offset, rel: cell.rel, orient: g.cells[c].orient });
    }
    atoms
}

/// Equality in the diagram group: same top word and same reduced form.
pub fn equal_diagrams(p: &Presentation, d1: &Diagram, d2: &Diagram) -> Result<bool> {
    equal_with(p, d1, d2, Equality::Group)
}

pub fn equal_isotopic(p: &Presentation, d1: &Diagram, d2: &Diagram) -> Result<bool> {
    equal_with(p, d1, d2, Equality::Isotopy)
}

pub fn equal_with(p: &Presentation, d1: &Diagram, d2: &Diagram, mode: Equality) -> Result<bool> {
    if d1.top != d2.top {
        // still surface invalid input
        d1.bottom(p)?;
        d2.bottom(p)?;
        return Ok(false);
    }
    let (a, b) = match mode {
        Equality::Group => (reduce(p, d1)?, reduce(p, d2)?),
        Equality::Isotopy => (normal_form(p, d1)?, normal_form(p, d2)?),
    };
    Ok(a.atoms == b.atoms)
}

/// Group product: compose, then reduce.
pub fn multiply(p: &Presentation, d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
    reduce(p, &d1.compose(p, d2)?)
}
