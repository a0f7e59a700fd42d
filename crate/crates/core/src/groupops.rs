//! Operations inside a diagram group `D(P, w)`: conjugation, powers,
//! commutators, the component decomposition of absolutely reduced diagrams,
//! and the monoid-valued vertex invariant `μ`.

use std::ops::Deref;

use crate::canonical::{equal_diagrams, is_reduced, reduce};
use crate::diagram::{Diagram, PlanarGraph, VertexId};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::rewrite::{Caps, KbBudget, VerdictKind, WordProblem};

/// A `(w, w)`-diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphericalDiagram(Diagram);

impl SphericalDiagram {
    pub fn new(p: &Presentation, d: Diagram) -> Result<Self> {
        if !d.is_spherical(p)? {
            return Err(Error::NotSpherical);
        }
        Ok(Self(d))
    }

    pub fn base(&self) -> &Word {
        &self.0.top
    }

    pub fn into_inner(self) -> Diagram {
        self.0
    }
}

impl Deref for SphericalDiagram {
    type Target = Diagram;

    fn deref(&self) -> &Diagram {
        &self.0
    }
}

fn spherical(p: &Presentation, d: &Diagram) -> Result<()> {
    if d.is_spherical(p)? {
        Ok(())
    } else {
        Err(Error::NotSpherical)
    }
}

/// `g⁻¹ · d · g`, reduced; a spherical diagram over `bottom(g)`.
pub fn conjugate(p: &Presentation, d: &Diagram, g: &Diagram) -> Result<Diagram> {
    spherical(p, d)?;
    if g.top != d.top {
        return Err(Error::BaseMismatch);
    }
    let inv = g.inverse(p)?;
    reduce(p, &inv.compose(p, d)?.compose(p, g)?)
}

/// Reduced `n`-th power; negative exponents use the inverse.
pub fn power(p: &Presentation, d: &Diagram, n: i64) -> Result<Diagram> {
    spherical(p, d)?;
    let base = if n < 0 { d.inverse(p)? } else { d.clone() };
    let base = reduce(p, &base)?;
    let mut acc = Diagram::trivial(d.top.clone());
    for _ in 0..n.unsigned_abs() {
        acc = reduce(p, &acc.compose(p, &base)?)?;
    }
    Ok(acc)
}

/// `d1⁻¹ d2⁻¹ d1 d2`, reduced.
pub fn commutator(p: &Presentation, d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
    spherical(p, d1)?;
    spherical(p, d2)?;
    if d1.top != d2.top {
        return Err(Error::BaseMismatch);
    }
    let prod = d1.inverse(p)?.compose(p, &d2.inverse(p)?)?.compose(p, d1)?.compose(p, d2)?;
    reduce(p, &prod)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Summands from left to right; their sum is isotopic to the input.
    pub parts: Vec<SphericalDiagram>,
    pub bases: Vec<Word>,
    /// Interior vertices of the realization lying on both the top and the
    /// bottom path at the same position, in left-to-right order, after
    /// merging runs of trivial parts.
    pub split_vertices: Vec<VertexId>,
}

impl ComponentDecomposition {
    pub fn nontrivial(&self) -> usize {
        self.parts.iter().filter(|d| !d.is_trivial()).count()
    }
}

/// Positions `k` (0 < k < |w|) where the top and bottom paths meet.
fn split_positions(g: &PlanarGraph) -> Vec<usize> {
    let n = g.top.len();
    (1..n).filter(|&k| g.top_vertices[k] == g.bottom_vertices[k]).collect()
}

/// Cuts a spherical diagram at top positions `cuts` (each a vertex shared
/// by the top and bottom paths) into consecutive spherical pieces.
fn cut(g: &PlanarGraph, d: &Diagram, cuts: &[usize]) -> Vec<Diagram> {
    let split: Vec<VertexId> = cuts.iter().map(|&k| g.top_vertices[k]).collect();
    let mut bounds = vec![0];
    bounds.extend_from_slice(cuts);
    bounds.push(d.top.len());
    let mut parts: Vec<Diagram> = bounds.windows(2).map(|w| Diagram::trivial(d.top[w[0]..w[1]].to_vec())).collect();

    // split vertices stay on every intermediate frontier
    let mut frontier = g.top_vertices.clone();
    for (a, cell) in d.atoms.iter().zip(&g.cells) {
        let left = frontier[a.offset];
        let pos = |v: VertexId| frontier.iter().position(|&f| f == v);
        let seg = split.iter().take_while(|&&s| pos(s).is_some_and(|ps| ps <= a.offset)).count();
        let base = if seg == 0 { 0 } else { pos(split[seg - 1]).unwrap() };
        debug_assert!(pos(left).is_some());
        parts[seg].atoms.push(crate::diagram::Atom { offset: a.offset - base, ..*a });
        let interior: Vec<VertexId> = cell.bottom[..cell.bottom.len() - 1].iter().map(|e| g.edges[e.0].to).collect();
        frontier.splice(a.offset + 1..a.offset + cell.top.len(), interior);
    }
    parts
}

/// Splits a spherical diagram into summands at every vertex common to its
/// top and bottom paths, then merges neighbouring trivial summands.
pub fn decompose_components(p: &Presentation, d: &Diagram) -> Result<ComponentDecomposition> {
    spherical(p, d)?;
    let g = d.realize(p)?;
    let cuts = split_positions(&g);
    let pieces = cut(&g, d, &cuts);

    let mut parts: Vec<Diagram> = Vec::new();
    let mut split_vertices = Vec::new();
    for (i, piece) in pieces.into_iter().enumerate() {
        match parts.last_mut() {
            Some(last) if last.is_trivial() && piece.is_trivial() => last.top.extend(piece.top),
            _ => {
                if i > 0 {
                    split_vertices.push(g.top_vertices[cuts[i - 1]]);
                }
                parts.push(piece);
            }
        }
    }
    let bases = parts.iter().map(|d| d.top.clone()).collect();
    let parts = parts.into_iter().map(SphericalDiagram).collect();
    Ok(ComponentDecomposition { parts, bases, split_vertices })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    /// A `(w, v)`-diagram Ψ with `Ψ · core · Ψ⁻¹` equal to the input.
    pub conjugator: Diagram,
    /// An absolutely reduced `(v, v)`-diagram.
    pub core: SphericalDiagram,
}

/// Conjugates a spherical diagram to one whose square is reduced, by
/// repeatedly peeling a first cell together with its mirror image among the
/// last cells.
pub fn absolutely_reduce(p: &Presentation, d: &Diagram) -> Result<CyclicReduction> {
    spherical(p, d)?;
    let mut core = reduce(p, d)?;
    let mut conjugator = Diagram::trivial(d.top.clone());
    loop {
        if core.is_trivial() {
            break;
        }
        let square = reduce(p, &core.compose(p, &core)?)?;
        if square.cells() == 2 * core.cells() {
            break;
        }
        let g = core.realize(p)?;
        let (front, back) = find_peel(&g).ok_or(Error::StuckCyclicReduction)?;
        let mut order = vec![front];
        order.extend((0..g.cells.len()).filter(|&c| c != front && c != back));
        order.push(back);
        let atoms = g.linearize(&order).ok_or(Error::StuckCyclicReduction)?;
        let first = atoms[0];
        let middle =
            Diagram::new(first.apply(p, &core.top).expect("front cell applies"), atoms[1..atoms.len() - 1].to_vec());
        let peeled = Diagram::new(core.top.clone(), vec![first]);
        conjugator = conjugator.compose(p, &peeled)?;
        core = reduce(p, &middle)?;
    }
    Ok(CyclicReduction { conjugator, core: SphericalDiagram(core) })
}

/// A cell that can go first and a mirror-image cell that can go last at the
/// same position, so the square would cancel them across the seam.
fn find_peel(g: &PlanarGraph) -> Option<(usize, usize)> {
    let producers = g.producers();
    let consumers = g.consumers();
    let fronts = (0..g.cells.len()).filter(|&c| g.cells[c].top.iter().all(|e| producers[e.0].is_none()));
    let backs: Vec<usize> =
        (0..g.cells.len()).filter(|&c| g.cells[c].bottom.iter().all(|e| consumers[e.0].is_none())).collect();
    for f in fronts {
        let cf = &g.cells[f];
        let at = g.top.iter().position(|&e| e == cf.top[0])?;
        for &b in &backs {
            let cb = &g.cells[b];
            let bt = g.bottom.iter().position(|&e| e == cb.bottom[0])?;
            if b != f && at == bt && cf.rel == cb.rel && cf.orient != cb.orient {
                return Some((f, b));
            }
        }
    }
    None
}

/// Number of nontrivial components of an absolutely reduced conjugate.
pub fn comp(p: &Presentation, d: &Diagram) -> Result<usize> {
    let cr = absolutely_reduce(p, d)?;
    Ok(decompose_components(p, &cr.core)?.nontrivial())
}

/// `μ(o, o2)`: label of some positive path from `o` to `o2`, standing for
/// an element of the monoid. `None` when no such path exists.
pub fn mu(g: &PlanarGraph, o: VertexId, o2: VertexId) -> Option<Word> {
    g.path_label(o, o2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuComparison {
    Equal,
    Unknown,
    Distinct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuCheck {
    pub vertex: VertexId,
    pub to_top: Word,
    pub to_bottom: Word,
    pub outcome: MuComparison,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Report {
    pub top_split: VertexId,
    pub bottom_split: VertexId,
    /// Sorted by vertex id.
    pub checks: Vec<MuCheck>,
}

impl Lemma1Report {
    /// No vertex has provably different `μ` values.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != MuComparison::Distinct)
    }

    pub fn count(&self, outcome: MuComparison) -> usize {
        self.checks.iter().filter(|c| c.outcome == outcome).count()
    }
}

/// For a `(uv, uv)`-diagram equivalent to a sum of a `(u, u)`- and a
/// `(v, v)`-diagram, with `o1`/`o2` the vertices after `u` on the top and
/// bottom paths, checks `μ(o, o1) = μ(o, o2)` for every vertex `o` below
/// both.
pub fn check_lemma1(p: &Presentation, d: &Diagram, split: usize, caps: Caps) -> Result<Lemma1Report> {
    spherical(p, d)?;
    if split > d.top.len() {
        return Err(Error::NotASum(split));
    }
    let reduced = reduce(p, d)?;
    let gr = reduced.realize(p)?;
    if gr.top_vertices[split] != gr.bottom_vertices[split] {
        return Err(Error::NotASum(split));
    }
    let cuts: Vec<usize> = [split].into_iter().filter(|&k| k > 0 && k < d.top.len()).collect();
    let pieces = cut(&gr, &reduced, &cuts);
    let mut summed = Diagram::trivial(Vec::new());
    for piece in &pieces {
        summed = summed.sum(p, piece)?;
    }
    if !equal_diagrams(p, d, &summed)? {
        return Err(Error::NotASum(split));
    }

    let engine = WordProblem::new(p, caps).with_completion(KbBudget::default());
    let g = d.realize(p)?;
    let (o1, o2) = (g.top_vertices[split], g.bottom_vertices[split]);
    let mut checks = Vec::new();
    for v in (0..g.vertex_count).map(VertexId) {
        let (Some(to_top), Some(to_bottom)) = (mu(&g, v, o1), mu(&g, v, o2)) else { continue };
        let outcome = match engine.decide(&to_top, &to_bottom).kind {
            VerdictKind::Equal(_) => MuComparison::Equal,
            VerdictKind::NoWitnessUnderCap { decisive: true } => MuComparison::Distinct,
            _ => MuComparison::Unknown,
        };
        checks.push(MuCheck { vertex: v, to_top, to_bottom, outcome });
    }
    Ok(Lemma1Report { top_split: o1, bottom_split: o2, checks })
}

/// Whether `d` and every power up to `n` are reduced.
pub fn powers_reduced(p: &Presentation, d: &Diagram, n: usize) -> Result<bool> {
    let mut acc = d.clone();
    for k in 1..=n {
        if !is_reduced(p, &acc)? || acc.cells() != k * d.cells() {
            return Ok(false);
        }
        acc = acc.compose(p, d)?;
    }
    Ok(true)
}
