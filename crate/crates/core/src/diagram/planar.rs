use std::collections::HashSet;

use super::Diagram;
use crate::error::{Error, Result};
use crate::presentation::{Letter, Orient, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// A directed edge, always pointing left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub letter: Letter,
}

/// One cell. `top` is the path it consumes, `bottom` the path it creates;
/// both run from `left` to `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub rel: usize,
    pub orient: Orient,
    pub left: VertexId,
    pub right: VertexId,
    pub top: Vec<EdgeId>,
    pub bottom: Vec<EdgeId>,
}

/// Explicit planar realization of a diagram. Vertex and edge ids are
/// assigned in replay order, so realizing the same atom sequence twice gives
/// identical graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarGraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    /// Indexed like the diagram's atoms.
    pub cells: Vec<Cell>,
    pub top: Vec<EdgeId>,
    pub bottom: Vec<EdgeId>,
    pub top_vertices: Vec<VertexId>,
    pub bottom_vertices: Vec<VertexId>,
}

impl PlanarGraph {
    pub fn realize(p: &Presentation, d: &Diagram) -> Result<PlanarGraph> {
        let n = d.top.len();
        let mut edges: Vec<Edge> = d
            .top
            .iter()
            .enumerate()
            .map(|(i, &letter)| Edge { from: VertexId(i), to: VertexId(i + 1), letter })
            .collect();
        let top: Vec<EdgeId> = (0..n).map(EdgeId).collect();
        let top_vertices: Vec<VertexId> = (0..=n).map(VertexId).collect();
        let mut vertex_count = n + 1;

        let mut frontier = top.clone();
        let mut frontier_vertices = top_vertices.clone();
        let mut cells = Vec::with_capacity(d.atoms.len());
        for (index, a) in d.atoms.iter().enumerate() {
            let rel = p.relation(a.rel).ok_or(Error::InvalidDiagram { index })?;
            let input = rel.input(a.orient);
            let output = rel.output(a.orient);
            let end = a.offset + input.len();
            if end > frontier.len() || frontier[a.offset..end].iter().zip(input).any(|(e, &l)| edges[e.0].letter != l) {
                return Err(Error::InvalidDiagram { index });
            }
            let left = frontier_vertices[a.offset];
            let right = frontier_vertices[end];
            let mut path = vec![left];
            for _ in 1..output.len() {
                path.push(VertexId(vertex_count));
                vertex_count += 1;
            }
            path.push(right);
            let new_edges: Vec<EdgeId> = output
                .iter()
                .enumerate()
                .map(|(k, &letter)| {
                    edges.push(Edge { from: path[k], to: path[k + 1], letter });
                    EdgeId(edges.len() - 1)
                })
                .collect();
            let consumed: Vec<EdgeId> = frontier.splice(a.offset..end, new_edges.iter().copied()).collect();
            frontier_vertices.splice(a.offset + 1..end, path[1..path.len() - 1].iter().copied());
            cells.push(Cell { rel: a.rel, orient: a.orient, left, right, top: consumed, bottom: new_edges });
        }
        Ok(PlanarGraph {
            vertex_count,
            edges,
            cells,
            top,
            bottom: frontier,
            top_vertices,
            bottom_vertices: frontier_vertices,
        })
    }

    pub fn source(&self) -> VertexId {
        self.top_vertices[0]
    }

    pub fn sink(&self) -> VertexId {
        *self.top_vertices.last().unwrap()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.vertex_count
    }

    /// `V - E + C`; equals 1 for every realized diagram.
    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count as isize - self.edges.len() as isize + self.cells.len() as isize
    }

    /// Outgoing edges of each vertex, in creation order.
    pub fn adjacency(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from.0].push(EdgeId(i));
        }
        out
    }

    /// For each edge, the cell that consumes it (`None` for bottom edges).
    pub fn consumers(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.edges.len()];
        for (c, cell) in self.cells.iter().enumerate() {
            for e in &cell.top {
                out[e.0] = Some(c);
            }
        }
        out
    }

    /// For each edge, the cell that creates it (`None` for top edges).
    pub fn producers(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.edges.len()];
        for (c, cell) in self.cells.iter().enumerate() {
            for e in &cell.bottom {
                out[e.0] = Some(c);
            }
        }
        out
    }

    pub fn label(&self, path: &[EdgeId]) -> Word {
        path.iter().map(|e| self.edges[e.0].letter).collect()
    }

    /// Label of a positive path from `from` to `to`, found by depth-first
    /// search taking outgoing edges in creation order. `None` if `to` is
    /// not reachable.
    pub fn path_label(&self, from: VertexId, to: VertexId) -> Option<Word> {
        if !self.contains(from) || !self.contains(to) {
            return None;
        }
        if from == to {
            return Some(Word::new());
        }
        let adj = self.adjacency();
        let mut visited = HashSet::new();
        let mut stack: Vec<(VertexId, usize)> = vec![(from, 0)];
        let mut path: Vec<EdgeId> = Vec::new();
        visited.insert(from);
        while let Some((v, next)) = stack.last_mut() {
            if *v == to {
                return Some(self.label(&path));
            }
            match adj[v.0].get(*next) {
                Some(&e) => {
                    *next += 1;
                    let w = self.edges[e.0].to;
                    if visited.insert(w) {
                        path.push(e);
                        stack.push((w, 0));
                    }
                }
                None => {
                    stack.pop();
                    path.pop();
                }
            }
        }
        None
    }

    /// Atom sequence applying the cells in `order`, starting from the top
    /// path. `None` if some cell's top path is not on the running frontier
    /// when its turn comes. Cells missing from `order` are skipped, which
    /// is only meaningful when none of the listed cells depends on them.
    pub fn linearize(&self, order: &[usize]) -> Option<Vec<super::Atom>> {
        let mut frontier = self.top.clone();
        let mut atoms = Vec::with_capacity(order.len());
        for &c in order {
            let cell = self.cells.get(c)?;
            let offset = frontier.iter().position(|&e| e == cell.top[0])?;
            if frontier.get(offset..offset + cell.top.len())? != cell.top.as_slice() {
                return None;
            }
            frontier.splice(offset..offset + cell.top.len(), cell.bottom.iter().copied());
            atoms.push(super::Atom { offset, rel: cell.rel, orient: cell.orient });
        }
        Some(atoms)
    }

    /// Whether a positive path runs from `from` to `to`.
    pub fn reaches(&self, from: VertexId, to: VertexId) -> bool {
        self.path_label(from, to).is_some()
    }
}
