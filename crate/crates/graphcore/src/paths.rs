use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex sequence is empty")]
    Empty,
    #[error("vertex {0} repeated in sequence")]
    Repeated(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("consecutive vertices {0},{1} are not adjacent")]
    MissingEdge(usize, usize),
    #[error("non-consecutive vertices {0},{1} are adjacent (chord)")]
    Chord(usize, usize),
    #[error("a hole needs at least 4 vertices, got {0}")]
    TooShort(usize),
}

/// An induced path, following the paper's convention that "path" always means
/// induced: consecutive vertices adjacent, all other pairs nonadjacent. A
/// single vertex is a path of length 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedPath {
    verts: Vec<usize>,
}

impl InducedPath {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, StructureError> {
        if verts.is_empty() {
            return Err(StructureError::Empty);
        }
        check_distinct_in_range(g, &verts)?;
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let adjacent = g.has_edge(verts[i], verts[j]);
                if j == i + 1 && !adjacent {
                    return Err(StructureError::MissingEdge(verts[i], verts[j]));
                }
                if j > i + 1 && adjacent {
                    return Err(StructureError::Chord(verts[i], verts[j]));
                }
            }
        }
        Ok(InducedPath { verts })
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.verts[0], *self.verts.last().unwrap())
    }

    /// The interior P*: the sequence minus its two ends.
    pub fn interior(&self) -> &[usize] {
        if self.verts.len() <= 2 {
            &[]
        } else {
            &self.verts[1..self.verts.len() - 1]
        }
    }

    pub fn interior_set(&self) -> VertexSet {
        VertexSet::from_iter(self.interior().iter().copied())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_iter(self.verts.iter().copied())
    }
}

/// An induced cycle of length at least 4, stored in canonical rotation: the
/// smallest vertex first, then the smaller of its two cycle-neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hole {
    verts: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, StructureError> {
        if verts.len() < 4 {
            return Err(StructureError::TooShort(verts.len()));
        }
        check_distinct_in_range(g, &verts)?;
        let k = verts.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let adjacent = g.has_edge(verts[i], verts[j]);
                if consecutive && !adjacent {
                    return Err(StructureError::MissingEdge(verts[i], verts[j]));
                }
                if !consecutive && adjacent {
                    return Err(StructureError::Chord(verts[i], verts[j]));
                }
            }
        }
        Ok(Hole { verts: canonical_rotation(verts) })
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges (= number of vertices).
    pub fn length(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_iter(self.verts.iter().copied())
    }

    /// The `k` cyclically consecutive edges as vertex pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.verts.len();
        (0..k).map(move |i| (self.verts[i], self.verts[(i + 1) % k]))
    }
}

/// Rotates/reflects a cyclic sequence so the minimum vertex comes first,
/// followed by the smaller of its two neighbors.
fn canonical_rotation(verts: Vec<usize>) -> Vec<usize> {
    let k = verts.len();
    let pos = verts.iter().position(|v| *v == *verts.iter().min().unwrap()).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| verts[(pos + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| verts[(pos + k - i) % k]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

/// An induced path of the complement graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antipath(pub InducedPath);

impl Antipath {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, StructureError> {
        InducedPath::new(&g.complement(), verts).map(Antipath)
    }

    pub fn length(&self) -> usize {
        self.0.length()
    }
}

/// An induced subgraph whose complement is a hole.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antihole(pub Hole);

impl Antihole {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, StructureError> {
        Hole::new(&g.complement(), verts).map(Antihole)
    }

    pub fn length(&self) -> usize {
        self.0.length()
    }
}

fn check_distinct_in_range(g: &Graph, verts: &[usize]) -> Result<(), StructureError> {
    let mut seen = VertexSet::EMPTY;
    for &v in verts {
        if v >= g.n() {
            return Err(StructureError::OutOfRange(v));
        }
        if seen.contains(v) {
            return Err(StructureError::Repeated(v));
        }
        seen = seen.insert(v);
    }
    Ok(())
}
