use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count. Bit rows are `u64`, so this can be widened to 64
/// by changing one constant; everything downstream works off `MAX_N`.
pub const MAX_N: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the compiled limit {MAX_N}")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A subset of `{0..n-1}` as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The full set `{0..n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member; panics on the empty set.
    #[inline]
    pub fn min(self) -> usize {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as usize
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// All subsets of this set, in ascending numeric (bit-mask) order.
    /// The empty set comes first and `self` last.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { universe: self.0, next: Some(0) }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(verts: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in verts {
            s = s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Enumerates subsets of a fixed universe mask in ascending numeric order
/// using the standard carry trick `(next - universe) & universe`.
pub struct SubsetIter {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(VertexSet(cur))
    }
}

/// A simple undirected graph on `n <= MAX_N` vertices with bit-row adjacency.
///
/// Invariants: `adj[u]` bit `v` equals `adj[v]` bit `u`, no vertex is adjacent
/// to itself, and all bits at positions `>= n` (and all rows `>= n`) are zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_N],
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is valid.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_N {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: [0; MAX_N] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The cycle `C_n` on vertices `0..n` in order; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edge `uv` in the result iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set().bits();
        let mut g = Graph { n: self.n, adj: [0; MAX_N] };
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1u64 << v);
        }
        g
    }

    /// Subgraph induced on `s`, vertices relabelled `0..|s|` in ascending
    /// original order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        self.induced_with_map(s).0
    }

    /// As [`Graph::induced`], also returning `map` with `map[new] = old`.
    pub fn induced_with_map(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(s.is_subset_of(self.vertex_set()));
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph { n: map.len(), adj: [0; MAX_N] };
        for (i, &u) in map.iter().enumerate() {
            let mut row = 0u64;
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    row |= 1u64 << j;
                }
            }
            g.adj[i] = row;
        }
        (g, map)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// bijection on `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_N] };
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                g.adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        g
    }

    /// The connected component of `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let within = within.bits();
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & within;
            }
            if grown == comp {
                return VertexSet(comp);
            }
            comp = grown;
        }
    }

    /// Partition of `s` into maximal connected subsets of `G|s`, ordered by
    /// smallest member. The empty set yields an empty list.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let comp = self.component_of(rest.min(), rest);
            rest = rest.minus(comp);
            out.push(comp);
        }
        out
    }

    /// `components` of the complement: maximal anticonnected subsets of `s`.
    pub fn anticomponents(&self, s: VertexSet) -> Vec<VertexSet> {
        self.complement().components(s)
    }

    /// Is `G|s` connected? The empty set counts as connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        s.is_empty() || self.component_of(s.min(), s) == s
    }

    pub fn is_anticonnected_within(&self, s: VertexSet) -> bool {
        s.is_empty() || self.complement().component_of(s.min(), s) == s
    }

    /// Vertices adjacent to every member of `s` (the common neighborhood).
    /// For the empty set this is the full vertex set.
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut cn = self.vertex_set().bits();
        for v in s.iter() {
            cn &= self.adj[v];
        }
        VertexSet(cn)
    }

    /// Is `v` adjacent to every member of `s`? (Consequently `v` must not be
    /// in `s`; a set member is never complete to the set.)
    #[inline]
    pub fn is_complete_to(&self, v: usize, s: VertexSet) -> bool {
        s.bits() & !self.adj[v] == 0 && !s.contains(v)
    }

    /// Every `a`-`b` pair with `a` in `s`, `b` in `t` is an edge. Requires the
    /// sets to be disjoint to be meaningful; vacuously true if either is empty.
    pub fn sets_complete(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| t.bits() & !self.adj[v] == 0)
    }

    /// No edges between `s` and `t`.
    pub fn sets_anticomplete(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| t.bits() & self.adj[v] == 0)
    }

    /// Is `s` a clique?
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.remove(v).bits() & !self.adj[v] == 0)
    }

    /// Is `s` an independent set?
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.bits() & self.adj[v] == 0)
    }

    /// Checks the symmetry/irreflexivity/padding invariants; used by tests and
    /// the I/O layer after deserialization.
    pub fn check_invariants(&self) -> bool {
        if self.n > MAX_N {
            return false;
        }
        let full = VertexSet::full(self.n).bits();
        for v in 0..self.n {
            if self.adj[v] & !full != 0 || self.adj[v] >> v & 1 == 1 {
                return false;
            }
        }
        for row in &self.adj[self.n..] {
            if *row != 0 {
                return false;
            }
        }
        for u in 0..self.n {
            for v in 0..u {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
