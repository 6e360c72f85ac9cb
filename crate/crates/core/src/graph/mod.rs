//! Finite simple graphs on at most 64 vertices, stored as adjacency bitsets.
//!
//! Vertices are `0..n`. Every operation here is a pure function of its inputs.

pub(crate) mod canon;
mod io;
mod matching;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use io::{parse_edge_list, to_edge_list};
pub use matching::{
    independence_number, induced_matching_number, matching_number, max_independent_set_below,
};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some ambient graph, as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Simple undirected graph. `adj[v]` is the neighbourhood bitset of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood bitsets, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mask = low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in BitIter(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Trusted constructor for internal code that maintains the invariants itself.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.first_adjacent_pair(s).is_none()
    }

    fn first_adjacent_pair(&self, s: VertexSet) -> Option<(usize, usize)> {
        s.iter().find_map(|v| {
            let hit = self.adj[v] & s.0;
            (hit != 0).then(|| (v, hit.trailing_zeros() as usize))
        })
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] == 0)
    }

    /// Connected component containing `v`, restricted to `within`.
    pub(crate) fn component_within(&self, v: usize, within: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// A graph with a single vertex counts as connected; so does the empty graph.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, low_bits(self.n)) == low_bits(self.n)
    }

    pub fn component_count(&self) -> usize {
        let mut rest = low_bits(self.n);
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.component_within(v, rest);
            count += 1;
        }
        count
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// The S-suspension: a new vertex `n` joined to every vertex outside `s`.
    pub fn s_suspension(&self, s: VertexSet) -> Result<Graph> {
        if s.0 & !low_bits(self.n) != 0 {
            let bad = (s.0 & !low_bits(self.n)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        if let Some((u, v)) = self.first_adjacent_pair(s) {
            return Err(Error::NotIndependent(u, v));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let apex = self.n;
        let joined = low_bits(self.n) & !s.0;
        let mut adj = self.adj.clone();
        for v in BitIter(joined) {
            adj[v] |= 1 << apex;
        }
        adj.push(joined);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Induced subgraph on `w`, relabelled to `0..|w|` in increasing order.
    pub fn induced(&self, w: VertexSet) -> Graph {
        let verts: Vec<usize> = w.iter().filter(|&v| v < self.n).collect();
        let adj = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] >> u & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = BitIter(self.adj[v]).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// `K_{1,k}` for some `k >= 1`: one centre adjacent to everything, nothing else.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edge_count() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// `k >= 1` triangles glued at a single common vertex.
    pub fn is_star_triangle(&self) -> bool {
        if self.n < 3 || self.n.is_multiple_of(2) || self.edge_count() != 3 * (self.n - 1) / 2 {
            return false;
        }
        let Some(centre) = (0..self.n).find(|&v| self.degree(v) == self.n - 1) else {
            return false;
        };
        (0..self.n)
            .filter(|&v| v != centre)
            .all(|v| self.degree(v) == 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ribbon() -> Graph {
        Graph::from_edge_list(5, &[(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (2, 3)]).unwrap()
    }

    fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edge_list(k + 1, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let d1 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(d1.edges(), vec![(0, 1)]);
        let dup = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.edges(), vec![(0, 1)]);
        let r = ribbon();
        assert_eq!(r.edge_count(), 6);
        assert_eq!(r.degree_sequence(), vec![2, 2, 2, 2, 4]);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
    }

    #[test]
    fn connectivity() {
        let d2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!d2.is_connected());
        assert_eq!(d2.component_count(), 2);
        assert!(ribbon().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let d1 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let d2 = d1.disjoint_union(&d1).unwrap();
        assert_eq!(d2.edges(), vec![(0, 1), (2, 3)]);
        let u = ribbon().disjoint_union(&d1).unwrap();
        assert_eq!(u.n(), 7);
        assert_eq!(u.component_count(), 2);
        assert_eq!(
            ribbon().disjoint_union(&Graph::empty(0).unwrap()).unwrap(),
            ribbon()
        );
    }

    #[test]
    fn suspension() {
        let d1 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let p3 = d1.s_suspension(VertexSet::from_vertices([0])).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let d2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let b1 = d2.s_suspension(VertexSet::from_vertices([0, 2])).unwrap();
        assert_eq!(b1.n(), 5);
        assert_eq!(b1.neighbors(4), VertexSet::from_vertices([1, 3]));

        let cone = d2.s_suspension(VertexSet::EMPTY).unwrap();
        assert_eq!(cone.degree(4), 4);

        assert_eq!(
            d2.s_suspension(VertexSet::from_vertices([0, 1])),
            Err(Error::NotIndependent(0, 1))
        );
    }

    #[test]
    fn star_shapes() {
        assert!(star(4).is_star());
        assert!(star(1).is_star());
        assert!(!star(4).is_star_triangle());
        let bowtie = ribbon();
        assert!(bowtie.is_star_triangle());
        assert!(!bowtie.is_star());
        let triangle = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(triangle.is_star_triangle());
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_star() && !c5.is_star_triangle());
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!p4.is_star());
    }

    #[test]
    fn induced_and_permuted() {
        let r = ribbon();
        let tri = r.induced(VertexSet::from_vertices([0, 1, 4]));
        assert_eq!(tri.edge_count(), 3);
        let p = r.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(p.degree(0), 4);
        assert_eq!(p.edge_count(), 6);
    }
}
