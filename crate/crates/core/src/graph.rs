//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbour mask per vertex.
//!
//! Values are immutable: every operation returns a fresh [`Graph`]. Labels are
//! always dense `0..n`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count the bit-row representation supports.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
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

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A subset of `0..64`, used for branch sets and block slices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// The contiguous range `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(low_mask(end) & !low_mask(start))
    }

    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph with symmetric, irreflexive bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds bit-row limit"
        );
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = low_mask(n);
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0);
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[cfg(test)]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Union of the neighbourhoods of `s`, minus `s` itself.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s {
            acc |= self.rows[v];
        }
        VertexSet(acc & !s.0)
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.rows[v] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// True iff some edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().any(|v| self.rows[v] & b.0 != 0)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        Graph {
            n: self.n,
            rows: (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect(),
        }
    }

    /// Subgraph induced by `s`, relabelled densely in ascending label order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Contracts edge `uv`. The merged vertex takes label `min(u, v)` and
    /// labels above `max(u, v)` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfContraction(u));
        }
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |w: usize| match w.cmp(&hi) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => w - 1,
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (x, y) = (relabel(a), relabel(b));
            if x != y {
                g.set_edge(x, y);
            }
        }
        Ok(g)
    }

    /// Whether `s` induces a connected subgraph.
    pub fn is_connected(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        match s.first() {
            None => Err(Error::EmptySet),
            Some(v) => Ok(self.reach(v, s) == s),
        }
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & within.0 & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
    }

    #[test]
    fn complement_is_involution_on_p4() {
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn complement_of_c5_is_pentagram() {
        let pentagram = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5().complement(), pentagram);
    }

    #[test]
    fn induced_examples() {
        let s = VertexSet::from_iter([0, 1, 2]);
        assert_eq!(Graph::complete(5).induced(s).unwrap(), Graph::complete(3));
        assert_eq!(c5().induced(s).unwrap(), Graph::path(3));
        assert_eq!(c5().induced(c5().vertices()).unwrap(), c5());
        assert!(matches!(
            c5().induced(VertexSet::from_iter([7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn contract_examples() {
        for (u, v) in c5().edges() {
            assert_eq!(c5().contract(u, v).unwrap().edge_count(), 4);
            let c = c5().contract(v, u).unwrap();
            assert_eq!(c.degrees(), vec![2; 4]);
        }
        let k4 = Graph::complete(4);
        for (u, v) in k4.edges() {
            assert_eq!(k4.contract(u, v).unwrap(), Graph::complete(3));
        }
        let twice = c5().contract(0, 1).unwrap().contract(0, 1).unwrap();
        assert_eq!(twice, Graph::complete(3));
    }

    #[test]
    fn contract_relabels_by_min_slot() {
        // path 0-1-2-3-4, contract 1-3 is illegal, contract 2-3 keeps 0,1 and
        // merges into slot 2; old 4 becomes 3.
        let p = Graph::path(5);
        assert!(matches!(p.contract(1, 3), Err(Error::NotAnEdge { .. })));
        assert!(matches!(p.contract(2, 2), Err(Error::SelfContraction(2))));
        assert_eq!(p.contract(3, 2).unwrap(), Graph::path(4));
        let star = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        let c = star.contract(4, 1).unwrap();
        assert_eq!(c, Graph::from_edges(4, &[(1, 0), (1, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn connectivity_examples() {
        assert!(c5().is_connected(c5().vertices()).unwrap());
        assert!(!Graph::empty(3)
            .is_connected(VertexSet::from_iter([0, 1]))
            .unwrap());
        assert!(!Graph::path(4)
            .is_connected(VertexSet::from_iter([0, 3]))
            .unwrap());
        assert_eq!(c5().is_connected(VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn components_and_neighborhood() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(
            comps,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([2, 3, 4]),
                VertexSet::from_iter([5])
            ]
        );
        assert_eq!(
            g.neighborhood(VertexSet::from_iter([2, 3])),
            VertexSet::from_iter([4])
        );
        assert_eq!(g.edges_within(VertexSet::from_iter([2, 3, 4])), 2);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
    }
}
