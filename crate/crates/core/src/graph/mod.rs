//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` row per vertex. Graph values are immutable once
//! built; constructors return finished graphs.

mod enumerate;
mod graph6;
pub mod motif;
pub mod small;
mod treewidth;

pub use enumerate::{edge_pair, enumerate_labeled, from_edge_mask, labeled_count, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6};
pub use motif::{count_clique_unions, count_motif, CountMode, MotifCatalog, MotifPattern};
pub use treewidth::treewidth_exact;

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

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

/// Iterator over the set bits of a `u64`, lowest first.
pub(crate) struct Bits(pub u64);

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
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, symmetrising and dropping loops.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in Bits(row & mask & !bit(u)) {
                g.adj[u] |= bit(v);
                g.adj[v] |= bit(u);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{p,q}`: vertices `0..p` on one side, `p..p+q` on the other.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidArgument("complete bipartite parts must be nonempty".into()));
        }
        if p + q > MAX_VERTICES {
            return Err(Error::TooLarge { what: "complete bipartite graph", n: p + q, limit: MAX_VERTICES });
        }
        let left = low_mask(p);
        let right = low_mask(p + q) & !left;
        let mut adj = vec![0; p + q];
        for (v, row) in adj.iter_mut().enumerate() {
            *row = if v < p { right } else { left };
        }
        Ok(Graph { n: p + q, adj })
    }

    /// `K_n` with `t` pairwise disjoint edges `{0,1}, {2,3}, ...` removed.
    pub fn complete_minus_matching(n: usize, t: usize) -> Result<Self> {
        if 2 * t > n {
            return Err(Error::InvalidArgument(format!("cannot remove {t} disjoint edges from K_{n}")));
        }
        let mut g = Graph::complete(n)?;
        for k in 0..t {
            g.adj[2 * k] &= !bit(2 * k + 1);
            g.adj[2 * k + 1] &= !bit(2 * k);
        }
        Ok(g)
    }

    /// Wheel of order `n`: a hub joined to every vertex of `C_{n-1}`.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidArgument(format!("wheel needs n >= 4, got {n}")));
        }
        let rim = n - 1;
        let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        edges.extend((0..rim).map(|i| (i, rim)));
        Graph::from_edges(n, &edges)
    }

    /// Vertex-disjoint union of complete graphs of the given orders.
    pub fn clique_union(orders: &[usize]) -> Result<Self> {
        let n: usize = orders.iter().sum();
        let mut g = Graph::empty(n)?;
        let mut start = 0;
        for &k in orders {
            let block = low_mask(start + k) & !low_mask(start);
            for v in start..start + k {
                g.adj[v] = block & !bit(v);
            }
            start += k;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in graph6 (column-major) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for v in 1..self.n {
            for u in Bits(self.adj[v] & low_mask(v)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled in increasing order.
    pub fn induced(&self, vertices: u64) -> Graph {
        let verts: Vec<usize> = Bits(vertices & self.vertex_mask()).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { n: verts.len(), adj }
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in Bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn with_edge_removed(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g
    }

    pub fn with_edge_added(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        g
    }

    /// Removes vertex `v`; higher labels shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep = self.vertex_mask() & !bit(v);
        self.induced(keep)
    }

    /// Identifies `v` into `u` (parallel edges collapse), then drops `v`.
    pub fn contract(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        let merged = (g.adj[u] | g.adj[v]) & !bit(u) & !bit(v);
        for w in Bits(g.adj[v]) {
            g.adj[w] &= !bit(v);
        }
        g.adj[v] = 0;
        g.adj[u] = merged;
        for w in Bits(merged) {
            g.adj[w] |= bit(u);
        }
        g.without_vertex(v)
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(bit(s), self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Closure of `start` under adjacency, restricted to `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(1, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.n
    }

    pub fn is_clique(&self, set: u64) -> bool {
        Bits(set).all(|v| self.adj[v] & set == set & !bit(v))
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in Bits(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = write_graph6(self).map_err(serde::ser::Error::custom)?;
        s.serialize_str(&text)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let comp = c4.complement();
        assert_eq!(comp.size(), 2);
        assert!(comp.edges().iter().all(|&(u, v)| !c4.has_edge(u, v)));
        assert_eq!(comp.components().len(), 2);

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());

        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let comp = k23.complement();
        assert_eq!(comp, Graph::clique_union(&[2, 3]).unwrap());
    }

    #[test]
    fn bipartite_constructor() {
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.size(), 4);
        assert!((0..4).all(|v| k22.degree(v) == 2));
        assert!(k22.is_connected());
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().size(), 6);
        let star = Graph::complete_bipartite(1, 5).unwrap();
        assert_eq!(star.degree(0), 5);
        assert!(star.is_forest());
        assert!(Graph::complete_bipartite(40, 30).is_err());
    }

    #[test]
    fn complete_minus_matching_examples() {
        let g = Graph::complete_minus_matching(4, 2).unwrap();
        assert_eq!(g.size(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(Graph::complete_minus_matching(5, 2).unwrap().size(), 8);
        assert_eq!(Graph::complete_minus_matching(6, 0).unwrap(), Graph::complete(6).unwrap());
        assert!(Graph::complete_minus_matching(5, 3).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::cycle(5).unwrap().girth(), Some(5));
        assert_eq!(Graph::complete(4).unwrap().girth(), Some(3));
        assert_eq!(Graph::path(6).unwrap().girth(), None);
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().girth(), Some(4));
        assert_eq!(Graph::empty(0).unwrap().girth(), None);
    }

    #[test]
    fn contraction_collapses_parallel_edges() {
        let k3 = Graph::complete(3).unwrap();
        let c = k3.contract(0, 1);
        assert_eq!(c.order(), 2);
        assert_eq!(c.size(), 1);
    }

    #[test]
    fn complement_involution_and_edge_total() {
        for g in enumerate_labeled(5).unwrap() {
            assert_eq!(g.complement().complement(), g);
            assert_eq!(g.size() + g.complement().size(), 10);
        }
    }
}
