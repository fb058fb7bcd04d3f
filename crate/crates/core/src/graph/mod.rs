//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` bitset per vertex, so edge queries are a single
//! bit test and neighbourhood intersections are a popcount.

mod families;
mod io;

pub use families::{
    heawood, line_graph, line_k33, make_circulant, make_complete, make_complete_bipartite, make_cycle,
    make_generalized_petersen, make_lcf, tutte_8cage,
};
pub use io::{decode_edge_list, decode_graph6, encode_edge_list, encode_graph6, parse_graph};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::Perm;

pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// A finite simple graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|u| adj[u] & bit(u) == 0));
        debug_assert!((0..adj.len()).all(|u| bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Self { n: adj.len(), adj }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| bits(self.adj[u] & !((bit(u) << 1).wrapping_sub(1))).map(move |v| (u, v))).collect()
    }

    /// Mask of all vertices.
    #[inline]
    pub(crate) fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        let all = self.all_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    /// True when every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// The image graph `p(G)`: `{p(u), p(v)}` is an edge iff `{u, v}` is.
    pub fn permuted(&self, p: &Perm) -> Graph {
        assert_eq!(p.degree(), self.n, "permutation degree must match vertex count");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[p.image(u)] = p.map_mask(self.adj[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Relabels so that `order[i]` becomes vertex `i`.
    pub fn relabeled_by_order(&self, order: &[usize]) -> Result<Graph> {
        let mut images = vec![usize::MAX; self.n];
        if order.len() != self.n {
            return Err(Error::Precondition("relabeling order must list every vertex".into()));
        }
        for (i, &v) in order.iter().enumerate() {
            if v >= self.n || images[v] != usize::MAX {
                return Err(Error::Precondition("relabeling order is not a permutation".into()));
            }
            images[v] = i;
        }
        Ok(self.permuted(&Perm::from_images(images)?))
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colouring check.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Isomorphism test by comparing canonical forms.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        crate::group::canonical_form(self) == crate::group::canonical_form(other)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A spanning subgraph of a host graph: same vertex set, a subset of its edges.
#[derive(Clone, Debug)]
pub struct SpanningSubgraph<'g> {
    host: &'g Graph,
    graph: Graph,
}

impl<'g> SpanningSubgraph<'g> {
    pub fn new(host: &'g Graph, graph: Graph) -> Result<Self> {
        if !graph.is_subgraph_of(host) {
            return Err(Error::NotSubgraph);
        }
        Ok(Self { host, graph })
    }

    pub fn from_edges<I>(host: &'g Graph, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(host, Graph::from_edges(host.n(), edges)?)
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }
}
