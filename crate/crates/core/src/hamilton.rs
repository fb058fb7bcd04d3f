//! Exact enumeration of Hamiltonian cycles.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// A Hamiltonian cycle of a host graph, stored in canonical cyclic order
/// (starting at vertex 0, second vertex smaller than the last) together with
/// its edge set as a spanning subgraph.
#[derive(Clone)]
pub struct HamCycle<'g> {
    host: &'g Graph,
    order: Vec<usize>,
    edges: Graph,
}

impl<'g> HamCycle<'g> {
    /// Validates `order` as a Hamiltonian cycle of `host` and canonicalizes it.
    pub fn new(host: &'g Graph, order: Vec<usize>) -> Result<Self> {
        let n = host.n();
        if n < 3 || order.len() != n {
            return Err(Error::NotHamiltonian(format!("expected {n} vertices, got {}", order.len())));
        }
        let mut seen = 0u64;
        for &v in &order {
            if v >= n || seen & bit(v) != 0 {
                return Err(Error::NotHamiltonian(format!("vertex {v} repeated or out of range")));
            }
            seen |= bit(v);
        }
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            if !host.has_edge(u, v) {
                return Err(Error::NotHamiltonian(format!("{u}-{v} is not an edge of the host")));
            }
        }
        Ok(Self::from_valid(host, order))
    }

    fn from_valid(host: &'g Graph, mut order: Vec<usize>) -> Self {
        let n = order.len();
        let start = order.iter().position(|&v| v == 0).expect("cycle covers vertex 0");
        order.rotate_left(start);
        if order[1] > order[n - 1] {
            order[1..].reverse();
        }
        let edges =
            Graph::from_edges(n, (0..n).map(|i| (order[i], order[(i + 1) % n]))).expect("cycle edges are simple");
        Self { host, order, edges }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The cycle as a spanning subgraph of the host.
    pub fn edges(&self) -> &Graph {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn same_host(&self, other: &HamCycle<'_>) -> bool {
        std::ptr::eq(self.host, other.host) || self.host == other.host
    }
}

impl PartialEq for HamCycle<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.same_host(other)
    }
}

impl Eq for HamCycle<'_> {}

impl fmt::Display for HamCycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HamCycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HamCycle({self})")
    }
}

/// Backtracking search for Hamiltonian cycles rooted at vertex 0.
///
/// Each cycle is reported once: the search fixes vertex 0 as the start and
/// only accepts a completed path whose second vertex is smaller than its last.
#[derive(Clone, Copy, Debug)]
pub struct HamiltonSearch {
    /// Run the connectivity cut every this many levels (1 = every level,
    /// 0 = never). Affects speed only.
    pub connectivity_every: usize,
}

impl Default for HamiltonSearch {
    fn default() -> Self {
        Self { connectivity_every: 1 }
    }
}

struct State<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    unvisited: u64,
    /// Neighbours of 0 that may still close the cycle (greater than path[1]).
    closers: u64,
}

impl HamiltonSearch {
    /// Calls `visit` with each Hamiltonian cycle's vertex order (rooted at 0,
    /// `order[1] < order[n-1]`). Stops early on `ControlFlow::Break`.
    pub fn for_each<F>(&self, g: &Graph, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = g.n();
        if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
            return;
        }
        let mut st = State { g, path: Vec::with_capacity(n), unvisited: g.all_mask() & !1, closers: 0 };
        st.path.push(0);
        for second in g.neighbors(0) {
            let closers = g.neighbors_mask(0) & !((bit(second) << 1).wrapping_sub(1));
            if closers == 0 {
                continue;
            }
            st.closers = closers;
            st.path.push(second);
            st.unvisited &= !bit(second);
            let flow = self.extend(&mut st, &mut visit);
            st.unvisited |= bit(second);
            st.path.pop();
            if flow.is_break() {
                return;
            }
        }
    }

    fn extend<F>(&self, st: &mut State<'_>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let g = st.g;
        let end = *st.path.last().expect("path is nonempty");
        if st.unvisited == 0 {
            if st.closers & bit(end) != 0 {
                return visit(&st.path);
            }
            return ControlFlow::Continue(());
        }
        if st.closers & st.unvisited == 0 {
            return ControlFlow::Continue(());
        }
        // Every unvisited vertex still needs two usable cycle neighbours.
        let usable = st.unvisited | bit(end) | 1;
        for u in bits(st.unvisited) {
            if (g.neighbors_mask(u) & usable).count_ones() < 2 {
                return ControlFlow::Continue(());
            }
        }
        if self.connectivity_every > 0
            && st.path.len().is_multiple_of(self.connectivity_every)
            && !reachable(g, end, st.unvisited)
        {
            return ControlFlow::Continue(());
        }
        for next in bits(g.neighbors_mask(end) & st.unvisited) {
            st.path.push(next);
            st.unvisited &= !bit(next);
            let flow = self.extend(st, visit);
            st.unvisited |= bit(next);
            st.path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// True when every vertex of `rest` is reachable from `from` inside `rest`.
fn reachable(g: &Graph, from: usize, rest: u64) -> bool {
    let mut seen = 0u64;
    let mut frontier = g.neighbors_mask(from) & rest;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbors_mask(v);
        }
        frontier = next & rest & !seen;
    }
    seen == rest
}

/// Every Hamiltonian cycle of `g`, once each, sorted by canonical order.
pub fn enumerate_hamiltonian_cycles(g: &Graph) -> Vec<HamCycle<'_>> {
    enumerate_with(g, HamiltonSearch::default())
}

pub fn enumerate_with(g: &Graph, search: HamiltonSearch) -> Vec<HamCycle<'_>> {
    let mut out = Vec::new();
    search.for_each(g, |order| {
        out.push(HamCycle::from_valid(g, order.to_vec()));
        ControlFlow::Continue(())
    });
    out.sort_by(|a, b| a.order.cmp(&b.order));
    out
}

pub fn count_hamiltonian_cycles(g: &Graph) -> u64 {
    let mut count = 0;
    HamiltonSearch::default().for_each(g, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    let mut found = false;
    HamiltonSearch::default().for_each(g, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// Length in edges of a longest path common to both cycles; `n` when the
/// cycles coincide.
pub fn longest_common_path(a: &HamCycle<'_>, b: &HamCycle<'_>) -> Result<usize> {
    if !a.same_host(b) {
        return Err(Error::HostMismatch);
    }
    let n = a.len();
    if a.edges == b.edges {
        return Ok(n);
    }
    let common: Vec<bool> = (0..n).map(|i| a.edges.has_edge(b.order[i], b.order[(i + 1) % n])).collect();
    // Start scanning just after an edge of `b` that `a` lacks, so runs do
    // not wrap around.
    let start = common.iter().position(|&c| !c).expect("distinct cycles differ in an edge");
    let mut best = 0;
    let mut run = 0;
    for step in 1..=n {
        if common[(start + step) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Ok(best)
}

/// Histogram of `longest_common_path(C0, c)` over all Hamiltonian cycles `C0`.
pub fn p_distribution(g: &Graph, c: &HamCycle<'_>) -> Result<BTreeMap<usize, usize>> {
    if c.host != g {
        return Err(Error::HostMismatch);
    }
    let mut hist = BTreeMap::new();
    for c0 in enumerate_hamiltonian_cycles(g) {
        *hist.entry(longest_common_path(&c0, c)?).or_insert(0) += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        heawood, make_complete, make_complete_bipartite, make_cycle, make_generalized_petersen, tutte_8cage,
    };
    use crate::group::Perm;
    use itertools::Itertools;
    use rand::{seq::SliceRandom, SeedableRng};
    use std::collections::HashSet;

    /// Distinct Hamiltonian edge sets by trying every cyclic order.
    fn brute_force_count(g: &Graph) -> usize {
        let n = g.n();
        let mut seen = HashSet::new();
        for rest in (1..n).permutations(n - 1) {
            let order: Vec<usize> = std::iter::once(0).chain(rest).collect();
            if (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) {
                seen.insert(HamCycle::from_valid(g, order).edges);
            }
        }
        seen.len()
    }

    fn rim_cycle(h: &Graph) -> HamCycle<'_> {
        HamCycle::new(h, (0..h.n()).collect()).unwrap()
    }

    #[test]
    fn known_cycle_counts() {
        assert_eq!(count_hamiltonian_cycles(&heawood()), 24);
        assert_eq!(count_hamiltonian_cycles(&make_generalized_petersen(10, 2).unwrap()), 30);
        assert_eq!(count_hamiltonian_cycles(&tutte_8cage()), 144);
    }

    #[test]
    fn small_counts() {
        assert!(!is_hamiltonian(&make_generalized_petersen(5, 2).unwrap()));
        assert_eq!(count_hamiltonian_cycles(&make_complete(4).unwrap()), 3);
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert_eq!(count_hamiltonian_cycles(&k33), 6);
        assert_eq!(brute_force_count(&k33), 6);
        for n in 3..=7u64 {
            let expected = (1..n).product::<u64>() / 2;
            assert_eq!(count_hamiltonian_cycles(&make_complete(n as usize).unwrap()), expected);
        }
        assert_eq!(count_hamiltonian_cycles(&make_complete(2).unwrap()), 0);
        assert_eq!(count_hamiltonian_cycles(&Graph::empty(1).unwrap()), 0);
    }

    #[test]
    fn cycles_are_valid_and_canonical() {
        let h = heawood();
        let cycles = enumerate_hamiltonian_cycles(&h);
        let mut edge_sets = HashSet::new();
        for c in &cycles {
            let o = c.order();
            assert_eq!(o[0], 0);
            assert!(o[1] < o[o.len() - 1]);
            assert_eq!(HamCycle::new(&h, o.to_vec()).unwrap(), *c);
            assert!(c.edges().is_connected() && c.edges().regular_degree() == Some(2));
            assert!(c.edges().is_subgraph_of(&h));
            edge_sets.insert(c.edges().clone());
        }
        assert_eq!(edge_sets.len(), cycles.len());
        assert!(cycles.windows(2).all(|w| w[0].order() < w[1].order()));
    }

    #[test]
    fn matches_brute_force_and_pruning_settings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = 3 + trial % 6;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rand::Rng::gen_bool(&mut rng, 0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let expected = brute_force_count(&g);
            for every in [0, 1, 3] {
                let found = enumerate_with(&g, HamiltonSearch { connectivity_every: every });
                assert_eq!(found.len(), expected, "{g:?} every={every}");
            }
        }
        let g = make_generalized_petersen(12, 2).unwrap();
        let a: Vec<_> = enumerate_with(&g, HamiltonSearch { connectivity_every: 0 });
        let b: Vec<_> = enumerate_with(&g, HamiltonSearch { connectivity_every: 4 });
        assert_eq!(a, b);
    }

    #[test]
    fn count_invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for g in [heawood(), make_generalized_petersen(10, 2).unwrap(), make_generalized_petersen(7, 2).unwrap()] {
            let base = count_hamiltonian_cycles(&g);
            for _ in 0..20 {
                let mut v: Vec<usize> = (0..g.n()).collect();
                v.shuffle(&mut rng);
                let h = g.permuted(&Perm::from_images(v).unwrap());
                assert_eq!(count_hamiltonian_cycles(&h), base);
            }
        }
    }

    #[test]
    fn rejects_non_cycles() {
        let h = heawood();
        assert!(HamCycle::new(&h, (0..13).collect()).is_err());
        assert!(HamCycle::new(&h, vec![0, 5, 4, 3, 2, 1, 6, 7, 8, 9, 10, 11, 12, 13]).is_err());
        let mut dup: Vec<usize> = (0..14).collect();
        dup[3] = 2;
        assert!(HamCycle::new(&h, dup).is_err());
    }

    #[test]
    fn common_path_examples() {
        let h = heawood();
        let c = rim_cycle(&h);
        let c0 = HamCycle::new(&h, vec![0, 1, 10, 11, 6, 7, 2, 3, 12, 13, 8, 9, 4, 5]).unwrap();
        assert_eq!(longest_common_path(&c0, &c).unwrap(), 1);
        assert_eq!(longest_common_path(&c, &c).unwrap(), 14);
        let c14 = make_cycle(14).unwrap();
        let only = rim_cycle(&c14);
        assert_eq!(longest_common_path(&only, &only).unwrap(), 14);
        assert_eq!(longest_common_path(&c, &only).unwrap_err(), Error::HostMismatch);

        // K5 decomposes into two edge-disjoint Hamiltonian cycles.
        let k5 = make_complete(5).unwrap();
        let a = HamCycle::new(&k5, vec![0, 1, 2, 3, 4]).unwrap();
        let b = HamCycle::new(&k5, vec![0, 2, 4, 1, 3]).unwrap();
        assert_eq!(longest_common_path(&a, &b).unwrap(), 0);
    }

    #[test]
    fn p_distribution_examples() {
        let h = heawood();
        let dist = p_distribution(&h, &rim_cycle(&h)).unwrap();
        assert_eq!(dist, BTreeMap::from([(1, 2), (2, 7), (3, 7), (4, 7), (14, 1)]));

        let c9 = make_cycle(9).unwrap();
        assert_eq!(p_distribution(&c9, &rim_cycle(&c9)).unwrap(), BTreeMap::from([(9, 1)]));

        let k4 = make_complete(4).unwrap();
        let dist = p_distribution(&k4, &rim_cycle(&k4)).unwrap();
        assert_eq!(dist.values().sum::<usize>(), 3);
        assert_eq!(dist.get(&4), Some(&1));
        // The other two 4-cycles of K4 each share two opposite edges with the rim.
        assert_eq!(dist, BTreeMap::from([(1, 2), (4, 1)]));
    }
}
