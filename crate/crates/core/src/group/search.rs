//! Individualization-refinement search over ordered vertex partitions.
//!
//! The first path of the search tree fixes a base `v_0, v_1, ...`. For each
//! level `i`, deepest first, we look for automorphisms fixing `v_0..v_{i-1}`
//! that send `v_i` to every other vertex of its target cell. Those found form
//! a transversal of the stabilizer chain, so the group order is the product
//! of the basic orbit sizes and the union of the transversals generates
//! `A(G)`. The canonical form is the least relabeled adjacency matrix over
//! all leaves, with first-path children pruned by the stabilizer orbits.

use crate::graph::{bit, bits, Graph};

use super::Perm;

/// An ordered partition, one mask per cell.
type Cells = Vec<u64>;

fn is_discrete(cells: &Cells, n: usize) -> bool {
    cells.len() == n
}

/// Refine to the coarsest equitable partition finer than `cells`. Splits
/// depend only on neighbour counts and the current cell order, so the result
/// commutes with relabeling.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            let mut split_here = false;
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in bits(cell) {
                    let c = (g.neighbors_mask(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() > 1 {
                    split_here = true;
                    groups.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(groups.into_iter().map(|(_, m)| m));
            }
            cells = next;
            changed |= split_here;
            s += 1;
        }
        if !changed || cells.len() == n {
            return cells;
        }
    }
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(bit(v));
    out.push(cells[target] & !bit(v));
    out.extend_from_slice(&cells[target + 1..]);
    out
}

/// First smallest non-singleton cell.
fn target_cell(cells: &Cells) -> usize {
    let mut best = usize::MAX;
    let mut best_size = u32::MAX;
    for (i, c) in cells.iter().enumerate() {
        let size = c.count_ones();
        if size > 1 && size < best_size {
            best = i;
            best_size = size;
        }
    }
    best
}

fn same_shape(a: &Cells, b: &Cells) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.count_ones() == y.count_ones())
}

fn leaf_order(cells: &Cells) -> Vec<usize> {
    cells.iter().map(|c| c.trailing_zeros() as usize).collect()
}

/// Adjacency rows of `g` relabeled so that `order[i]` becomes vertex `i`.
fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().map(|&v| bits(g.neighbors_mask(v)).fold(0u64, |acc, w| acc | bit(pos[w]))).collect()
}

struct Level {
    cells: Cells,
    target: usize,
    chosen: usize,
}

pub(crate) struct AutSearch<'g> {
    g: &'g Graph,
    path: Vec<Level>,
    leaf: Vec<usize>,
    /// Transversal representatives found at each level; every element of
    /// `reps[i]` fixes the base points `v_0..v_{i-1}`.
    reps: Vec<Vec<Perm>>,
    orbit_sizes: Vec<usize>,
}

impl<'g> AutSearch<'g> {
    pub(crate) fn run(g: &'g Graph) -> Self {
        let n = g.n();
        let mut cells = refine(g, vec![g.all_mask()]);
        let mut path = Vec::new();
        while !is_discrete(&cells, n) {
            let target = target_cell(&cells);
            let chosen = cells[target].trailing_zeros() as usize;
            let next = refine(g, individualize(&cells, target, chosen));
            path.push(Level { cells, target, chosen });
            cells = next;
        }
        let leaf = leaf_order(&cells);
        let depth = path.len();
        let mut search = Self { g, path, leaf, reps: vec![Vec::new(); depth], orbit_sizes: vec![1; depth] };
        search.build_chain();
        search
    }

    fn build_chain(&mut self) {
        let mut known: Vec<Perm> = Vec::new();
        for i in (0..self.path.len()).rev() {
            let base = self.path[i].chosen;
            let cell = self.path[i].cells[self.path[i].target];
            let mut orbit = orbit_mask(base, &known);
            for w in bits(cell) {
                if orbit & bit(w) != 0 {
                    continue;
                }
                if let Some(p) = self.find_mapping(i, w) {
                    known.push(p.clone());
                    self.reps[i].push(p);
                    orbit = orbit_mask(base, &known);
                }
            }
            self.orbit_sizes[i] = orbit.count_ones() as usize;
        }
    }

    /// Search for an automorphism fixing the base points before level `i`
    /// and sending the level-`i` base point to `w`.
    fn find_mapping(&self, i: usize, w: usize) -> Option<Perm> {
        let level = &self.path[i];
        let cells = refine(self.g, individualize(&level.cells, level.target, w));
        self.dfs_match(cells, i + 1)
    }

    fn dfs_match(&self, cells: Cells, depth: usize) -> Option<Perm> {
        if depth == self.path.len() {
            if !is_discrete(&cells, self.g.n()) {
                return None;
            }
            return self.leaf_automorphism(&leaf_order(&cells));
        }
        let level = &self.path[depth];
        if !same_shape(&cells, &level.cells) {
            return None;
        }
        for u in bits(cells[level.target]) {
            let child = refine(self.g, individualize(&cells, level.target, u));
            if let Some(p) = self.dfs_match(child, depth + 1) {
                return Some(p);
            }
        }
        None
    }

    fn leaf_automorphism(&self, other: &[usize]) -> Option<Perm> {
        let mut images = vec![0usize; self.g.n()];
        for (&a, &b) in self.leaf.iter().zip(other) {
            images[a] = b;
        }
        let p = Perm::from_images(images).expect("leaf orders are bijections");
        p.preserves(self.g).then_some(p)
    }

    pub(crate) fn generators(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = self.reps.iter().flatten().cloned().collect();
        gens.sort();
        gens.dedup();
        gens
    }

    pub(crate) fn order(&self) -> Option<u128> {
        self.orbit_sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
    }

    /// Least relabeled adjacency matrix over the search tree, with the
    /// labeling (`order[i]` becomes vertex `i`) that attains it.
    pub(crate) fn canonical(&self) -> (Vec<u64>, Vec<usize>) {
        let root = refine(self.g, vec![self.g.all_mask()]);
        let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
        self.dfs_canon(root, 0, true, &mut best);
        best.expect("search tree has at least one leaf")
    }

    fn dfs_canon(&self, cells: Cells, depth: usize, on_path: bool, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let n = self.g.n();
        if is_discrete(&cells, n) {
            let order = leaf_order(&cells);
            let rows = leaf_rows(self.g, &order);
            if best.as_ref().is_none_or(|(b, _)| rows < *b) {
                *best = Some((rows, order));
            }
            return;
        }
        let target = target_cell(&cells);
        let mut candidates = cells[target];
        if on_path {
            // Children in one orbit of the pointwise stabilizer of the
            // current prefix have isomorphic subtrees; keep one of each.
            let stab: Vec<Perm> = self.reps[depth..].iter().flatten().cloned().collect();
            let mut reps_mask = 0u64;
            let mut covered = 0u64;
            for w in bits(candidates) {
                if covered & bit(w) == 0 {
                    reps_mask |= bit(w);
                    covered |= orbit_mask(w, &stab);
                }
            }
            candidates = reps_mask;
        }
        for w in bits(candidates) {
            let child = refine(self.g, individualize(&cells, target, w));
            let stays = on_path && depth < self.path.len() && w == self.path[depth].chosen;
            self.dfs_canon(child, depth + 1, stays, best);
        }
    }
}

/// Orbit of `v` under the group generated by `gens`, as a mask.
pub(crate) fn orbit_mask(v: usize, gens: &[Perm]) -> u64 {
    let mut orbit = bit(v);
    let mut frontier = orbit;
    while frontier != 0 {
        let mut next = 0u64;
        for x in bits(frontier) {
            for g in gens {
                next |= bit(g.image(x));
            }
        }
        frontier = next & !orbit;
        orbit |= next;
    }
    orbit
}
