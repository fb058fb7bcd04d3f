//! Subgraph counts, similarity counts, extension counts and the fixing
//! predicates, plus their specialisation to Hamiltonian cycles.
//!
//! For a spanning subgraph `U` of `G`:
//!
//! * `s(U;G)`: spanning subgraphs of `G` isomorphic to `U`;
//! * `s0(U;G) = |A(G)| / |A(U) ∩ A(G)|`: images of `U` under `A(G)`;
//! * `x(U;G)`: graphs `X ≅ G` on the same vertex set with `U ⊆ X`.
//!
//! They satisfy `|A(U)| s = |A(G)| x` and `s >= s0`. `U` is fixing when
//! `s = s0` and strong fixing when, in addition, `A(U) ⊆ A(G)`.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, encode_graph6, Graph};
use crate::group::{canonical_form, Perm, PermutationGroup};
use crate::hamilton::{count_hamiltonian_cycles, enumerate_hamiltonian_cycles, HamCycle};

/// Largest vertex count for which general (non-cycle) subgraphs are
/// counted, and for which the `n!` oracles run.
pub const GENERAL_MAX_VERTICES: usize = 8;

fn check_same_order(u: &Graph, g: &Graph) -> Result<()> {
    if u.n() != g.n() {
        return Err(Error::DegreeMismatch(u.n(), g.n()));
    }
    Ok(())
}

fn is_spanning_cycle(u: &Graph) -> bool {
    u.n() >= 3 && u.regular_degree() == Some(2) && u.is_connected()
}

fn aut_order(g: &Graph) -> Result<u128> {
    Ok(PermutationGroup::automorphism_group(g)?.order())
}

/// Number of bijections `f` with `f(E(U)) ⊆ E(G)`.
fn count_embeddings(u: &Graph, g: &Graph) -> u128 {
    let n = u.n();
    // Place vertices of U so each one (after the first of its component)
    // already has a placed neighbour.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((u.neighbors_mask(v) & placed).count_ones(), u.degree(v), usize::MAX - v))
            .expect("unplaced vertex exists");
        order.push(next);
        placed |= bit(next);
    }
    let mut image = vec![usize::MAX; n];
    fn go(u: &Graph, g: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> u128 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut candidates = g.all_mask() & !used;
        for w in bits(u.neighbors_mask(v)) {
            if image[w] != usize::MAX {
                candidates &= g.neighbors_mask(image[w]);
            }
        }
        let mut total = 0;
        for c in bits(candidates) {
            if g.degree(c) < u.degree(v) {
                continue;
            }
            image[v] = c;
            total += go(u, g, order, depth + 1, image, used | bit(c));
            image[v] = usize::MAX;
        }
        total
    }
    go(u, g, &order, 0, &mut image, 0)
}

/// `s(U;G)`. Spanning cycles are counted by Hamiltonian enumeration at any
/// size; other shapes by counting embeddings, up to
/// [`GENERAL_MAX_VERTICES`] vertices.
pub fn spanning_subgraph_count(u: &Graph, g: &Graph) -> Result<u128> {
    check_same_order(u, g)?;
    if u.edge_count() > g.edge_count() {
        return Ok(0);
    }
    if u.edge_count() == g.edge_count() {
        return Ok(u.is_isomorphic(g) as u128);
    }
    if is_spanning_cycle(u) {
        return Ok(count_hamiltonian_cycles(g) as u128);
    }
    if u.n() > GENERAL_MAX_VERTICES {
        return Err(Error::Regime(format!(
            "general subgraph counting is limited to {GENERAL_MAX_VERTICES} vertices, got {}",
            u.n()
        )));
    }
    let aut_u = aut_order(u)?;
    let embeddings = count_embeddings(u, g);
    debug_assert_eq!(embeddings % aut_u, 0);
    Ok(embeddings / aut_u)
}

/// `s0(U;G) = |A(G)| / |A(U) ∩ A(G)|`.
pub fn similarity_count(u: &Graph, g: &Graph) -> Result<u128> {
    check_same_order(u, g)?;
    let a = PermutationGroup::automorphism_group(g)?;
    Ok(a.order() / a.stabilizer_order(u)?)
}

/// `x(U;G) = |A(U)| s(U;G) / |A(G)|`, with the division checked to be exact.
pub fn extension_count(u: &Graph, g: &Graph) -> Result<u128> {
    let s = spanning_subgraph_count(u, g)?;
    extension_from_counts(aut_order(u)?, s, aut_order(g)?)
}

fn extension_from_counts(aut_u: u128, s: u128, aut_g: u128) -> Result<u128> {
    let numerator = aut_u.checked_mul(s).ok_or(Error::OrderOverflow)?;
    if numerator % aut_g != 0 {
        return Err(Error::NonIntegral { numerator, denominator: aut_g });
    }
    Ok(numerator / aut_g)
}

fn all_permutations(n: usize) -> impl Iterator<Item = Perm> {
    (0..n).permutations(n).map(|v| Perm::from_images(v).expect("permutation"))
}

fn require_small(n: usize, what: &str) -> Result<()> {
    if n > GENERAL_MAX_VERTICES {
        return Err(Error::Regime(format!("{what} scans n! permutations; limited to {GENERAL_MAX_VERTICES} vertices")));
    }
    Ok(())
}

/// Oracle for `s(U;G)`: distinct images `π(U)` contained in `G` over all
/// `n!` permutations.
pub fn spanning_count_direct(u: &Graph, g: &Graph) -> Result<u128> {
    check_same_order(u, g)?;
    require_small(u.n(), "spanning_count_direct")?;
    let images: HashSet<Graph> =
        all_permutations(u.n()).map(|p| u.permuted(&p)).filter(|x| x.is_subgraph_of(g)).collect();
    Ok(images.len() as u128)
}

/// Oracle for `x(U;G)`: distinct graphs `X ≅ G` containing `U`.
///
/// Small graphs are handled by scanning all `σ(G)`. A spanning cycle inside
/// a cubic graph is handled by searching all chord completions of the cycle
/// to a cubic graph, pruned by girth and bipartiteness, and keeping those
/// isomorphic to `G`.
pub fn extension_count_direct(u: &Graph, g: &Graph) -> Result<u128> {
    check_same_order(u, g)?;
    if u.n() <= GENERAL_MAX_VERTICES {
        let images: HashSet<Graph> =
            all_permutations(g.n()).map(|p| g.permuted(&p)).filter(|x| u.is_subgraph_of(x)).collect();
        return Ok(images.len() as u128);
    }
    if is_spanning_cycle(u) && g.regular_degree() == Some(3) {
        return Ok(chord_completions(u, g));
    }
    Err(Error::Regime(format!(
        "direct extension search needs n <= {GENERAL_MAX_VERTICES} or a spanning cycle in a cubic graph"
    )))
}

fn chord_completions(cycle: &Graph, g: &Graph) -> u128 {
    let n = g.n();
    let girth = g.girth().unwrap_or(usize::MAX);
    let bipartite = g.is_bipartite();
    // Position along the cycle, for the bipartite parity test.
    let mut pos = vec![0usize; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for i in 0..n {
        pos[cur] = i;
        let next = bits(cycle.neighbors_mask(cur)).find(|&w| w != prev).expect("cycle vertex has two neighbours");
        prev = cur;
        cur = next;
    }
    let target = canonical_form(g);
    let mut x = cycle.clone();
    let mut count = 0;
    fn dist_at_least(x: &Graph, a: usize, b: usize, limit: usize) -> bool {
        // true when dist(a, b) >= limit
        let mut seen = bit(a);
        let mut frontier = bit(a);
        for _ in 1..limit {
            let mut next = 0;
            for v in bits(frontier) {
                next |= x.neighbors_mask(v);
            }
            frontier = next & !seen;
            if frontier & bit(b) != 0 {
                return false;
            }
            seen |= frontier;
            if frontier == 0 {
                break;
            }
        }
        true
    }
    fn go(
        x: &mut Graph,
        target: &crate::group::CanonicalForm,
        pos: &[usize],
        girth: usize,
        bipartite: bool,
        count: &mut u128,
    ) {
        let n = x.n();
        let Some(v) = (0..n).find(|&v| x.degree(v) == 2) else {
            if canonical_form(x) == *target {
                *count += 1;
            }
            return;
        };
        for w in v + 1..n {
            if x.degree(w) != 2 || x.has_edge(v, w) {
                continue;
            }
            if bipartite && (pos[v] + pos[w]).is_multiple_of(2) {
                continue;
            }
            if girth != usize::MAX && !dist_at_least(x, v, w, girth - 1) {
                continue;
            }
            x.insert_edge(v, w).expect("fresh chord");
            go(x, target, pos, girth, bipartite, count);
            x.remove_edge(v, w);
        }
    }
    go(&mut x, &target, &pos, girth, bipartite, &mut count);
    count
}

/// All quantities of the fixing calculus for one pair `(U, G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FixingReport {
    /// `G` in graph6.
    pub graph: String,
    pub s: u128,
    pub s0: u128,
    pub x: u128,
    pub aut_g: u128,
    pub aut_u: u128,
    pub stab: u128,
    pub fixing: bool,
    pub strong_fixing: bool,
}

pub fn fixing_report(u: &Graph, g: &Graph) -> Result<FixingReport> {
    check_same_order(u, g)?;
    if !u.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    let a_g = PermutationGroup::automorphism_group(g)?;
    let aut_g = a_g.order();
    let aut_u = aut_order(u)?;
    let stab = a_g.stabilizer_order(u)?;
    let s = spanning_subgraph_count(u, g)?;
    let s0 = aut_g / stab;
    let x = extension_from_counts(aut_u, s, aut_g)?;
    let fixing = s == s0;
    Ok(FixingReport {
        graph: encode_graph6(g),
        s,
        s0,
        x,
        aut_g,
        aut_u,
        stab,
        fixing,
        strong_fixing: fixing && stab == aut_u,
    })
}

/// One `A(G)`-orbit of Hamiltonian cycles.
#[derive(Clone, Debug)]
pub struct HamOrbit<'g> {
    pub size: u128,
    /// `|A(C) ∩ A(G)|` for any member `C`.
    pub stab: u128,
    /// The least member in canonical cycle order.
    pub representative: HamCycle<'g>,
    pub members: Vec<HamCycle<'g>>,
}

/// Orbit decomposition of the Hamiltonian cycles of `G` under `A(G)`.
#[derive(Clone, Debug)]
pub struct HamOrbitReport<'g> {
    pub cycle_count: u128,
    pub aut_order: u128,
    pub orbits: Vec<HamOrbit<'g>>,
    pub in_f_ham: bool,
    pub in_fstar_ham: bool,
}

#[derive(Serialize)]
struct OrbitJson {
    size: u128,
    stab: u128,
    signature: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportJson {
    cycles: u128,
    orbits: Vec<OrbitJson>,
    f_ham: bool,
    f_star_ham: bool,
}

impl HamOrbitReport<'_> {
    /// JSON with each orbit labelled by `signature(representative)`.
    pub fn to_json_with<F>(&self, signature: F) -> serde_json::Value
    where
        F: Fn(&HamCycle<'_>) -> String,
    {
        let body = ReportJson {
            cycles: self.cycle_count,
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitJson { size: o.size, stab: o.stab, signature: signature(&o.representative) })
                .collect(),
            f_ham: self.in_f_ham,
            f_star_ham: self.in_fstar_ham,
        };
        serde_json::to_value(body).expect("report serializes")
    }

    /// JSON with orbits labelled by their representative's vertex sequence.
    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with(|c| c.to_string())
    }
}

/// The dihedral automorphisms of a cycle, as rotation and reflection along
/// its vertex order.
fn cycle_generators(c: &HamCycle<'_>) -> [Perm; 2] {
    let o = c.order();
    let n = o.len();
    let mut rot = vec![0; n];
    let mut refl = vec![0; n];
    for i in 0..n {
        rot[o[i]] = o[(i + 1) % n];
        refl[o[i]] = o[(n - i) % n];
    }
    [Perm::from_images(rot).expect("rotation"), Perm::from_images(refl).expect("reflection")]
}

/// `A(C) ⊆ A(G)` for a Hamiltonian cycle `C` of `G`.
pub fn cycle_group_in_aut(c: &HamCycle<'_>, g: &Graph) -> bool {
    cycle_generators(c).iter().all(|p| p.preserves(g))
}

/// Decomposes the Hamiltonian cycles of `g` into `A(G)`-orbits.
pub fn ham_orbits<'g>(g: &'g Graph, a: &PermutationGroup) -> Result<Vec<HamOrbit<'g>>> {
    let cycles = enumerate_hamiltonian_cycles(g);
    let index: HashMap<&Graph, usize> = cycles.iter().enumerate().map(|(i, c)| (c.edges(), i)).collect();
    let elements = a.elements()?;
    let mut assigned = vec![false; cycles.len()];
    let mut orbits = Vec::new();
    for i in 0..cycles.len() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        let mut stab = 0u128;
        for p in elements {
            let image = cycles[i].edges().permuted(p);
            let j = *index.get(&image).ok_or_else(|| {
                Error::Precondition("group does not map Hamiltonian cycles to Hamiltonian cycles".into())
            })?;
            if j == i {
                stab += 1;
            }
            if !assigned[j] {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        let size = members.len() as u128;
        debug_assert_eq!(size * stab, a.order());
        orbits.push(HamOrbit {
            size,
            stab,
            representative: cycles[i].clone(),
            members: members.into_iter().map(|j| cycles[j].clone()).collect(),
        });
    }
    Ok(orbits)
}

/// Whether every Hamiltonian cycle of `g` is a fixing subgraph, with the
/// orbit decomposition that decides it.
pub fn in_f_ham(g: &Graph) -> Result<HamOrbitReport<'_>> {
    let a = PermutationGroup::automorphism_group(g)?;
    let orbits = ham_orbits(g, &a)?;
    let cycle_count = orbits.iter().map(|o| o.size).sum();
    let in_f_ham = orbits.len() == 1;
    let in_fstar_ham = in_f_ham && cycle_group_in_aut(&orbits[0].representative, g);
    Ok(HamOrbitReport { cycle_count, aut_order: a.order(), orbits, in_f_ham, in_fstar_ham })
}

/// Whether every Hamiltonian cycle of `g` is a strong fixing subgraph.
///
/// Checks `A(C) ⊆ A(G)` on one cycle, then that its orbit contains every
/// Hamiltonian cycle; strong fixing passes to every isomorphic copy.
pub fn in_fstar_ham(g: &Graph) -> Result<bool> {
    let cycles = enumerate_hamiltonian_cycles(g);
    let Some(c) = cycles.first() else {
        return Ok(false);
    };
    if !cycle_group_in_aut(c, g) {
        return Ok(false);
    }
    let a = PermutationGroup::automorphism_group(g)?;
    let stab = a.stabilizer_order(c.edges())?;
    Ok(a.order() == stab * cycles.len() as u128)
}

/// Relabels `g` along the cycle (`c.order()[i]` becomes `i`) and returns
/// the symmetric difference set `D` if the result is circulant.
pub fn circulant_difference_set(g: &Graph, c: &HamCycle<'_>) -> Result<Option<Vec<usize>>> {
    if c.host() != g {
        return Err(Error::HostMismatch);
    }
    let n = g.n();
    let r = g.relabeled_by_order(c.order())?;
    let diffs = r.neighbors_mask(0);
    for i in 0..n {
        let expected = bits(diffs).fold(0u64, |acc, d| acc | bit((i + d) % n));
        if r.neighbors_mask(i) != expected {
            return Ok(None);
        }
    }
    Ok(Some(bits(diffs).collect()))
}

/// For `U ⊆ K ⊆ G` with `U` strong fixing in `G`, checks that `K` is strong
/// fixing too: `x(K;G) = 1` and `A(K) ⊆ A(G)`.
pub fn sandwich_check(u: &Graph, k: &Graph, g: &Graph) -> Result<bool> {
    if !u.is_subgraph_of(k) || !k.is_subgraph_of(g) {
        return Err(Error::Precondition("sandwich check needs U ⊆ K ⊆ G".into()));
    }
    if !fixing_report(u, g)?.strong_fixing {
        return Err(Error::Precondition("U is not a strong fixing subgraph of G".into()));
    }
    let x = extension_count(k, g)?;
    let a_k = PermutationGroup::automorphism_group(k)?;
    Ok(x == 1 && a_k.is_subgroup_of_aut(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        heawood, line_k33, make_circulant, make_complete, make_complete_bipartite, make_cycle,
        make_generalized_petersen, tutte_8cage,
    };
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rim(g: &Graph) -> HamCycle<'_> {
        HamCycle::new(g, (0..g.n()).collect()).unwrap()
    }

    fn cube_c8() -> Graph {
        Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 7), (7, 6), (6, 5), (5, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn subgraph_count_examples() {
        let h = heawood();
        assert_eq!(spanning_subgraph_count(&make_cycle(14).unwrap(), &h).unwrap(), 24);
        assert_eq!(spanning_subgraph_count(&h, &h).unwrap(), 1);
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert_eq!(spanning_subgraph_count(&make_cycle(6).unwrap(), &k33).unwrap(), 6);
        assert_eq!(spanning_count_direct(&make_cycle(6).unwrap(), &k33).unwrap(), 6);
        let c5 = make_cycle(5).unwrap();
        assert_eq!(spanning_count_direct(&c5, &c5).unwrap(), 1);
        let k4 = make_complete(4).unwrap();
        assert_eq!(spanning_count_direct(&make_cycle(4).unwrap(), &k4).unwrap(), 3);
        let matching = Graph::from_edges(10, [(0, 1)]).unwrap();
        let petersen = make_generalized_petersen(5, 2).unwrap();
        assert!(matches!(spanning_subgraph_count(&matching, &petersen), Err(Error::Regime(_))));
    }

    #[test]
    fn similarity_count_examples() {
        assert_eq!(similarity_count(&make_cycle(14).unwrap(), &heawood()).unwrap(), 24);
        let t = tutte_8cage();
        let c = enumerate_hamiltonian_cycles(&t)[0].edges().clone();
        assert_eq!(similarity_count(&c, &t).unwrap(), 144);
        let d = make_generalized_petersen(10, 2).unwrap();
        let c = enumerate_hamiltonian_cycles(&d)[0].edges().clone();
        assert_eq!(similarity_count(&c, &d).unwrap(), 30);
    }

    #[test]
    fn extension_count_examples() {
        let h = heawood();
        let c14 = make_cycle(14).unwrap();
        assert_eq!(extension_count(&c14, &h).unwrap(), 2);
        assert_eq!(extension_count_direct(&c14, &h).unwrap(), 2);
        assert_eq!(extension_count(&h, &h).unwrap(), 1);
        let cube = make_generalized_petersen(4, 1).unwrap();
        assert_eq!(extension_count(&cube_c8(), &cube).unwrap(), 2);
        assert_eq!(extension_count_direct(&cube_c8(), &cube).unwrap(), 2);
        let k4 = make_complete(4).unwrap();
        assert_eq!(extension_count_direct(&make_cycle(4).unwrap(), &k4).unwrap(), 1);
        assert_eq!(extension_count(&make_cycle(4).unwrap(), &k4).unwrap(), 1);
        let k6 = make_complete(6).unwrap();
        let u = Graph::from_edges(6, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(extension_count_direct(&u, &k6).unwrap(), 1);
        assert_eq!(extension_count(&u, &k6).unwrap(), 1);
    }

    #[test]
    fn chord_completion_matches_formula_on_8cage() {
        let t = tutte_8cage();
        let c = enumerate_hamiltonian_cycles(&t)[0].edges().clone();
        assert_eq!(extension_count(&c, &t).unwrap(), 6);
        assert_eq!(extension_count_direct(&c, &t).unwrap(), 6);
    }

    #[test]
    fn non_integral_extension_is_an_error() {
        assert_eq!(extension_from_counts(3, 1, 2), Err(Error::NonIntegral { numerator: 3, denominator: 2 }));
    }

    #[test]
    fn fixing_report_examples() {
        let h = heawood();
        let r = fixing_report(&make_cycle(14).unwrap(), &h).unwrap();
        assert_eq!((r.s, r.s0, r.x, r.aut_g, r.aut_u, r.stab), (24, 24, 2, 336, 28, 14));
        assert!(r.fixing && !r.strong_fixing);

        let k4 = make_complete(4).unwrap();
        let r = fixing_report(&make_cycle(4).unwrap(), &k4).unwrap();
        assert!(r.fixing && r.strong_fixing);
        assert_eq!(r.x, 1);

        let cube = make_generalized_petersen(4, 1).unwrap();
        let r = fixing_report(&cube_c8(), &cube).unwrap();
        assert_eq!((r.s, r.aut_g, r.aut_u, r.x), (6, 48, 16, 2));
        assert!(r.fixing && !r.strong_fixing);
        assert_eq!(
            fixing_report(&make_cycle(14).unwrap(), &make_cycle(5).unwrap()).unwrap_err(),
            Error::DegreeMismatch(14, 5)
        );
    }

    #[test]
    fn fixing_report_json_schema() {
        let r = fixing_report(&make_cycle(4).unwrap(), &make_complete(4).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["graph", "s", "s0", "x", "autG", "autU", "stab", "fixing", "strongFixing"]);
        assert_eq!(v["graph"], "C~");
        assert_eq!(v["autG"], 24);
    }

    #[test]
    fn ham_report_examples() {
        let h = heawood();
        let r = in_f_ham(&h).unwrap();
        assert_eq!(r.cycle_count, 24);
        assert_eq!(r.orbits.len(), 1);
        assert_eq!((r.orbits[0].size, r.orbits[0].stab), (24, 14));
        assert!(r.in_f_ham && !r.in_fstar_ham);
        let json = r.to_json();
        assert_eq!(json["cycles"], 24);
        assert_eq!(json["fHam"], true);
        assert_eq!(json["fStarHam"], false);

        let prism = make_generalized_petersen(6, 1).unwrap();
        assert!(!in_f_ham(&prism).unwrap().in_f_ham);
        assert!(!in_f_ham(&line_k33()).unwrap().in_f_ham);

        let petersen = make_generalized_petersen(5, 2).unwrap();
        let r = in_f_ham(&petersen).unwrap();
        assert_eq!((r.cycle_count, r.orbits.len(), r.in_f_ham), (0, 0, false));
    }

    #[test]
    fn orbit_stabilizer_holds_in_reports() {
        for g in
            [heawood(), make_generalized_petersen(10, 2).unwrap(), line_k33(), make_generalized_petersen(8, 1).unwrap()]
        {
            let r = in_f_ham(&g).unwrap();
            for o in &r.orbits {
                assert_eq!(o.size * o.stab, r.aut_order);
                assert_eq!(o.members.len() as u128, o.size);
            }
            assert_eq!(r.orbits.iter().map(|o| o.size).sum::<u128>(), r.cycle_count);
        }
    }

    #[test]
    fn fstar_examples() {
        assert!(in_fstar_ham(&make_complete_bipartite(3, 3).unwrap()).unwrap());
        assert!(!in_fstar_ham(&heawood()).unwrap());
        assert!(in_fstar_ham(&make_cycle(7).unwrap()).unwrap());
        assert!(in_fstar_ham(&make_complete(5).unwrap()).unwrap());
        assert!(!in_fstar_ham(&make_generalized_petersen(5, 2).unwrap()).unwrap());
        assert!(!in_fstar_ham(&make_generalized_petersen(4, 1).unwrap()).unwrap());
    }

    #[test]
    fn circulant_examples() {
        let k6 = make_complete(6).unwrap();
        let c = &enumerate_hamiltonian_cycles(&k6)[17];
        assert_eq!(circulant_difference_set(&k6, c).unwrap(), Some(vec![1, 2, 3, 4, 5]));
        let k33 = make_complete_bipartite(3, 3).unwrap();
        for c in enumerate_hamiltonian_cycles(&k33) {
            assert_eq!(circulant_difference_set(&k33, &c).unwrap(), Some(vec![1, 3, 5]));
        }
        let h = heawood();
        assert_eq!(circulant_difference_set(&h, &rim(&h)).unwrap(), None);
        let oct = make_circulant(6, &[1, -1, 2, -2]).unwrap();
        assert_eq!(circulant_difference_set(&oct, &rim(&oct)).unwrap(), Some(vec![1, 2, 4, 5]));
    }

    #[test]
    fn strong_fixing_cycle_gives_circulant() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let n = rng.gen_range(4..=7);
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            for u in 0..n {
                for v in u + 2..n {
                    if !(u == 0 && v == n - 1) && rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let c = rim(&g);
            if cycle_group_in_aut(&c, &g) {
                assert!(circulant_difference_set(&g, &c).unwrap().is_some(), "{g:?}");
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let k33 = make_complete_bipartite(3, 3).unwrap();
        let c = enumerate_hamiltonian_cycles(&k33)[0].edges().clone();
        let chord = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .find(|&(u, v)| k33.has_edge(u, v) && !c.has_edge(u, v))
            .unwrap();
        let mut k = c.clone();
        k.insert_edge(chord.0, chord.1).unwrap();
        assert!(sandwich_check(&c, &k, &k33).unwrap());
        assert!(sandwich_check(&k33, &k33, &k33).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let k6 = make_complete(6).unwrap();
        let c6 = make_cycle(6).unwrap();
        let chords: Vec<(usize, usize)> =
            (0..6).flat_map(|u| (u + 2..6).map(move |v| (u, v))).filter(|&(u, v)| !(u == 0 && v == 5)).collect();
        for _ in 0..10 {
            let mut k = c6.clone();
            let take = rng.gen_range(0..=chords.len());
            for &(u, v) in chords.choose_multiple(&mut rng, take) {
                k.insert_edge(u, v).unwrap();
            }
            assert!(sandwich_check(&c6, &k, &k6).unwrap());
        }

        let h = heawood();
        assert!(matches!(sandwich_check(&make_cycle(14).unwrap(), &h, &h), Err(Error::Precondition(_))));
    }

    #[test]
    fn isomorphism_invariance_of_fixing_status() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let cases = [
            (make_cycle(14).unwrap(), heawood()),
            (cube_c8(), make_generalized_petersen(4, 1).unwrap()),
            (
                Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap(),
                make_complete_bipartite(3, 3).unwrap(),
            ),
        ];
        for (u, g) in &cases {
            let base = fixing_report(u, g).unwrap();
            for _ in 0..5 {
                let mut v: Vec<usize> = (0..g.n()).collect();
                v.shuffle(&mut rng);
                let p = Perm::from_images(v).unwrap();
                let r = fixing_report(&u.permuted(&p), &g.permuted(&p)).unwrap();
                assert_eq!((r.fixing, r.strong_fixing, r.s, r.x), (base.fixing, base.strong_fixing, base.s, base.x));
            }
        }
    }
}
