//! Permutation groups, automorphism groups and canonical labeling.

mod perm;
mod search;

pub use perm::Perm;

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningSubgraph};
use search::AutSearch;

/// Largest group whose elements we are willing to list explicitly.
pub const ENUMERATION_BOUND: usize = 10_000_000;

/// A permutation group given by generators, with its exact order and a
/// lazily enumerated element list.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: u128,
    elements: OnceLock<Vec<Perm>>,
}

impl PermutationGroup {
    /// Group generated by `generators`; the order comes from closure
    /// enumeration, so this fails above [`ENUMERATION_BOUND`].
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if let Some(p) = generators.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch(p.degree(), degree));
        }
        let elements = closure(degree, &generators, ENUMERATION_BOUND)?;
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        Ok(Self { degree, generators, order: elements.len() as u128, elements: OnceLock::from(elements) })
    }

    pub fn trivial(degree: usize) -> Self {
        Self { degree, generators: Vec::new(), order: 1, elements: OnceLock::from(vec![Perm::identity(degree)]) }
    }

    /// `A(G)` via individualization-refinement. The order is exact (product
    /// of basic orbit lengths); elements are only listed on demand.
    pub fn automorphism_group(g: &Graph) -> Result<Self> {
        let search = AutSearch::run(g);
        let order = search.order().ok_or(Error::OrderOverflow)?;
        Ok(Self { degree: g.n(), generators: search.generators(), order, elements: OnceLock::new() })
    }

    /// The dihedral group `<alpha, beta>` acting on `G(n, k)` labels:
    /// `alpha` rotates rim and inner vertices together, `beta` negates indices.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("dihedral group needs n >= 3, got {n}")));
        }
        let alpha = (0..2 * n).map(|v| if v < n { (v + 1) % n } else { n + (v - n + 1) % n }).collect();
        let beta = (0..2 * n).map(|v| if v < n { (n - v) % n } else { n + (2 * n - v) % n }).collect();
        Self::from_generators(2 * n, vec![Perm::from_images(alpha)?, Perm::from_images(beta)?])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sorted, deduplicated generators.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// All elements in ascending (image-array) order.
    pub fn elements(&self) -> Result<&[Perm]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        if self.order > ENUMERATION_BOUND as u128 {
            return Err(Error::EnumerationBound(ENUMERATION_BOUND));
        }
        let e = closure(self.degree, &self.generators, ENUMERATION_BOUND)?;
        debug_assert_eq!(e.len() as u128, self.order);
        Ok(self.elements.get_or_init(|| e))
    }

    /// Number of elements mapping the edge set of `u` onto itself.
    pub fn stabilizer_order(&self, u: &Graph) -> Result<u128> {
        if u.n() != self.degree {
            return Err(Error::DegreeMismatch(u.n(), self.degree));
        }
        Ok(self.elements()?.iter().filter(|p| p.preserves(u)).count() as u128)
    }

    /// Distinct images of `u` under the group, sorted.
    pub fn orbit_of(&self, u: &Graph) -> Result<Vec<Graph>> {
        if u.n() != self.degree {
            return Err(Error::DegreeMismatch(u.n(), self.degree));
        }
        let images: HashSet<Graph> = self.elements()?.iter().map(|p| u.permuted(p)).collect();
        let mut out: Vec<Graph> = images.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// True iff every generator is an automorphism of `g`.
    pub fn is_subgroup_of_aut(&self, g: &Graph) -> Result<bool> {
        if g.n() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.n()));
        }
        Ok(self.generators.iter().all(|p| p.preserves(g)))
    }

    /// One generator per line in the `p0 p1 ...` image format.
    pub fn to_text(&self) -> String {
        self.generators.iter().map(|p| format!("{p}\n")).collect()
    }
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.order == other.order && self.generators.iter().all(|p| other.contains(p))
    }
}

impl PermutationGroup {
    pub fn contains(&self, p: &Perm) -> bool {
        match self.elements() {
            Ok(e) => e.binary_search(p).is_ok(),
            Err(_) => false,
        }
    }
}

fn closure(degree: usize, generators: &[Perm], bound: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.then(s);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::EnumerationBound(bound));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Exact order of `<generators>` by closure enumeration.
pub fn group_order(degree: usize, generators: &[Perm]) -> Result<u128> {
    Ok(closure(degree, generators, ENUMERATION_BOUND)?.len() as u128)
}

/// All elements of `<generators>`, sorted.
pub fn group_elements(degree: usize, generators: &[Perm]) -> Result<Vec<Perm>> {
    closure(degree, generators, ENUMERATION_BOUND)
}

pub fn automorphism_generators(g: &Graph) -> Result<PermutationGroup> {
    PermutationGroup::automorphism_group(g)
}

pub fn gp_dihedral(n: usize) -> Result<PermutationGroup> {
    PermutationGroup::dihedral(n)
}

/// `|{s in A : s(E(U)) = E(U)}|`, which is `|A(U) ∩ A(G)|` when `A = A(G)`.
pub fn subgraph_stabilizer_order(a: &PermutationGroup, u: &SpanningSubgraph<'_>) -> Result<u128> {
    a.stabilizer_order(u.graph())
}

pub fn subgraph_orbit(a: &PermutationGroup, u: &SpanningSubgraph<'_>) -> Result<Vec<Graph>> {
    a.orbit_of(u.graph())
}

pub fn is_aut_subgroup(sub: &PermutationGroup, g: &Graph) -> Result<bool> {
    sub.is_subgroup_of_aut(g)
}

/// Label-independent representative of the isomorphism class of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u64>);

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(AutSearch::run(g).canonical().0)
}

/// The canonical representative of `g`'s isomorphism class, as a graph.
pub fn canonical_labeling(g: &Graph) -> Graph {
    Graph::from_rows(AutSearch::run(g).canonical().0)
}

/// Relabeling permutation taking `g` to its canonical representative.
pub fn canonical_relabeling(g: &Graph) -> Perm {
    let order = AutSearch::run(g).canonical().1;
    let mut images = vec![0; g.n()];
    for (i, v) in order.into_iter().enumerate() {
        images[v] = i;
    }
    Perm::from_images(images).expect("canonical order is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        heawood, make_complete, make_complete_bipartite, make_cycle, make_generalized_petersen, tutte_8cage,
    };
    use itertools::Itertools;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force_automorphisms(g: &Graph) -> Vec<Perm> {
        (0..g.n())
            .permutations(g.n())
            .map(|v| Perm::from_images(v).unwrap())
            .filter(|p| p.preserves(g))
            .sorted()
            .collect()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Perm::from_images(v).unwrap()
    }

    #[test]
    fn known_group_orders() {
        assert_eq!(PermutationGroup::automorphism_group(&heawood()).unwrap().order(), 336);
        let dodeca = make_generalized_petersen(10, 2).unwrap();
        assert_eq!(PermutationGroup::automorphism_group(&dodeca).unwrap().order(), 120);
        assert_eq!(PermutationGroup::automorphism_group(&tutte_8cage()).unwrap().order(), 1440);
    }

    #[test]
    fn closure_orders() {
        let c14 = make_cycle(14).unwrap();
        let reflection = Perm::from_images((0..14).map(|i| (14 - i) % 14).collect()).unwrap();
        let gens = [Perm::rotation(14), reflection];
        assert!(gens.iter().all(|p| p.preserves(&c14)));
        assert_eq!(group_order(14, &gens).unwrap(), 28);
        assert_eq!(group_order(5, &[]).unwrap(), 1);
        let k5 = PermutationGroup::automorphism_group(&make_complete(5).unwrap()).unwrap();
        assert_eq!(group_order(5, k5.generators()).unwrap(), 120);
        assert_eq!(k5.order(), 120);
    }

    #[test]
    fn elements_examples() {
        let d7 = gp_dihedral(7).unwrap();
        assert_eq!(d7.elements().unwrap().len(), 14);
        assert_eq!(group_elements(4, &[]).unwrap(), vec![Perm::identity(4)]);
        let h = PermutationGroup::automorphism_group(&heawood()).unwrap();
        let e = h.elements().unwrap();
        assert_eq!(e.len(), 336);
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert!(e.iter().all(|p| p.preserves(&heawood())));
    }

    #[test]
    fn enumeration_bound_is_reported() {
        let k12 = PermutationGroup::automorphism_group(&make_complete(12).unwrap()).unwrap();
        assert_eq!(k12.order(), 479_001_600);
        assert_eq!(k12.elements().unwrap_err(), Error::EnumerationBound(ENUMERATION_BOUND));
    }

    #[test]
    fn order_overflow_is_reported() {
        let k40 = make_complete(40).unwrap();
        assert_eq!(PermutationGroup::automorphism_group(&k40).unwrap_err(), Error::OrderOverflow);
        let k30 = PermutationGroup::automorphism_group(&make_complete(30).unwrap()).unwrap();
        assert_eq!(k30.order(), (1..=30u128).product::<u128>());
    }

    #[test]
    fn dihedral_examples() {
        let d5 = gp_dihedral(5).unwrap();
        assert_eq!(d5.order(), 10);
        let p = make_generalized_petersen(5, 2).unwrap();
        assert!(d5.elements().unwrap().iter().all(|s| s.preserves(&p)));
        assert_eq!(gp_dihedral(4).unwrap().order(), 8);
        let g72 = make_generalized_petersen(7, 2).unwrap();
        let a = PermutationGroup::automorphism_group(&g72).unwrap();
        assert_eq!(a.elements().unwrap(), gp_dihedral(7).unwrap().elements().unwrap());
        assert!(gp_dihedral(2).is_err());
    }

    #[test]
    fn dihedral_preserves_every_petersen_graph() {
        for n in 3..=16 {
            let d = gp_dihedral(n).unwrap();
            for k in (1..n).take_while(|k| 2 * k < n) {
                let g = make_generalized_petersen(n, k).unwrap();
                assert!(d.is_subgroup_of_aut(&g).unwrap(), "G({n},{k})");
            }
        }
    }

    #[test]
    fn claim_orders_for_k2() {
        for n in 5..=16 {
            let g = make_generalized_petersen(n, 2).unwrap();
            let order = PermutationGroup::automorphism_group(&g).unwrap().order();
            let expected = if n == 5 || n == 10 { 120 } else { 2 * n as u128 };
            assert_eq!(order, expected, "n={n}");
        }
    }

    #[test]
    fn stabilizer_and_orbit_examples() {
        let h = heawood();
        let a = PermutationGroup::automorphism_group(&h).unwrap();
        let c = SpanningSubgraph::new(&h, make_cycle(14).unwrap()).unwrap();
        assert_eq!(subgraph_stabilizer_order(&a, &c).unwrap(), 14);
        assert_eq!(subgraph_orbit(&a, &c).unwrap().len(), 24);
        let trivial = PermutationGroup::trivial(14);
        assert_eq!(subgraph_orbit(&trivial, &c).unwrap(), vec![make_cycle(14).unwrap()]);
    }

    #[test]
    fn aut_subgroup_examples() {
        let h = heawood();
        let c14 = make_cycle(14).unwrap();
        let ac = PermutationGroup::automorphism_group(&c14).unwrap();
        assert!(!is_aut_subgroup(&ac, &h).unwrap());
        let a6 = PermutationGroup::automorphism_group(&make_cycle(6).unwrap()).unwrap();
        assert!(is_aut_subgroup(&a6, &make_complete(6).unwrap()).unwrap());
        let cube = make_generalized_petersen(4, 1).unwrap();
        // rim 0-1-2-3, spoke 3-7, inner 7-6-5-4, spoke 4-0
        let c8 = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 7), (7, 6), (6, 5), (5, 4), (4, 0)]).unwrap();
        assert!(c8.is_subgraph_of(&cube));
        let a8 = PermutationGroup::automorphism_group(&c8).unwrap();
        assert_eq!(a8.order(), 16);
        assert!(!is_aut_subgroup(&a8, &cube).unwrap());
        assert!(matches!(is_aut_subgroup(&a8, &h), Err(Error::DegreeMismatch(..))));
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for trial in 0..400 {
            let n = 1 + trial % 7;
            let density = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, density);
            let brute = brute_force_automorphisms(&g);
            let a = PermutationGroup::automorphism_group(&g).unwrap();
            assert_eq!(a.order(), brute.len() as u128, "{g:?}");
            assert_eq!(a.elements().unwrap(), brute.as_slice(), "{g:?}");
        }
    }

    #[test]
    fn isomorphism_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for trial in 0..300 {
            let n = 1 + trial % 7;
            let g = random_graph(&mut rng, n, 0.5);
            let h =
                if rng.gen_bool(0.5) { g.permuted(&random_perm(&mut rng, n)) } else { random_graph(&mut rng, n, 0.5) };
            let brute = (0..n).permutations(n).any(|v| g.permuted(&Perm::from_images(v).unwrap()) == h);
            assert_eq!(g.is_isomorphic(&h), brute, "{g:?} vs {h:?}");
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let graphs = [
            make_cycle(5).unwrap(),
            make_generalized_petersen(10, 2).unwrap(),
            heawood(),
            tutte_8cage(),
            make_complete_bipartite(3, 4).unwrap(),
            random_graph(&mut rng, 20, 0.3),
        ];
        for g in &graphs {
            let canon = canonical_labeling(g);
            assert!(canon.is_isomorphic(g));
            assert_eq!(g.permuted(&canonical_relabeling(g)), canon);
            for _ in 0..100 {
                let h = g.permuted(&random_perm(&mut rng, g.n()));
                assert_eq!(canonical_labeling(&h), canon);
            }
        }
        assert_ne!(
            canonical_labeling(&make_complete_bipartite(3, 3).unwrap()),
            canonical_labeling(&make_cycle(6).unwrap())
        );
    }

    #[test]
    fn dodecahedron_from_coordinates() {
        // Faces-based labeling: outer pentagon 0-4, middle ring 5-14, inner pentagon 15-19.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, 5 + 2 * i));
            edges.push((15 + i, 15 + (i + 1) % 5));
            edges.push((15 + i, 6 + 2 * i));
        }
        for j in 0..10 {
            edges.push((5 + j, 5 + (j + 1) % 10));
        }
        let dodeca = Graph::from_edges(20, edges).unwrap();
        assert_eq!(dodeca.regular_degree(), Some(3));
        assert!(dodeca.is_isomorphic(&make_generalized_petersen(10, 2).unwrap()));
        assert!(!make_cycle(6).unwrap().is_isomorphic(&make_complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn group_text_format() {
        let d = gp_dihedral(3).unwrap();
        let text = d.to_text();
        let parsed: Vec<Perm> = text.lines().map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, d.generators());
    }
}
