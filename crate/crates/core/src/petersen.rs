//! Rim signatures of Hamiltonian cycles in generalized Petersen graphs.
//!
//! A Hamiltonian cycle of `G(n, k)` meets the rim in a cyclic sequence of
//! paths. The lengths of those paths, read around the rim and taken up to
//! rotation and reversal, form the cycle's rim signature. Rotations and
//! reflections of `G(n, k)` preserve signatures, so when `A(G)` is dihedral
//! two cycles with different signatures are never similar.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fixing::{ham_orbits, HamOrbit};
use crate::graph::{make_generalized_petersen, Graph};
use crate::group::PermutationGroup;
use crate::hamilton::{enumerate_hamiltonian_cycles, HamCycle};

/// Canonical cyclic sequence of rim-path lengths: the lexicographically
/// least rotation of the sequence or of its reversal. The empty signature
/// stands for a cycle with no rim edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RimSignature(Vec<usize>);

impl RimSignature {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::InvalidParameter("rim path lengths must be positive".into()));
        }
        Ok(Self(canonical_cyclic(lengths)))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `value` repeated `count` times.
    pub fn repeated(value: usize, count: usize) -> Result<Self> {
        Self::new(vec![value; count])
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of rim paths.
    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rim vertices covered, `Σ (n_i + 1)`.
    pub fn rim_vertices(&self) -> usize {
        self.0.iter().map(|l| l + 1).sum()
    }
}

fn canonical_cyclic(seq: Vec<usize>) -> Vec<usize> {
    let len = seq.len();
    if len == 0 {
        return seq;
    }
    let mut rev = seq.clone();
    rev.reverse();
    let mut best = seq.clone();
    for base in [&seq, &rev] {
        for s in 0..len {
            let cand: Vec<usize> = (0..len).map(|i| base[(s + i) % len]).collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

impl fmt::Display for RimSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for RimSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let lengths = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidParameter(format!("rim signature entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lengths)
    }
}

/// `G(n, k)` together with its parameters.
#[derive(Clone, Debug)]
pub struct PetersenGraph {
    n: usize,
    k: usize,
    graph: Graph,
}

/// One `A(G)`-orbit of Hamiltonian cycles with the signatures of its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityClass {
    pub signatures: BTreeSet<RimSignature>,
    pub size: u128,
    pub stab: u128,
}

impl PetersenGraph {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Ok(Self { n, k, graph: make_generalized_petersen(n, k)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Lengths of the maximal rim sub-paths of `c`, canonicalized.
    pub fn rim_signature(&self, c: &HamCycle<'_>) -> Result<RimSignature> {
        if c.host() != &self.graph {
            return Err(Error::HostMismatch);
        }
        let n = self.n;
        let on: Vec<bool> = (0..n).map(|i| c.edges().has_edge(i, (i + 1) % n)).collect();
        let Some(start) = on.iter().position(|&e| !e) else {
            return Err(Error::NotHamiltonian("cycle consists of the rim alone".into()));
        };
        let mut lengths = Vec::new();
        let mut run = 0;
        for step in 1..=n {
            if on[(start + step) % n] {
                run += 1;
            } else if run > 0 {
                lengths.push(run);
                run = 0;
            }
        }
        RimSignature::new(lengths)
    }

    pub fn hamiltonian_cycles(&self) -> Vec<HamCycle<'_>> {
        enumerate_hamiltonian_cycles(&self.graph)
    }

    /// Hamiltonian cycles whose rim signature is `sig`.
    pub fn cycles_with_signature(&self, sig: &RimSignature) -> Result<Vec<HamCycle<'_>>> {
        let mut out = Vec::new();
        for c in self.hamiltonian_cycles() {
            if self.rim_signature(&c)? == *sig {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Orbits of Hamiltonian cycles under `a`, each labelled by the set of
    /// signatures occurring among its members.
    pub fn similarity_classes(&self, a: &PermutationGroup) -> Result<Vec<SimilarityClass>> {
        self.label_orbits(&ham_orbits(&self.graph, a)?)
    }

    /// Labels already computed orbits by their members' signatures.
    pub fn label_orbits(&self, orbits: &[HamOrbit<'_>]) -> Result<Vec<SimilarityClass>> {
        orbits
            .iter()
            .map(|o| {
                let signatures = o.members.iter().map(|c| self.rim_signature(c)).collect::<Result<BTreeSet<_>>>()?;
                Ok(SimilarityClass { signatures, size: o.size, stab: o.stab })
            })
            .collect()
    }
}

pub fn rim_signature(c: &HamCycle<'_>, n: usize, k: usize) -> Result<RimSignature> {
    PetersenGraph::new(n, k)?.rim_signature(c)
}

/// Signatures realised in `G(n, k)`, with their cycles' orders.
pub fn cycles_with_signature(n: usize, k: usize, sig: &RimSignature) -> Result<Vec<Vec<usize>>> {
    let pg = PetersenGraph::new(n, k)?;
    Ok(pg.cycles_with_signature(sig)?.iter().map(|c| c.order().to_vec()).collect())
}

pub fn similarity_classes(n: usize, k: usize, a: &PermutationGroup) -> Result<Vec<SimilarityClass>> {
    PetersenGraph::new(n, k)?.similarity_classes(a)
}

/// `(k, 1, 1, ..., 1)` covering all `n` rim vertices.
pub fn case2_signature(n: usize, k: usize) -> Result<RimSignature> {
    if k == 0 || k >= n || !(n - k - 1).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("no (k,1,...,1) rim pattern with k={k} for n={n}")));
    }
    let mut lengths = vec![k];
    lengths.extend(std::iter::repeat_n(1, (n - k - 1) / 2));
    RimSignature::new(lengths)
}

/// Candidate first-path lengths `k` for `G(n, 2)` with `n ≡ 0, 2, 4 (mod 6)`,
/// `n != 10`: `1 <= k < n`, `k ≡ n - 3 (mod 4)`, `k ≢ 0 (mod 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case2Witnesses {
    /// Admissible `k` with `k = 3` excluded.
    pub strict: Vec<usize>,
    /// Admissible `k` with `k = 3` allowed as an exception.
    pub with_three: Vec<usize>,
}

pub fn thm7_case2_witnesses(n: usize) -> Result<Case2Witnesses> {
    if n % 6 == 1 || n % 6 == 3 || n % 6 == 5 || n == 10 || n < 6 {
        return Err(Error::InvalidParameter(format!("n={n} is not even with n != 10")));
    }
    let congruent = |k: &usize| (k + 3) % 4 == n % 4;
    let strict: Vec<usize> = (1..n).filter(congruent).filter(|k| k % 3 != 0).collect();
    let with_three: Vec<usize> = (1..n).filter(congruent).filter(|&k| k % 3 != 0 || k == 3).collect();
    Ok(Case2Witnesses { strict, with_three })
}

/// Where a witness signature for `G(n, 3)` came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    /// A closed-form pattern, named by its case label.
    Formula(&'static str),
    /// The pattern for this case is undefined at this `n`; the signature was
    /// chosen from the computed orbits instead.
    Fallback { undefined: &'static str },
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessSource::Formula(label) => f.write_str(label),
            WitnessSource::Fallback { undefined } => write!(f, "fallback ({undefined} undefined)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm8Witnesses {
    pub first: RimSignature,
    pub first_source: WitnessSource,
    pub second: RimSignature,
    pub second_source: WitnessSource,
}

fn seq(parts: &[(usize, usize)]) -> Vec<usize> {
    parts.iter().flat_map(|&(v, c)| std::iter::repeat_n(v, c)).collect()
}

/// Closed-form pair of rim patterns for `G(n, 3)`; `None` where a formula
/// needs a non-positive length.
pub fn thm8_formulas(n: usize) -> Result<[(Option<RimSignature>, &'static str); 2]> {
    if n < 7 || n == 8 || n == 10 {
        return Err(Error::InvalidParameter(format!("G({n},3) witnesses need n >= 7, n != 8, 10")));
    }
    let sig = |v: Vec<usize>| RimSignature::new(v).ok();
    let out = if n.is_multiple_of(2) {
        let first = (sig(seq(&[(1, n / 2)])), "case 1");
        let second = if n.is_multiple_of(4) {
            if n.is_multiple_of(3) {
                (sig(seq(&[(2, (n - 6) / 3), (1, 3)])), "subcase 1.1(a)")
            } else {
                (sig(seq(&[(3, n / 4)])), "subcase 1.1(b)")
            }
        } else {
            let t = (n - 6) / 4;
            let label = if n.is_multiple_of(3) { "subcase 1.2(a)" } else { "subcase 1.2(b)" };
            (sig(seq(&[(3, t), (1, 3)])), label)
        };
        [first, second]
    } else if n % 3 == 2 {
        let first = (n.checked_sub(13).filter(|&l| l > 0).and_then(|l| sig(vec![l, 1, 1, 4, 2])), "case 2(a)(i)");
        let second = (sig(seq(&[(2, (n - 8) / 3), (1, 4)])), "case 2(a)(ii)");
        [first, second]
    } else {
        let first = (sig(vec![n - 5, 1, 1]), "case 2(b)(i)");
        let second = (n.checked_sub(11).filter(|&l| l > 0).and_then(|l| sig(vec![l, 2, 2, 1, 1])), "case 2(b)(ii)");
        [first, second]
    };
    Ok(out)
}

/// Two rim signatures of Hamiltonian cycles of `G(n, 3)` in different
/// `A(G)`-orbits. Where a closed-form pattern is undefined for this `n`, the
/// least realised signature whose orbits avoid the other witness is used.
pub fn thm8_witnesses(n: usize) -> Result<Thm8Witnesses> {
    let [(a, la), (b, lb)] = thm8_formulas(n)?;
    let (first, first_source, second, second_source) = match (a, b) {
        (Some(a), Some(b)) => (a, WitnessSource::Formula(la), b, WitnessSource::Formula(lb)),
        (Some(a), None) => {
            let other = fallback_partner(n, &a)?;
            (a, WitnessSource::Formula(la), other, WitnessSource::Fallback { undefined: lb })
        }
        (None, Some(b)) => {
            let other = fallback_partner(n, &b)?;
            (other, WitnessSource::Fallback { undefined: la }, b, WitnessSource::Formula(lb))
        }
        (None, None) => unreachable!("every case defines at least one pattern"),
    };
    Ok(Thm8Witnesses { first, first_source, second, second_source })
}

fn fallback_partner(n: usize, fixed: &RimSignature) -> Result<RimSignature> {
    let pg = PetersenGraph::new(n, 3)?;
    let a = PermutationGroup::automorphism_group(pg.graph())?;
    let classes = pg.similarity_classes(&a)?;
    let touching: Vec<&SimilarityClass> = classes.iter().filter(|c| c.signatures.contains(fixed)).collect();
    classes
        .iter()
        .flat_map(|c| c.signatures.iter())
        .filter(|s| *s != fixed && touching.iter().all(|c| !c.signatures.contains(*s)))
        .min()
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("no second similarity class for G({n},3)")))
}

/// Hamiltonicity of `G(n, k)` for `k ∈ {1, 2, 3}`: always, except
/// `G(n, 2)` with `n ≡ 5 (mod 6)`.
pub fn expected_hamiltonicity(n: usize, k: usize) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidParameter(format!("expected hamiltonicity known for k in 1..=3, got {k}")));
    }
    if n < 3 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!("G({n},{k}) is undefined")));
    }
    Ok(k != 2 || n % 6 != 5)
}
