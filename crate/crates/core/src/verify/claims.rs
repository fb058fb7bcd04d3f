//! Expected values and plain-language statements for every verified claim.
//!
//! Each claim family has an id prefix; instances append a suffix such as
//! `n07`. A failing row carries its family's statement so the report names
//! what was violated.

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
}

macro_rules! claims {
    ($($name:ident = $id:literal : $statement:literal;)*) => {
        $(pub const $name: Claim = Claim { id: $id, statement: $statement };)*
        pub const ALL: &[Claim] = &[$($name),*];
    };
}

claims! {
    HEAWOOD_COUNT = "heawood.01.cycles": "The Heawood graph has exactly 24 Hamiltonian cycles.";
    HEAWOOD_AUT = "heawood.02.aut_g": "The automorphism group of the Heawood graph has order 336.";
    HEAWOOD_STAB = "heawood.03.stab": "The rim cycle is fixed setwise by 14 automorphisms of the Heawood graph.";
    HEAWOOD_AUT_C = "heawood.04.aut_c": "A 14-cycle has 28 automorphisms.";
    HEAWOOD_X = "heawood.05.x": "The rim cycle extends to exactly 2 labeled Heawood graphs.";
    HEAWOOD_P = "heawood.06.p_distribution": "Longest common paths between the rim cycle and all Hamiltonian cycles.";
    HEAWOOD_FIXING = "heawood.07.fixing": "The rim cycle is a fixing subgraph.";
    HEAWOOD_STRONG = "heawood.08.strong_fixing": "The rim cycle is not a strong fixing subgraph.";
    HEAWOOD_ORBITS = "heawood.09.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";

    DODECA_COUNT = "dodecahedron.01.cycles": "G(10,2) has exactly 30 Hamiltonian cycles.";
    DODECA_AUT = "dodecahedron.02.aut_g": "The automorphism group of G(10,2) has order 120.";
    DODECA_STAB = "dodecahedron.03.stab": "Each Hamiltonian cycle of G(10,2) is fixed by 4 automorphisms.";
    DODECA_FHAM = "dodecahedron.04.f_ham": "All Hamiltonian cycles of G(10,2) form one orbit.";
    DODECA_ORBITS = "dodecahedron.05.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";

    CAGE8_COUNT = "cage8.01.cycles": "The 8-cage has exactly 144 Hamiltonian cycles.";
    CAGE8_AUT = "cage8.02.aut_g": "The automorphism group of the 8-cage has order 1440.";
    CAGE8_STAB = "cage8.03.stab": "Each Hamiltonian cycle of the 8-cage is fixed by 10 automorphisms.";
    CAGE8_FHAM = "cage8.04.f_ham": "All Hamiltonian cycles of the 8-cage form one orbit.";
    CAGE8_ORBITS = "cage8.05.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";
    CAGE8_X = "cage8.06.x": "Extension count of a Hamiltonian cycle in the 8-cage (no expected value).";

    LK33_FHAM = "lk33.01.f_ham": "The line graph of K3,3 has Hamiltonian cycles in more than one orbit.";
    LK33_SUMMARY = "lk33.02.summary": "Cycle count and group order of the line graph of K3,3 (no expected value).";
    LK33_ORBITS = "lk33.03.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";

    CLAIM_AUT = "claim.aut_order": "|A(G(n,2))| = 2n for n other than 5 and 10; |A(G(10,2))| = 120.";
    CLAIM_DIHEDRAL = "claim.dihedral": "For n other than 5 and 10, A(G(n,2)) equals the rotation-reflection group.";

    THM1_IDENTITY = "thm1.identity": "|A(U)| s(U;G) = |A(G)| x(U;G), with s and x from independent oracles, and the library's s and x agree with them.";

    THM6_LABELED = "thm6.labeled_connected": "Number of labeled connected graphs on n vertices (census check).";
    THM6_CLASSES = "thm6.classes": "Number of connected graphs on n vertices up to isomorphism (census check).";
    THM6_FSTAR = "thm6.fstar": "The connected graphs whose every Hamiltonian cycle is strong fixing are exactly C_n, K_n and, for even n, K_{n/2,n/2}.";
    THM6_CIRCULANT = "thm6.circulant": "Each such graph is circulant when relabeled along a Hamiltonian cycle.";

    THM7_HAM = "thm7.hamiltonian": "G(n,1) is always Hamiltonian; G(n,2) is Hamiltonian iff n is not 5 mod 6.";
    THM7_FHAM = "thm7.f_ham": "G(n,2) has a single Hamiltonian orbit iff n is 1 or 3 mod 6 or n = 10; G(n,1) iff n is odd or n = 4.";
    THM7_ORBITS = "thm7.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";
    THM7_CASE2 = "thm7.k2.case2_witnesses": "For n = 0, 2, 4 mod 6 (n != 10), at least two admissible k give realized (k,1,...,1) cycles in distinct orbits.";
    THM7_CASE2_READINGS = "thm7.k2.case2_readings": "Admissible k under both readings of the k = 3 exception, with realization and orbits (no expected value).";
    THM7_CASE3 = "thm7.k2.case3_signature": "For n = 3 mod 6 the only signature is all 2s; for n = 1 mod 6 it is all 2s except two 1s.";
    THM7_K1_LONG = "thm7.k1.long_rim": "G(n,1) has a Hamiltonian cycle with rim signature (n-1).";
    THM7_K1_ALT = "thm7.k1.alternating": "For even n, G(n,1) has an alternating cycle (1,...,1), similar to the (n-1) cycle only when n = 4.";

    THM8_HAM = "thm8.hamiltonian": "G(n,3) is Hamiltonian.";
    THM8_FHAM = "thm8.f_ham": "For n other than 8 and 10, G(n,3) has Hamiltonian cycles in more than one orbit.";
    THM8_WITNESSES = "thm8.witnesses": "The witness pair of rim signatures is realized and lies in distinct orbits.";
    THM8_SIGNATURES = "thm8.witness_signatures": "The witness signatures and where they came from (no expected value).";
    THM8_ORBITS = "thm8.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";
    THM8_EXCLUDED = "thm8.excluded": "G(8,3) and G(10,3) are outside the statement (no expected value).";

    EXCEPTIONAL = "exceptional.summary": "Hamiltonian orbit structure of a highly symmetric G(n,k) (no expected value).";
    EXCEPTIONAL_ORBITS = "exceptional.orbit_stabilizer": "Every orbit has size |A(G)| / stabilizer order.";
}

pub const HEAWOOD_CYCLES: u64 = 24;
pub const HEAWOOD_AUT_ORDER: u128 = 336;
pub const HEAWOOD_RIM_STAB: u128 = 14;
pub const HEAWOOD_RIM_AUT: u128 = 28;
pub const HEAWOOD_RIM_X: u128 = 2;
pub const HEAWOOD_P_DISTRIBUTION: &[(usize, usize)] = &[(1, 2), (2, 7), (3, 7), (4, 7), (14, 1)];

pub const DODECA_CYCLES: u64 = 30;
pub const DODECA_AUT_ORDER: u128 = 120;
pub const DODECA_STAB_ORDER: u128 = 4;

pub const CAGE8_CYCLES: u64 = 144;
pub const CAGE8_AUT_ORDER: u128 = 1440;
pub const CAGE8_STAB_ORDER: u128 = 10;

/// Labeled connected graph counts for `n = 1..=7`.
pub const LABELED_CONNECTED: [u64; 8] = [0, 1, 1, 4, 38, 728, 26704, 1866256];
/// Connected graphs up to isomorphism for `n = 1..=7`.
pub const CONNECTED_CLASSES: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

pub const THM1_PAIRS: usize = 500;
pub const THM1_MAX_VERTICES: usize = 7;
pub const THM1_SEED: u64 = 0x5EED_F1C5;

pub fn statement(claim_id: &str) -> Option<&'static str> {
    ALL.iter()
        .find(|c| claim_id == c.id || claim_id.strip_prefix(c.id).is_some_and(|rest| rest.starts_with('.')))
        .map(|c| c.statement)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_prefix_free() {
        for (i, a) in ALL.iter().enumerate() {
            for b in &ALL[i + 1..] {
                assert_ne!(a.id, b.id);
                assert!(!a.id.starts_with(&format!("{}.", b.id)) && !b.id.starts_with(&format!("{}.", a.id)));
            }
        }
        assert_eq!(statement("thm7.k2.case2_witnesses.n08"), Some(THM7_CASE2.statement));
    }
}
