use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::claims::{self as c, Claim};
use super::{task, Rows, Task, VerifyOptions};
use crate::census::connected_census;
use crate::error::{Error, Result};
use crate::fixing::{
    circulant_difference_set, extension_count, extension_count_direct, fixing_report, in_f_ham, in_fstar_ham,
    spanning_count_direct, spanning_subgraph_count, HamOrbitReport,
};
use crate::graph::{
    encode_graph6, heawood as heawood_graph, line_k33, make_complete, make_complete_bipartite, make_cycle,
    make_generalized_petersen, tutte_8cage, Graph,
};
use crate::group::{canonical_labeling, gp_dihedral, PermutationGroup};
use crate::hamilton::{count_hamiltonian_cycles, enumerate_hamiltonian_cycles, p_distribution, HamCycle};
use crate::petersen::{
    case2_signature, expected_hamiltonicity, thm7_case2_witnesses, thm8_witnesses, PetersenGraph, RimSignature,
    SimilarityClass,
};

fn nn(n: usize) -> String {
    format!("n{n:02}")
}

fn orbit_stabilizer_holds(r: &HamOrbitReport<'_>) -> bool {
    r.orbits.iter().all(|o| o.size * o.stab == r.aut_order)
        && r.orbits.iter().map(|o| o.size).sum::<u128>() == r.cycle_count
}

fn orbit_summary(r: &HamOrbitReport<'_>) -> Value {
    json!({
        "cycles": r.cycle_count,
        "autG": r.aut_order,
        "orbits": r.orbits.iter().map(|o| json!({ "size": o.size, "stab": o.stab })).collect::<Vec<_>>(),
        "fHam": r.in_f_ham,
        "fStarHam": r.in_fstar_ham,
    })
}

fn distinct_stabs(r: &HamOrbitReport<'_>) -> Vec<u128> {
    let mut s: Vec<u128> = r.orbits.iter().map(|o| o.stab).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Indices of the classes whose members carry `sig`.
fn classes_of(classes: &[SimilarityClass], sig: &RimSignature) -> Vec<usize> {
    classes.iter().enumerate().filter(|(_, c)| c.signatures.contains(sig)).map(|(i, _)| i).collect()
}

fn pairwise_disjoint(sets: &[Vec<usize>]) -> bool {
    sets.iter().enumerate().all(|(i, a)| sets[i + 1..].iter().all(|b| a.iter().all(|x| !b.contains(x))))
}

fn check_range(
    name: &str,
    requested: Option<&RangeInclusive<usize>>,
    default: RangeInclusive<usize>,
    limits: RangeInclusive<usize>,
) -> Result<RangeInclusive<usize>> {
    let r = requested.cloned().unwrap_or(default);
    if !limits.contains(r.start()) || !limits.contains(r.end()) {
        return Err(Error::Regime(format!(
            "{name} supports n in {}..={}, requested {}..={}",
            limits.start(),
            limits.end(),
            r.start(),
            r.end()
        )));
    }
    Ok(r)
}

fn graph_summary_task(
    summary: &'static Claim,
    orbits: &'static Claim,
    suffix: String,
    build: fn() -> Result<Graph>,
) -> Task {
    task(summary, suffix.clone(), move |rows| {
        let g = build()?;
        let r = in_f_ham(&g)?;
        rows.report(summary, &suffix, orbit_summary(&r));
        rows.check(orbits, &suffix, true, orbit_stabilizer_holds(&r));
        Ok(())
    })
}

pub(super) fn heawood() -> Vec<Task> {
    let basics = task(&c::HEAWOOD_COUNT, String::new(), |rows| {
        let h = heawood_graph();
        let rim = HamCycle::new(&h, (0..14).collect())?;
        rows.check(&c::HEAWOOD_COUNT, "", c::HEAWOOD_CYCLES, count_hamiltonian_cycles(&h));
        let rep = fixing_report(rim.edges(), &h)?;
        rows.check(&c::HEAWOOD_AUT, "", c::HEAWOOD_AUT_ORDER, rep.aut_g);
        rows.check(&c::HEAWOOD_STAB, "", c::HEAWOOD_RIM_STAB, rep.stab);
        rows.check(&c::HEAWOOD_AUT_C, "", c::HEAWOOD_RIM_AUT, rep.aut_u);
        rows.check(&c::HEAWOOD_X, "", c::HEAWOOD_RIM_X, rep.x);
        rows.check(&c::HEAWOOD_FIXING, "", true, rep.fixing);
        rows.check(&c::HEAWOOD_STRONG, "", false, rep.strong_fixing);
        Ok(())
    });
    let p = task(&c::HEAWOOD_P, String::new(), |rows| {
        let h = heawood_graph();
        let rim = HamCycle::new(&h, (0..14).collect())?;
        let expected: BTreeMap<usize, usize> = c::HEAWOOD_P_DISTRIBUTION.iter().copied().collect();
        rows.check(&c::HEAWOOD_P, "", expected, p_distribution(&h, &rim)?);
        let r = in_f_ham(&h)?;
        rows.check(&c::HEAWOOD_ORBITS, "", true, orbit_stabilizer_holds(&r));
        Ok(())
    });
    vec![basics, p]
}

pub(super) fn dodecahedron() -> Vec<Task> {
    vec![task(&c::DODECA_COUNT, String::new(), |rows| {
        let g = make_generalized_petersen(10, 2)?;
        let r = in_f_ham(&g)?;
        rows.check(&c::DODECA_COUNT, "", c::DODECA_CYCLES as u128, r.cycle_count);
        rows.check(&c::DODECA_AUT, "", c::DODECA_AUT_ORDER, r.aut_order);
        rows.check(&c::DODECA_STAB, "", vec![c::DODECA_STAB_ORDER], distinct_stabs(&r));
        rows.check(&c::DODECA_FHAM, "", true, r.in_f_ham);
        rows.check(&c::DODECA_ORBITS, "", true, orbit_stabilizer_holds(&r));
        Ok(())
    })]
}

pub(super) fn cage8() -> Vec<Task> {
    vec![task(&c::CAGE8_COUNT, String::new(), |rows| {
        let g = tutte_8cage();
        let r = in_f_ham(&g)?;
        rows.check(&c::CAGE8_COUNT, "", c::CAGE8_CYCLES as u128, r.cycle_count);
        rows.check(&c::CAGE8_AUT, "", c::CAGE8_AUT_ORDER, r.aut_order);
        rows.check(&c::CAGE8_STAB, "", vec![c::CAGE8_STAB_ORDER], distinct_stabs(&r));
        rows.check(&c::CAGE8_FHAM, "", true, r.in_f_ham);
        rows.check(&c::CAGE8_ORBITS, "", true, orbit_stabilizer_holds(&r));
        if let Some(o) = r.orbits.first() {
            rows.report(&c::CAGE8_X, "", extension_count(o.representative.edges(), &g)?);
        }
        Ok(())
    })]
}

pub(super) fn lk33() -> Vec<Task> {
    vec![task(&c::LK33_FHAM, String::new(), |rows| {
        let g = line_k33();
        let r = in_f_ham(&g)?;
        rows.check(&c::LK33_FHAM, "", false, r.in_f_ham);
        rows.report(&c::LK33_SUMMARY, "", orbit_summary(&r));
        rows.check(&c::LK33_ORBITS, "", true, orbit_stabilizer_holds(&r));
        Ok(())
    })]
}

pub(super) fn claim() -> Vec<Task> {
    (5..=16)
        .map(|n| {
            task(&c::CLAIM_AUT, nn(n), move |rows| {
                let g = make_generalized_petersen(n, 2)?;
                let a = PermutationGroup::automorphism_group(&g)?;
                match n {
                    5 => {
                        rows.report(&c::CLAIM_AUT, &nn(n), a.order());
                    }
                    10 => {
                        rows.check(&c::CLAIM_AUT, &nn(n), c::DODECA_AUT_ORDER, a.order());
                    }
                    _ => {
                        rows.check(&c::CLAIM_AUT, &nn(n), 2 * n as u128, a.order());
                        rows.check(&c::CLAIM_DIHEDRAL, &nn(n), true, a == gp_dihedral(n)?);
                    }
                }
                Ok(())
            })
        })
        .collect()
}

pub(super) fn exceptional() -> Vec<Task> {
    fn g83() -> Result<Graph> {
        make_generalized_petersen(8, 3)
    }
    fn g103() -> Result<Graph> {
        make_generalized_petersen(10, 3)
    }
    fn g125() -> Result<Graph> {
        make_generalized_petersen(12, 5)
    }
    fn g245() -> Result<Graph> {
        make_generalized_petersen(24, 5)
    }
    [("g08_3", g83 as fn() -> Result<Graph>), ("g10_3", g103), ("g12_5", g125), ("g24_5", g245)]
        .into_iter()
        .map(|(name, build)| graph_summary_task(&c::EXCEPTIONAL, &c::EXCEPTIONAL_ORBITS, name.to_string(), build))
        .collect()
}

/// Random `U ⊆ G` pairs on at most seven vertices, drawn from a fixed seed.
fn random_pairs() -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(c::THM1_SEED);
    (0..c::THM1_PAIRS)
        .map(|_| {
            let n = rng.gen_range(3..=c::THM1_MAX_VERTICES);
            let density = rng.gen_range(0.3..0.95);
            let keep = rng.gen_range(0.2..0.9);
            let mut g_edges = Vec::new();
            let mut u_edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density) {
                        g_edges.push((a, b));
                        if rng.gen_bool(keep) {
                            u_edges.push((a, b));
                        }
                    }
                }
            }
            let g = Graph::from_edges(n, g_edges).expect("valid edges");
            let u = Graph::from_edges(n, u_edges).expect("valid edges");
            (u, g)
        })
        .collect()
}

pub(super) fn thm1() -> Vec<Task> {
    random_pairs()
        .into_iter()
        .enumerate()
        .map(|(i, (u, g))| {
            let suffix = format!("p{i:03}");
            task(&c::THM1_IDENTITY, suffix.clone(), move |rows| {
                let aut_u = PermutationGroup::automorphism_group(&u)?.order();
                let aut_g = PermutationGroup::automorphism_group(&g)?.order();
                let s_direct = spanning_count_direct(&u, &g)?;
                let x_direct = extension_count_direct(&u, &g)?;
                let s = spanning_subgraph_count(&u, &g)?;
                let x = extension_count(&u, &g)?;
                rows.check(
                    &c::THM1_IDENTITY,
                    &suffix,
                    json!({ "autU*s": aut_g * x_direct, "s": s_direct, "x": x_direct }),
                    json!({ "autU*s": aut_u * s_direct, "s": s, "x": x }),
                )
                .detail = Some(json!({ "u": encode_graph6(&u), "g": encode_graph6(&g) }));
                Ok(())
            })
        })
        .collect()
}

pub(super) fn thm6(opts: &VerifyOptions) -> Result<Vec<Task>> {
    let default = if opts.slow { 3..=7 } else { 3..=6 };
    let range = check_range("thm6", opts.range.as_ref(), default, 3..=7)?;
    if *range.end() == 7 && !opts.slow {
        return Err(Error::Regime("thm6 at n = 7 enumerates 2^21 graphs; pass --slow".into()));
    }
    Ok(range
        .map(|n| {
            task(&c::THM6_FSTAR, nn(n), move |rows| {
                let census = connected_census(n)?;
                rows.check(&c::THM6_LABELED, &nn(n), c::LABELED_CONNECTED[n], census.labeled_connected);
                rows.check(&c::THM6_CLASSES, &nn(n), c::CONNECTED_CLASSES[n], census.classes.len());
                let flags = census.classes.par_iter().map(in_fstar_ham).collect::<Result<Vec<bool>>>()?;
                let members: Vec<&Graph> =
                    census.classes.iter().zip(&flags).filter(|(_, &f)| f).map(|(g, _)| g).collect();
                let mut computed: Vec<String> = members.iter().map(|g| encode_graph6(g)).collect();
                computed.sort();
                let mut expected_graphs = vec![make_cycle(n)?, make_complete(n)?];
                if n % 2 == 0 {
                    expected_graphs.push(make_complete_bipartite(n / 2, n / 2)?);
                }
                let mut expected: Vec<String> =
                    expected_graphs.iter().map(|g| encode_graph6(&canonical_labeling(g))).collect();
                expected.sort();
                expected.dedup();
                rows.check(&c::THM6_FSTAR, &nn(n), expected, computed);
                let mut circulant = true;
                for g in &members {
                    let cycles = enumerate_hamiltonian_cycles(g);
                    circulant &= circulant_difference_set(g, &cycles[0])?.is_some();
                }
                rows.check(&c::THM6_CIRCULANT, &nn(n), true, circulant);
                Ok(())
            })
        })
        .collect())
}

fn thm7_instance(rows: &mut Rows, n: usize, k: usize) -> Result<()> {
    let suffix = format!("k{k}.{}", nn(n));
    let pg = PetersenGraph::new(n, k)?;
    let r = in_f_ham(pg.graph())?;
    rows.check(&c::THM7_HAM, &suffix, expected_hamiltonicity(n, k)?, r.cycle_count > 0);
    let expected_f = if k == 1 { n % 2 == 1 || n == 4 } else { n % 6 == 1 || n % 6 == 3 || n == 10 };
    rows.check(&c::THM7_FHAM, &suffix, expected_f, r.in_f_ham);
    rows.check(&c::THM7_ORBITS, &suffix, true, orbit_stabilizer_holds(&r));
    let classes = pg.label_orbits(&r.orbits)?;
    if k == 1 {
        let long = RimSignature::new(vec![n - 1])?;
        let long_classes = classes_of(&classes, &long);
        rows.check(&c::THM7_K1_LONG, &nn(n), true, !long_classes.is_empty());
        if n.is_multiple_of(2) {
            let alt = classes_of(&classes, &RimSignature::repeated(1, n / 2)?);
            rows.check(
                &c::THM7_K1_ALT,
                &nn(n),
                json!({ "realized": true, "sameOrbitAsLong": n == 4 }),
                json!({ "realized": !alt.is_empty(), "sameOrbitAsLong": alt.iter().any(|i| long_classes.contains(i)) }),
            );
        }
        return Ok(());
    }
    match n % 6 {
        0 | 2 | 4 if n != 10 => {
            let w = thm7_case2_witnesses(n)?;
            let mut readings = serde_json::Map::new();
            let mut realizable = Vec::new();
            let mut best: Option<(usize, bool)> = None;
            for (name, ks) in [("strict", &w.strict), ("withThree", &w.with_three)] {
                let orbits = ks
                    .iter()
                    .map(|&kk| Ok(classes_of(&classes, &case2_signature(n, kk)?)))
                    .collect::<Result<Vec<_>>>()?;
                let all_realized = orbits.iter().all(|o| !o.is_empty());
                let distinct = pairwise_disjoint(&orbits);
                readings.insert(
                    name.into(),
                    json!({ "k": ks, "orbits": orbits, "allRealized": all_realized, "pairwiseDistinct": distinct }),
                );
                if all_realized {
                    realizable.push(name);
                    if best.is_none_or(|(count, _)| ks.len() > count) {
                        best = Some((ks.len(), distinct));
                    }
                }
            }
            readings.insert("realizable".into(), json!(realizable));
            let (count, distinct) = best.unwrap_or((0, false));
            rows.check(
                &c::THM7_CASE2,
                &nn(n),
                json!({ "atLeastTwo": true, "pairwiseDistinct": true }),
                json!({ "atLeastTwo": count >= 2, "pairwiseDistinct": distinct }),
            );
            rows.report(&c::THM7_CASE2_READINGS, &nn(n), Value::Object(readings));
        }
        1 | 3 => {
            let expected = if n % 6 == 3 {
                RimSignature::repeated(2, n / 3)?
            } else {
                let mut v = vec![2; n.div_ceil(3) - 2];
                v.extend([1, 1]);
                RimSignature::new(v)?
            };
            let mut found: Vec<String> =
                classes.iter().flat_map(|c| c.signatures.iter().map(ToString::to_string)).collect();
            found.sort();
            found.dedup();
            rows.check(&c::THM7_CASE3, &nn(n), vec![expected.to_string()], found);
        }
        _ => {}
    }
    Ok(())
}

pub(super) fn thm7(opts: &VerifyOptions) -> Result<Vec<Task>> {
    let ks = match opts.k {
        None => vec![1, 2],
        Some(k @ (1 | 2)) => vec![k],
        Some(k) => return Err(Error::InvalidParameter(format!("thm7 covers k = 1 or 2, got {k}"))),
    };
    let mut tasks = Vec::new();
    for k in ks {
        let (default, limits) = if k == 1 { (3..=14, 3..=20) } else { (6..=20, 5..=20) };
        let range = check_range("thm7", opts.range.as_ref(), default, limits)?;
        for n in range {
            tasks.push(task(&c::THM7_FHAM, format!("k{k}.{}", nn(n)), move |rows| thm7_instance(rows, n, k)));
        }
    }
    Ok(tasks)
}

fn thm8_instance(rows: &mut Rows, n: usize) -> Result<()> {
    let pg = PetersenGraph::new(n, 3)?;
    let r = in_f_ham(pg.graph())?;
    rows.check(&c::THM8_ORBITS, &nn(n), true, orbit_stabilizer_holds(&r));
    if n == 8 || n == 10 {
        rows.report(&c::THM8_EXCLUDED, &nn(n), orbit_summary(&r));
        return Ok(());
    }
    rows.check(&c::THM8_HAM, &nn(n), expected_hamiltonicity(n, 3)?, r.cycle_count > 0);
    rows.check(&c::THM8_FHAM, &nn(n), false, r.in_f_ham);
    let classes = pg.label_orbits(&r.orbits)?;
    match thm8_witnesses(n) {
        Ok(w) => {
            let a = classes_of(&classes, &w.first);
            let b = classes_of(&classes, &w.second);
            rows.check(
                &c::THM8_WITNESSES,
                &nn(n),
                json!({ "realized": true, "distinct": true }),
                json!({ "realized": !a.is_empty() && !b.is_empty(), "distinct": pairwise_disjoint(&[a, b]) }),
            );
            rows.report(
                &c::THM8_SIGNATURES,
                &nn(n),
                json!({
                    "first": w.first.to_string(),
                    "firstSource": w.first_source.to_string(),
                    "second": w.second.to_string(),
                    "secondSource": w.second_source.to_string(),
                }),
            );
        }
        Err(e) => {
            let signatures: Vec<Vec<String>> =
                classes.iter().map(|c| c.signatures.iter().map(ToString::to_string).collect()).collect();
            rows.check(
                &c::THM8_WITNESSES,
                &nn(n),
                json!({ "realized": true, "distinct": true }),
                json!({ "error": e.to_string() }),
            );
            rows.report(&c::THM8_SIGNATURES, &nn(n), json!({ "orbitSignatures": signatures }));
        }
    }
    Ok(())
}

pub(super) fn thm8(opts: &VerifyOptions) -> Result<Vec<Task>> {
    let range = check_range("thm8", opts.range.as_ref(), 7..=16, 7..=16)?;
    Ok(range.map(|n| task(&c::THM8_FHAM, nn(n), move |rows| thm8_instance(rows, n))).collect())
}
