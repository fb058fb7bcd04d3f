//! Exhaustive census of small connected graphs up to isomorphism.
//!
//! Every labeled edge set on `n` vertices is generated, disconnected ones are
//! dropped, and the rest are collapsed by canonical labeling. Work is split
//! over the current rayon pool; the result is sorted, so it does not depend
//! on the number of threads.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::canonical_labeling;

/// Largest `n` the census accepts (`2^21` labeled graphs).
pub const CENSUS_MAX_VERTICES: usize = 7;

const CHUNK_BITS: u32 = 12;

/// Connected graphs on `n` vertices, one canonical representative per
/// isomorphism class, plus the number of labeled connected graphs seen.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub labeled_connected: u64,
    pub classes: Vec<Graph>,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

pub fn connected_census(n: usize) -> Result<Census> {
    if n == 0 || n > CENSUS_MAX_VERTICES {
        return Err(Error::Regime(format!("census needs 1 <= n <= {CENSUS_MAX_VERTICES}, got {n}")));
    }
    let pairs = pairs(n);
    let total: u64 = 1 << pairs.len();
    let chunk = 1u64 << CHUNK_BITS.min(pairs.len() as u32);
    let (labeled, classes) = (0..total / chunk)
        .into_par_iter()
        .map(|c| {
            let mut seen = BTreeSet::new();
            let mut labeled = 0u64;
            for mask in c * chunk..(c + 1) * chunk {
                let g = graph_from_mask(n, &pairs, mask);
                if g.is_connected() {
                    labeled += 1;
                    seen.insert(canonical_labeling(&g));
                }
            }
            (labeled, seen)
        })
        .reduce(
            || (0, BTreeSet::new()),
            |(la, mut a), (lb, b)| {
                a.extend(b);
                (la + lb, a)
            },
        );
    Ok(Census { n, labeled_connected: labeled, classes: classes.into_iter().collect() })
}
