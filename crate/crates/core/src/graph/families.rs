use super::{bit, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// The cycle `C_n` on `0..n` in cyclic order.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite graph needs both parts nonempty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Circulant graph on `Z_n`: `i ~ j` iff `(j - i) mod n` lies in `diffs`.
///
/// Residues may be given as any integers; they are reduced mod `n`. The
/// reduced set must avoid 0 and be closed under negation.
pub fn make_circulant(n: usize, diffs: &[i64]) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut set = 0u64;
    for &d in diffs {
        let r = d.rem_euclid(n as i64) as usize;
        if r == 0 {
            return Err(invalid("circulant difference set contains 0"));
        }
        set |= bit(r);
    }
    for r in super::bits(set) {
        if set & bit((n - r) % n) == 0 {
            return Err(invalid(format!("circulant difference set not symmetric: {r} without {}", n - r)));
        }
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for r in super::bits(set) {
            let j = (i + r) % n;
            if i < j {
                g.insert_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Generalized Petersen graph `G(n, k)`: rim `0..n`, inner vertices `n..2n`,
/// spokes `i ~ n+i` and inner edges `n+i ~ n+(i+k mod n)`.
pub fn make_generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("G(n,k) needs n >= 3, got {n}")));
    }
    if k < 1 || 2 * k >= n {
        return Err(invalid(format!("G(n,k) needs 1 <= k < n/2, got n={n}, k={k}")));
    }
    if 2 * n > MAX_VERTICES {
        return Err(Error::VertexCount(2 * n));
    }
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    Graph::from_edges(2 * n, rim.chain(spokes).chain(inner))
}

/// Hamiltonian cycle `0..n` plus chords given in LCF notation: vertex `i`
/// is joined to `i + chords[i mod len]`.
pub fn make_lcf(n: usize, chords: &[i64]) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(format!("LCF graphs need an even n >= 4, got {n}")));
    }
    if chords.is_empty() || !n.is_multiple_of(chords.len()) {
        return Err(invalid("LCF chord pattern length must divide n"));
    }
    let mut g = make_cycle(n)?;
    let target: Vec<usize> =
        (0..n).map(|i| (i as i64 + chords[i % chords.len()]).rem_euclid(n as i64) as usize).collect();
    for (i, &j) in target.iter().enumerate() {
        if j == i || j == (i + 1) % n || (j + 1) % n == i {
            return Err(invalid(format!("LCF chord {i}-{j} is not a chord of the cycle")));
        }
        if target[j] != i {
            return Err(invalid(format!("LCF chord from {i} lands on {j}, whose chord goes to {}", target[j])));
        }
        if i < j {
            g.insert_edge(i, j)?;
        }
    }
    Ok(g)
}

/// The Heawood graph as `[5, -5]^7`, so `0..14` is a Hamiltonian cycle and
/// even vertices `i` are joined to `i + 5`.
pub fn heawood() -> Graph {
    make_lcf(14, &[5, -5]).expect("Heawood LCF is valid")
}

/// Tutte's 8-cage as `[-13, -9, 7, -7, 9, 13]^5`.
pub fn tutte_8cage() -> Graph {
    make_lcf(30, &[-13, -9, 7, -7, 9, 13]).expect("Tutte 8-cage LCF is valid")
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in sorted order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() || edges.len() > MAX_VERTICES {
        return Err(Error::VertexCount(edges.len()));
    }
    let mut l = Graph::empty(edges.len())?;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.insert_edge(i, j)?;
            }
        }
    }
    Ok(l)
}

pub fn line_k33() -> Graph {
    line_graph(&make_complete_bipartite(3, 3).expect("K33")).expect("L(K33)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_examples() {
        assert_eq!(make_cycle(3).unwrap().edge_count(), 3);
        assert_eq!(make_cycle(14).unwrap().edge_count(), 14);
        let c6 = make_cycle(6).unwrap();
        assert_eq!(c6.degrees(), vec![2; 6]);
        assert!(c6.is_connected());
        assert!(make_cycle(2).is_err());
    }

    #[test]
    fn complete_examples() {
        let k4 = make_complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
        assert_eq!(k4.girth(), Some(3));
        assert_eq!(make_complete(6).unwrap().edge_count(), 15);
        assert_eq!(make_complete(1).unwrap().edge_count(), 0);
        assert!(make_complete(0).is_err());
    }

    #[test]
    fn complete_bipartite_examples() {
        let k33 = make_complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(k33.regular_degree(), Some(3));
        assert!(k33.is_bipartite());
        assert_eq!(k33.girth(), Some(4));
        assert!((0..3).all(|u| (0..3).all(|v| !k33.has_edge(u, v))));
        assert_eq!(make_complete_bipartite(1, 1).unwrap().edges(), vec![(0, 1)]);
        let k22 = make_complete_bipartite(2, 2).unwrap();
        assert!(k22.is_isomorphic(&make_cycle(4).unwrap()));
        assert!(make_complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn circulant_examples() {
        assert_eq!(make_circulant(5, &[1, -1]).unwrap(), make_cycle(5).unwrap());
        let c = make_circulant(6, &[1, -1, 3]).unwrap();
        assert_eq!(c.regular_degree(), Some(3));
        assert!(c.is_isomorphic(&make_complete_bipartite(3, 3).unwrap()));
        assert_eq!(make_circulant(5, &[1, -1, 2, -2]).unwrap(), make_complete(5).unwrap());
        assert!(make_circulant(5, &[0, 1, 4]).is_err());
        assert!(make_circulant(5, &[5]).is_err());
        assert!(make_circulant(6, &[1, 2, 4]).is_err());
    }

    #[test]
    fn petersen_family_examples() {
        let p = make_generalized_petersen(5, 2).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.girth()), (10, 15, Some(5)));
        let cube = make_generalized_petersen(4, 1).unwrap();
        assert_eq!((cube.n(), cube.edge_count(), cube.girth()), (8, 12, Some(4)));
        assert!(cube.is_bipartite());
        assert_eq!(make_generalized_petersen(10, 2).unwrap().girth(), Some(5));
        assert!(make_generalized_petersen(4, 2).is_err());
        assert!(make_generalized_petersen(10, 5).is_err());
        assert!(make_generalized_petersen(10, 0).is_err());
        assert!(make_generalized_petersen(33, 2).is_err());
    }

    #[test]
    fn petersen_family_is_cubic() {
        for n in 3..=30 {
            for k in 1..n {
                if 2 * k >= n {
                    break;
                }
                let g = make_generalized_petersen(n, k).unwrap();
                assert_eq!(g.n(), 2 * n);
                assert_eq!(g.edge_count(), 3 * n);
                assert_eq!(g.regular_degree(), Some(3), "G({n},{k})");
            }
        }
    }

    #[test]
    fn circulant_degree_is_difference_set_size() {
        for n in 3..=30usize {
            for half in 1..=n / 2 {
                let mut d: Vec<i64> = (1..=half as i64).collect();
                d.extend((1..=half as i64).map(|x| -x));
                let g = make_circulant(n, &d).unwrap();
                let size = if 2 * half == n { 2 * half - 1 } else { 2 * half };
                assert_eq!(g.regular_degree(), Some(size), "n={n}, half={half}");
            }
        }
    }

    #[test]
    fn cages() {
        let h = heawood();
        assert_eq!((h.n(), h.edge_count(), h.regular_degree(), h.girth()), (14, 21, Some(3), Some(6)));
        assert!(h.is_bipartite());
        assert!(h.has_edge(0, 5) && h.has_edge(1, 10));
        let t = tutte_8cage();
        assert_eq!((t.n(), t.edge_count(), t.regular_degree(), t.girth()), (30, 45, Some(3), Some(8)));
    }

    #[test]
    fn lcf_examples_and_errors() {
        let g = make_lcf(6, &[3, 3]).unwrap();
        assert!(g.is_isomorphic(&make_complete_bipartite(3, 3).unwrap()));
        assert!(make_lcf(6, &[1]).is_err());
        assert!(make_lcf(6, &[2]).is_err());
        assert!(make_lcf(7, &[3]).is_err());
        assert!(make_lcf(8, &[3, 3, 3]).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let l = line_k33();
        assert_eq!((l.n(), l.edge_count(), l.regular_degree()), (9, 18, Some(4)));
        let c5 = make_cycle(5).unwrap();
        assert!(line_graph(&c5).unwrap().is_isomorphic(&c5));
        let oct = line_graph(&make_complete(4).unwrap()).unwrap();
        assert_eq!(oct.regular_degree(), Some(4));
        assert!(oct.is_isomorphic(&make_circulant(6, &[1, -1, 2, -2]).unwrap()));
    }
}
