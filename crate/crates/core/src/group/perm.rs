use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph, MAX_VERTICES};

/// A permutation of `0..n`, `n <= 64`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Self { images: (0..n as u8).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut seen = 0u64;
        for &x in &images {
            if x >= n || seen & bit(x) != 0 {
                return Err(Error::Permutation(format!("{images:?} is not a bijection on 0..{n}")));
            }
            seen |= bit(x);
        }
        Ok(Self { images: images.into_iter().map(|x| x as u8).collect() })
    }

    /// Cyclic shift `i -> i + 1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Self { images: (0..n).map(|i| ((i + 1) % n) as u8).collect() }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), next.degree());
        Perm { images: self.images.iter().map(|&x| next.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    #[inline]
    pub fn map_mask(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |acc, v| acc | bit(self.images[v] as usize))
    }

    /// True when the permutation maps the edge set of `g` onto itself.
    pub fn preserves(&self, g: &Graph) -> bool {
        self.degree() == g.n()
            && (0..g.n()).all(|u| self.map_mask(g.neighbors_mask(u)) == g.neighbors_mask(self.image(u)))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Permutation(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }
}
