//! Total orders on the vertex set.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A total order `<` on `0..n`, stored as the rank of every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    rank: Vec<usize>,
}

impl VertexOrdering {
    /// `v_0 < v_1 < ... < v_{n-1}`.
    pub fn standard(n: usize) -> Self {
        Self { rank: (0..n).collect() }
    }

    /// Builds the order from the vertices listed smallest first.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (position, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrdering { n });
            }
            rank[v] = position;
        }
        Ok(Self { rank })
    }

    /// Builds the order from `rank[v]`.
    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        let mut seen = vec![false; n];
        for &r in &rank {
            if r >= n || seen[r] {
                return Err(Error::InvalidOrdering { n });
            }
            seen[r] = true;
        }
        Ok(Self { rank })
    }

    /// The reverse order `<_r`: `u <_r v` iff `v < u`.
    pub fn reverse(&self) -> Self {
        let n = self.rank.len();
        Self { rank: self.rank.iter().map(|&r| n - 1 - r).collect() }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn less(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }

    /// Vertices listed smallest first.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            seq[r] = v;
        }
        seq
    }

    pub fn is_standard(&self) -> bool {
        self.rank.iter().enumerate().all(|(v, &r)| v == r)
    }
}
