//! Directed distances and the all-pairs distance matrix.

use std::fmt;

use serde::{Serialize, Serializer};

/// Length of a shortest directed path, or the sentinel for "no path".
///
/// The sentinel compares strictly greater than every finite value, so
/// ordering and equality work uniformly whether or not the digraph is
/// strongly connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Unreachable,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(k) => Some(k),
            Dist::Unreachable => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(k) => write!(f, "{k}"),
            Dist::Unreachable => write!(f, "INF"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(k) => s.serialize_u32(*k),
            Dist::Unreachable => s.serialize_str("INF"),
        }
    }
}

/// Row-major matrix of directed distances: `get(u, v)` is the length of a
/// shortest path from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub(crate) fn from_rows(n: usize, d: Vec<Dist>) -> Self {
        assert_eq!(d.len(), n * n);
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex, indexed by target.
    pub fn row(&self, u: usize) -> &[Dist] {
        assert!(u < self.n, "vertex out of range");
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// True when every ordered pair is joined by a directed path.
    pub fn is_complete(&self) -> bool {
        self.d.iter().all(|d| d.is_finite())
    }

    /// First ordered pair (u, v) with no directed path from u to v.
    pub fn first_unreachable_pair(&self) -> Option<(usize, usize)> {
        self.d
            .iter()
            .position(|d| !d.is_finite())
            .map(|i| (i / self.n, i % self.n))
    }

    /// Matrix with the roles of source and target swapped.
    pub fn transposed(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                d.push(self.get(v, u));
            }
        }
        DistanceMatrix { n, d }
    }
}
