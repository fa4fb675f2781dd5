//! Oriented graphs on dense vertex ids with validated arc sets.
//!
//! Vertices are `0..n`. An arc set is accepted only if it describes an
//! orientation of a simple graph: no self-loops, no duplicate arcs, and
//! never both `(u, v)` and `(v, u)`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::distance::{Dist, DistanceMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("edge {{{0}, {1}}} carries both orientations")]
    OppositeArcs(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph on vertices `0..n`, normalizing the arc order.
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(DigraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(DigraphError::SelfLoop(u));
            }
        }
        arcs.sort_unstable();
        for w in arcs.windows(2) {
            if w[0] == w[1] {
                return Err(DigraphError::DuplicateArc(w[0].0, w[0].1));
            }
        }
        for &(u, v) in &arcs {
            // binary search is fine here; the arc list is already sorted
            if u < v && arcs.binary_search(&(v, u)).is_ok() {
                return Err(DigraphError::OppositeArcs(u, v));
            }
        }
        Ok(Self::from_sorted_arcs_unchecked(n, arcs))
    }

    /// Internal fast path for arc sets already known to be valid and sorted.
    pub(crate) fn from_sorted_arcs_unchecked(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for adj in &mut in_adj {
            adj.sort_unstable();
        }
        Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
        }
    }

    /// Directed cycle v0 -> v1 -> ... -> v(n-1) -> v0.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 3, "a directed cycle needs at least 3 vertices");
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, arcs).expect("cycle arcs are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// Digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Digraph::from_sorted_arcs_unchecked(self.n, arcs)
    }

    /// BFS distances from `src` to every vertex.
    pub fn distances_from(&self, src: usize) -> Vec<Dist> {
        assert!(src < self.n, "vertex out of range");
        let mut dist = vec![Dist::Unreachable; self.n];
        dist[src] = Dist::Finite(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u] {
                Dist::Finite(k) => k,
                Dist::Unreachable => unreachable!(),
            };
            for &w in &self.out_adj[u] {
                if dist[w] == Dist::Unreachable {
                    dist[w] = Dist::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs directed distances by BFS from every source.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            d.extend(self.distances_from(u));
        }
        DistanceMatrix::from_rows(self.n, d)
    }

    /// True when every vertex reaches every other by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reaches_all_from(0, &self.out_adj) && self.reaches_all_from(0, &self.in_adj)
    }

    fn reaches_all_from(&self, src: usize, adj: &[Vec<usize>]) -> bool {
        let mut seen = vec![false; self.n];
        seen[src] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }
}
