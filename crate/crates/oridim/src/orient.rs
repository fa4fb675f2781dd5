//! Exhaustive orientation enumeration and the orientation metric dimension
//! ORD(G): the largest dimension attained by any qualifying orientation of
//! an undirected graph G.
//!
//! Orientations are indexed by bitmask over the sorted edge list: bit i
//! clear orients edge i from its smaller to its larger endpoint, bit i set
//! reverses it. Enumeration walks masks in ascending order, so reported
//! witnesses are the least mask attaining each dimension.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::io::{parse_pairs, ParseError};
use crate::resolver::{metric_dimension, DimMode};

/// Orientation enumeration refuses graphs with more edges than this unless
/// the caller raises the budget explicitly.
pub const DEFAULT_EDGE_BUDGET: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientError {
    #[error(
        "enumerating all {count} orientations needs an edge budget of at \
         least {edges} (current budget {budget})"
    )]
    BudgetExceeded {
        edges: usize,
        budget: usize,
        count: String,
    },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Simple undirected graph on vertices `0..n` with a canonical sorted edge
/// list, the base object for orientation enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, OrientError> {
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(OrientError::OutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(OrientError::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(OrientError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(UndirectedGraph { n, edges: canon })
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        UndirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        assert!(n >= 2, "a path needs at least 2 vertices");
        UndirectedGraph::new(n, (0..n - 1).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    /// Wheel in family numbering: hub 0, rim 1..=n.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 3, "a wheel needs a rim of at least 3");
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
        edges.extend((1..n).map(|i| (i, i + 1)));
        edges.push((1, n));
        UndirectedGraph::new(n + 1, edges).expect("wheel edges are valid")
    }

    /// Fan in family numbering: centers 0..m, path m..m+n.
    pub fn fan(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 2, "a fan needs m >= 1 and n >= 2");
        let v = |i: usize| m + i - 1;
        let mut edges = Vec::new();
        for c in 0..m {
            for i in 1..=n {
                edges.push((c, v(i)));
            }
        }
        edges.extend((1..n).map(|i| (v(i), v(i + 1))));
        UndirectedGraph::new(m + n, edges).expect("fan edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        UndirectedGraph::new(n, edges).expect("complete graph edges are valid")
    }

    /// Reads the shared edge-list format, treating each `u v` line as an
    /// undirected edge.
    pub fn parse(text: &str) -> Result<Self, OrientError> {
        let (n, pairs) = parse_pairs(text)?;
        UndirectedGraph::new(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The orientation selected by `mask`, one bit per edge.
    pub fn orientation(&self, mask: u64) -> Digraph {
        let mut arcs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        arcs.sort_unstable();
        Digraph::from_sorted_arcs_unchecked(self.n, arcs)
    }

    fn check_budget(&self, budget: usize) -> Result<u64, OrientError> {
        let m = self.edges.len();
        if m > budget || m >= 64 {
            return Err(OrientError::BudgetExceeded {
                edges: m,
                budget,
                count: format!("2^{m}"),
            });
        }
        Ok(1u64 << m)
    }
}

/// All orientations in ascending mask order.
pub fn enumerate_orientations(
    g: &UndirectedGraph,
    budget: usize,
) -> Result<impl Iterator<Item = (u64, Digraph)> + '_, OrientError> {
    let count = g.check_budget(budget)?;
    Ok((0..count).map(move |mask| (mask, g.orientation(mask))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationWitness {
    pub bitmask: u64,
    pub arcs: Vec<(usize, usize)>,
}

/// Exhaustive summary of the dimensions over all orientations of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub mode: DimMode,
    pub total_orientations: u64,
    pub strong_count: u64,
    /// Largest dimension over qualifying orientations; absent when none
    /// qualify (for example a tree in require-strong mode).
    pub ord: Option<usize>,
    pub spectrum: Vec<usize>,
    pub dimension_counts: BTreeMap<usize, u64>,
    /// Least-mask orientation attaining each dimension in the spectrum.
    pub witnesses: BTreeMap<usize, OrientationWitness>,
}

#[derive(Default, Clone)]
struct Partial {
    strong: u64,
    counts: BTreeMap<usize, u64>,
    least_mask: BTreeMap<usize, u64>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.strong += other.strong;
        for (k, c) in other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        for (k, m) in other.least_mask {
            self.least_mask
                .entry(k)
                .and_modify(|cur| *cur = (*cur).min(m))
                .or_insert(m);
        }
    }
}

fn classify(g: &UndirectedGraph, mask: u64, mode: DimMode) -> (bool, Option<usize>) {
    let d = g.orientation(mask);
    let strong = d.is_strongly_connected();
    if mode == DimMode::RequireStrong && !strong {
        return (false, None);
    }
    let dim = metric_dimension(&d, mode, false)
        .expect("qualifying orientations always have a dimension")
        .dimension;
    (strong, Some(dim))
}

/// Computes ORD(G) by scanning every orientation. The scan is split across
/// the current rayon pool; the merge is associative and commutative, so the
/// report does not depend on the worker count.
pub fn ord(g: &UndirectedGraph, mode: DimMode, budget: usize) -> Result<OrdReport, OrientError> {
    let total = g.check_budget(budget)?;
    let merged = (0..total)
        .into_par_iter()
        .fold(Partial::default, |mut p, mask| {
            let (strong, dim) = classify(g, mask, mode);
            if strong {
                p.strong += 1;
            }
            if let Some(k) = dim {
                *p.counts.entry(k).or_insert(0) += 1;
                p.least_mask
                    .entry(k)
                    .and_modify(|cur| *cur = (*cur).min(mask))
                    .or_insert(mask);
            }
            p
        })
        .reduce(Partial::default, |mut a, b| {
            a.absorb(b);
            a
        });
    let spectrum: Vec<usize> = merged.counts.keys().copied().collect();
    let witnesses = merged
        .least_mask
        .iter()
        .map(|(&k, &mask)| {
            let w = OrientationWitness {
                bitmask: mask,
                arcs: g.orientation(mask).arcs().to_vec(),
            };
            (k, w)
        })
        .collect();
    Ok(OrdReport {
        n: g.n,
        edges: g.edges.clone(),
        mode,
        total_orientations: total,
        strong_count: merged.strong,
        ord: spectrum.last().copied(),
        spectrum,
        dimension_counts: merged.counts,
        witnesses,
    })
}

/// The set of dimensions attained over all qualifying orientations.
pub fn dim_spectrum(
    g: &UndirectedGraph,
    mode: DimMode,
    budget: usize,
) -> Result<Vec<usize>, OrientError> {
    Ok(ord(g, mode, budget)?.spectrum)
}

/// Per-orientation row for the optional scan log, in ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationRecord {
    pub bitmask: u64,
    pub strong: bool,
    pub dimension: Option<usize>,
}

pub fn orientation_log(
    g: &UndirectedGraph,
    mode: DimMode,
    budget: usize,
) -> Result<Vec<OrientationRecord>, OrientError> {
    let total = g.check_budget(budget)?;
    Ok((0..total)
        .into_par_iter()
        .map(|mask| {
            let (strong, dimension) = classify(g, mask, mode);
            OrientationRecord {
                bitmask: mask,
                strong,
                dimension,
            }
        })
        .collect())
}
