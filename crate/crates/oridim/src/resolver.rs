//! Resolving sets and the exact metric dimension of a digraph.
//!
//! A vertex subset `B` resolves a digraph when the vectors of directed
//! distances *from* each vertex *to* the members of `B` are pairwise
//! distinct. The dimension is the size of a smallest resolving set.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::distance::{Dist, DistanceMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolverError {
    #[error("vertex {v} out of range 0..{n}")]
    OutOfRange { v: usize, n: usize },
    #[error(
        "dimension undefined under the strong-connectivity convention: \
         no directed path from {from} to {to}"
    )]
    DimensionUndefined { from: usize, to: usize },
    #[error("subset search supports at most 64 vertices, got {0}")]
    TooManyVertices(usize),
}

/// How to treat digraphs that are not strongly connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DimMode {
    /// Refuse to define a dimension when some pair is unreachable.
    #[serde(rename = "require-strong")]
    RequireStrong,
    /// Compare unreachable entries through the sentinel, so every digraph
    /// has a dimension (the full vertex set always resolves).
    #[serde(rename = "allow-sentinel")]
    AllowSentinel,
}

impl fmt::Display for DimMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimMode::RequireStrong => write!(f, "require-strong"),
            DimMode::AllowSentinel => write!(f, "allow-sentinel"),
        }
    }
}

impl FromStr for DimMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "require-strong" => Ok(DimMode::RequireStrong),
            "allow-sentinel" => Ok(DimMode::AllowSentinel),
            other => Err(format!(
                "unknown mode `{other}` (expected require-strong or allow-sentinel)"
            )),
        }
    }
}

/// Distance vector of one vertex with respect to an ordered base set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub base: Vec<usize>,
    pub values: Vec<Dist>,
}

pub fn representation(
    dm: &DistanceMatrix,
    v: usize,
    base: &[usize],
) -> Result<Representation, ResolverError> {
    let n = dm.n();
    if v >= n {
        return Err(ResolverError::OutOfRange { v, n });
    }
    if let Some(&b) = base.iter().find(|&&b| b >= n) {
        return Err(ResolverError::OutOfRange { v: b, n });
    }
    Ok(Representation {
        base: base.to_vec(),
        values: base.iter().map(|&b| dm.get(v, b)).collect(),
    })
}

/// True when all vertex representations with respect to `base` are distinct.
pub fn is_resolving(dm: &DistanceMatrix, base: &[usize]) -> bool {
    let n = dm.n();
    let mut vectors: Vec<Vec<Dist>> = (0..n)
        .map(|v| base.iter().map(|&b| dm.get(v, b)).collect())
        .collect();
    vectors.sort_unstable();
    vectors.windows(2).all(|w| w[0] != w[1])
}

/// Unordered pairs {x, y} whose distance rows agree at every column other
/// than x and y. No resolving set can omit both members of such a pair,
/// which yields both a search pruning rule and a lower-bound certificate.
pub fn distance_twin_pairs(dm: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = dm.n();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let twin = (0..n)
                .filter(|&u| u != x && u != y)
                .all(|u| dm.get(x, u) == dm.get(y, u));
            if twin {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisResult {
    pub dimension: usize,
    /// Lexicographically least minimum resolving set.
    pub basis: Vec<usize>,
    /// Every minimum resolving set, in lexicographic order; only populated
    /// when requested.
    pub all_min_bases: Option<Vec<Vec<usize>>>,
}

/// Exact minimum resolving set by cardinality-ascending subset search.
///
/// Subsets at each cardinality are visited in lexicographic order, so the
/// first hit is the lexicographically least basis. Subsets missing a twin
/// pair are skipped.
pub fn metric_dimension(
    d: &Digraph,
    mode: DimMode,
    collect_all: bool,
) -> Result<BasisResult, ResolverError> {
    let n = d.n();
    if n > 64 {
        return Err(ResolverError::TooManyVertices(n));
    }
    let dm = d.distance_matrix();
    if mode == DimMode::RequireStrong {
        if let Some((from, to)) = dm.first_unreachable_pair() {
            return Err(ResolverError::DimensionUndefined { from, to });
        }
    }
    if n == 0 {
        return Ok(BasisResult {
            dimension: 0,
            basis: vec![],
            all_min_bases: collect_all.then(|| vec![vec![]]),
        });
    }
    let pair_masks: Vec<u64> = distance_twin_pairs(&dm)
        .iter()
        .map(|&(x, y)| (1 << x) | (1 << y))
        .collect();
    for k in 1..=n {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for subset in (0..n).combinations(k) {
            let mask: u64 = subset.iter().map(|&v| 1u64 << v).sum();
            if pair_masks.iter().any(|&pm| mask & pm == 0) {
                continue;
            }
            if is_resolving(&dm, &subset) {
                if !collect_all {
                    return Ok(BasisResult {
                        dimension: k,
                        basis: subset,
                        all_min_bases: None,
                    });
                }
                found.push(subset);
            }
        }
        if !found.is_empty() {
            return Ok(BasisResult {
                dimension: k,
                basis: found[0].clone(),
                all_min_bases: Some(found),
            });
        }
    }
    unreachable!("the full vertex set resolves every digraph");
}

/// Structural test for dimension exactly 1.
///
/// A strongly connected oriented digraph has a singleton resolving set
/// {v} precisely when some directed Hamiltonian path ends at v, the only
/// arc into v is the path's final arc, and the remaining arcs never jump
/// forward along the path. Forward jumps would shortcut the distances to
/// v that make the singleton representation injective.
pub fn is_dim_one_by_characterization(d: &Digraph) -> bool {
    let n = d.n();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    for v in 0..n {
        if d.in_degree(v) != 1 {
            continue;
        }
        // order[i] = vertex at distance i from v along the candidate path
        let mut order = vec![v];
        let mut used = vec![false; n];
        used[v] = true;
        if extend_backwards(d, &mut order, &mut used) {
            return true;
        }
    }
    false
}

fn extend_backwards(d: &Digraph, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if order.len() == d.n() {
        return no_forward_jumps(d, order);
    }
    let tail = *order.last().expect("order is never empty");
    for &p in d.in_neighbors(tail) {
        if used[p] {
            continue;
        }
        used[p] = true;
        order.push(p);
        if extend_backwards(d, order, used) {
            return true;
        }
        order.pop();
        used[p] = false;
    }
    false
}

fn no_forward_jumps(d: &Digraph, order: &[usize]) -> bool {
    let mut pos = vec![0; d.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Allowed arcs: the path arcs themselves (pos drops by exactly 1) and
    // arcs pointing away from the terminal (pos increases).
    d.arcs()
        .iter()
        .all(|&(a, b)| pos[a] == pos[b] + 1 || pos[a] < pos[b])
}

/// Self-contained outcome record for one dimension computation.
#[derive(Debug, Clone, Serialize)]
pub struct DimRecord {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub mode: DimMode,
    pub dimension: usize,
    pub basis: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_min_bases: Option<Vec<Vec<usize>>>,
    /// Representation of every vertex with respect to `basis`, by vertex id.
    pub representations: Vec<Vec<Dist>>,
}

pub fn dim_record(d: &Digraph, mode: DimMode, result: &BasisResult) -> DimRecord {
    let dm = d.distance_matrix();
    let representations = (0..d.n())
        .map(|v| result.basis.iter().map(|&b| dm.get(v, b)).collect())
        .collect();
    DimRecord {
        n: d.n(),
        arcs: d.arcs().to_vec(),
        mode,
        dimension: result.dimension,
        basis: result.basis.clone(),
        all_min_bases: result.all_min_bases.clone(),
        representations,
    }
}
