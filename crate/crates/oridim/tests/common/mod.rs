//! Self-contained reference implementations used to cross-check the
//! library from the outside: an independent BFS, an unpruned subset-search
//! dimension oracle, and seeded random digraph samplers. Nothing here
//! calls into the crate under test.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Arc = (usize, usize);

/// Breadth-first distances from every vertex; `None` marks unreachable.
pub fn oracle_distances(n: usize, arcs: &[Arc]) -> Vec<Vec<Option<u32>>> {
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
    }
    (0..n)
        .map(|src| {
            let mut dist = vec![None; n];
            let mut queue = std::collections::VecDeque::from([src]);
            dist[src] = Some(0u32);
            while let Some(u) = queue.pop_front() {
                for &v in &out[u] {
                    if dist[v].is_none() {
                        dist[v] = Some(dist[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn oracle_strong(n: usize, arcs: &[Arc]) -> bool {
    if n <= 1 {
        return true;
    }
    let dist = oracle_distances(n, arcs);
    dist.iter().all(|row| row.iter().all(|d| d.is_some()))
}

/// Distance vectors toward `base`, one per vertex, pairwise distinct?
pub fn oracle_is_resolving(dist: &[Vec<Option<u32>>], base: &[usize]) -> bool {
    let vectors: Vec<Vec<Option<u32>>> = dist
        .iter()
        .map(|row| base.iter().map(|&b| row[b]).collect())
        .collect();
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if vectors[i] == vectors[j] {
                return false;
            }
        }
    }
    true
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets_in_lex_order(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            extend(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Unpruned exhaustive dimension: ascending cardinality, lexicographic
/// order within each cardinality, first resolving subset wins. Treats
/// unreachable distances as an ordinary (comparable) value, so on a
/// strongly connected digraph it realizes the usual definition.
pub fn oracle_dimension(n: usize, arcs: &[Arc]) -> (usize, Vec<usize>) {
    assert!(n >= 1);
    let dist = oracle_distances(n, arcs);
    for k in 1..=n {
        for base in subsets_in_lex_order(n, k) {
            if oracle_is_resolving(&dist, &base) {
                return (k, base);
            }
        }
    }
    unreachable!("the full vertex set always resolves");
}

/// True when no proper subset obtained by dropping one element resolves.
pub fn oracle_basis_is_minimal(dist: &[Vec<Option<u32>>], basis: &[usize]) -> bool {
    if basis.len() <= 1 {
        return true;
    }
    (0..basis.len()).all(|drop| {
        let reduced: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, &b)| b)
            .collect();
        !oracle_is_resolving(dist, &reduced)
    })
}

/// Random orientation sample: each unordered pair independently carries
/// no arc (probability 1-p) or one arc in a random direction.
pub fn random_oriented(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<Arc> {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(0.5) {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    arcs
}

/// Strongly connected sample: rejection-samples dense-ish orientations,
/// falling back to a random Hamiltonian cycle plus random chords (always
/// strong) if rejection takes too long. Deterministic for a given rng.
pub fn random_strong_oriented(rng: &mut ChaCha8Rng, n: usize) -> Vec<Arc> {
    assert!(n >= 3);
    for _ in 0..200 {
        let p = rng.gen_range(0.5..0.9);
        let arcs = random_oriented(rng, n, p);
        if oracle_strong(n, &arcs) {
            return arcs;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs: Vec<Arc> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    for u in 0..n {
        for v in u + 1..n {
            let free = !arcs.contains(&(u, v)) && !arcs.contains(&(v, u));
            if free && rng.gen_bool(0.3) {
                if rng.gen_bool(0.5) {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    arcs
}
