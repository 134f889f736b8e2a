//! Constructors for the standard graph families used by the harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("a cycle needs at least 3 vertices (got {n})")]
    CycleTooShort { n: usize },
    #[error("a Turan graph needs between 1 and n parts (got r = {r} for n = {n})")]
    InvalidPartCount { r: usize, n: usize },
    #[error("a book needs at least one page (got {k})")]
    BookTooSmall { k: usize },
    #[error("edge probability must lie in [0, 1] (got {p})")]
    InvalidProbability { p: f64 },
    #[error("exhaustive enumeration is limited to {max} vertices (got {n})")]
    EnumerationTooLarge { n: usize, max: usize },
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::CycleTooShort { n });
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

/// The complete bipartite graph with sides `{0..a}` and `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// The Turan graph: `n` vertices in `r` consecutive parts with sizes as
/// equal as possible (the larger parts first), all cross-part pairs joined.
pub fn turan(n: usize, r: usize) -> Result<Graph, GeneratorError> {
    if r < 1 || r > n {
        return Err(GeneratorError::InvalidPartCount { r, n });
    }
    let big = n / r + usize::from(!n.is_multiple_of(r));
    let small = n / r;
    let part_of: Vec<usize> = (0..r)
        .flat_map(|p| {
            let size = if p < n % r { big } else { small };
            std::iter::repeat_n(p, size)
        })
        .collect();
    debug_assert_eq!(part_of.len(), n);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The book with `k` triangular pages glued along the edge `{0, 1}`;
/// page `i` adds the vertex `i + 2`.
pub fn book(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(GeneratorError::BookTooSmall { k });
    }
    let mut g = Graph::empty(k + 2);
    g.add_edge(0, 1);
    for p in 2..k + 2 {
        g.add_edge(0, p);
        g.add_edge(1, p);
    }
    Ok(g)
}

/// An Erdos-Renyi graph: each pair is an edge independently with
/// probability `p`, drawn from a ChaCha8 stream seeded with `seed`.
///
/// Pairs are consumed in lexicographic order, so a given `(n, p, seed)`
/// always yields the same graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::InvalidProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in mask order: bit
/// `i` of the mask is the `i`-th pair in lexicographic order.
pub fn enumerate_all_labeled_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, GeneratorError> {
    const MAX: usize = 7;
    if n > MAX {
        return Err(GeneratorError::EnumerationTooLarge { n, max: MAX });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let end: u64 = 1 << pairs.len();
    Ok((0..end).map(move |mask| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}
