//! Non-induced subgraph counting and its vertex-deletion identity.
//!
//! `s(H, G)` counts the subgraphs of `G` isomorphic to `H`: distinct
//! pairs of a vertex subset and an edge subset that form a copy of `H`,
//! not necessarily induced. Deleting one vertex at a time relates the
//! counts: every copy uses `k` of the `n` host vertices, so it survives
//! exactly `n - k` of the deletions, giving
//! `(n - k) * s(H, G) = sum over v of s(H, G - v)`.

use thiserror::Error;

use crate::graph::Graph;

/// Largest pattern order the brute-force counter accepts.
pub const MAX_PATTERN_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgraphError {
    #[error("the pattern graph has no vertices")]
    EmptyPattern,
    #[error("patterns are limited to {max} vertices (got {n})")]
    PatternTooLarge { n: usize, max: usize },
    #[error("pattern order {k} exceeds host order {n}")]
    PatternExceedsHost { k: usize, n: usize },
    #[error("the host graph has an isolated vertex")]
    IsolatedHostVertex,
}

fn check_pattern(h: &Graph) -> Result<(), SubgraphError> {
    if h.vertex_count() == 0 {
        return Err(SubgraphError::EmptyPattern);
    }
    if h.vertex_count() > MAX_PATTERN_ORDER {
        return Err(SubgraphError::PatternTooLarge {
            n: h.vertex_count(),
            max: MAX_PATTERN_ORDER,
        });
    }
    Ok(())
}

/// Counts injective maps `V(H) -> V(G)` that send every edge of `H` to
/// an edge of `G` (non-edges of `H` are unconstrained).
fn injective_homomorphisms(h: &Graph, g: &Graph) -> u64 {
    let k = h.vertex_count();
    let n = g.vertex_count();
    if k > n {
        return 0;
    }
    // Adjacency constraints against already-placed pattern vertices.
    let earlier: Vec<Vec<usize>> = (0..k)
        .map(|i| h.neighbors(i).iter().filter(|&j| j < i).collect())
        .collect();
    let mut image = vec![0usize; k];
    let mut used = vec![false; n];
    let mut count = 0u64;

    fn place(
        i: usize,
        g: &Graph,
        earlier: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
        count: &mut u64,
    ) {
        if i == image.len() {
            *count += 1;
            return;
        }
        for v in 0..used.len() {
            if used[v] {
                continue;
            }
            if earlier[i].iter().all(|&j| g.has_edge(image[j], v)) {
                image[i] = v;
                used[v] = true;
                place(i + 1, g, earlier, image, used, count);
                used[v] = false;
            }
        }
    }
    place(0, g, &earlier, &mut image, &mut used, &mut count);
    count
}

/// The order of the automorphism group of `h`.
pub fn automorphism_count(h: &Graph) -> Result<u64, SubgraphError> {
    check_pattern(h)?;
    Ok(injective_homomorphisms(h, h))
}

/// `s(H, G)`: the number of subgraphs of `g` isomorphic to `h`.
///
/// Computed as injective homomorphisms divided by automorphisms; every
/// copy of `h` is hit by exactly one automorphism orbit of maps.
pub fn subgraph_count(h: &Graph, g: &Graph) -> Result<u64, SubgraphError> {
    check_pattern(h)?;
    let homs = injective_homomorphisms(h, g);
    let auts = injective_homomorphisms(h, h);
    debug_assert!(auts > 0 && homs.is_multiple_of(auts));
    Ok(homs / auts)
}

/// One checked instance of the deletion identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KellyReport {
    /// `(n - k) * s(H, G)`.
    pub lhs: u64,
    /// `sum over v of s(H, G - v)`.
    pub rhs: u64,
    pub equal: bool,
    /// `s(H, G - v)` for each deleted vertex `v` in order.
    pub per_vertex: Vec<u64>,
}

/// Checks `(n - k) * s(H, G) = sum_v s(H, G - v)`.
///
/// The identity is stated for hosts without isolated vertices, so such
/// hosts are rejected as ineligible rather than evaluated.
pub fn verify_kelly(h: &Graph, g: &Graph) -> Result<KellyReport, SubgraphError> {
    check_pattern(h)?;
    let k = h.vertex_count();
    let n = g.vertex_count();
    if k > n {
        return Err(SubgraphError::PatternExceedsHost { k, n });
    }
    if g.has_isolated_vertex() {
        return Err(SubgraphError::IsolatedHostVertex);
    }
    let s = subgraph_count(h, g)?;
    let lhs = (n - k) as u64 * s;
    let per_vertex: Vec<u64> = (0..n)
        .map(|v| {
            let reduced = g.remove_vertex(v).expect("v < n");
            subgraph_count(h, &reduced).expect("pattern already checked")
        })
        .collect();
    let rhs = per_vertex.iter().sum();
    Ok(KellyReport {
        lhs,
        rhs,
        equal: lhs == rhs,
        per_vertex,
    })
}
