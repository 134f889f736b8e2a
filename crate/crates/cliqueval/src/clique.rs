//! Clique enumeration, clique values, censuses, and the handshaking
//! identity that ties the two together.
//!
//! The value of a k-clique is the number of vertices adjacent to all of
//! its members. Summing values over every k-clique counts each
//! (k+1)-clique once per contained k-clique, which gives the identity
//! `sum val = (k+1) * c_{k+1}` checked by [`verify_handshaking`].

use std::fmt;

use thiserror::Error;

use crate::bitset::Bitset;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("a clique needs at least one vertex")]
    Empty,
    #[error("clique size k must be at least 1")]
    ZeroSize,
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} listed more than once")]
    DuplicateVertex { v: usize },
    #[error("vertices {u} and {v} are not adjacent")]
    NotAClique { u: usize, v: usize },
}

/// A set of pairwise-adjacent vertices, stored sorted.
///
/// Construction via [`Clique::new`] checks the defining property against
/// a host graph, so holding a `Clique` means the check has passed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    /// Validates `vertices` as a clique of `g` and normalizes the order.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self, CliqueError> {
        if vertices.is_empty() {
            return Err(CliqueError::Empty);
        }
        let n = g.vertex_count();
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for &v in &sorted {
            if v >= n {
                return Err(CliqueError::VertexOutOfRange { v, n });
            }
        }
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(CliqueError::DuplicateVertex { v: pair[0] });
            }
        }
        for (i, &u) in sorted.iter().enumerate() {
            for &v in &sorted[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(CliqueError::NotAClique { u, v });
                }
            }
        }
        Ok(Self { vertices: sorted })
    }

    /// Wraps vertices already known to be sorted, distinct, and adjacent.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices, i.e. the `k` of a k-clique.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The vertices as a bitset over `0..n`.
    pub fn vertex_set(&self, n: usize) -> Bitset {
        Bitset::from_indices(n, self.vertices.iter().copied())
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A removal ordering of the vertices: repeatedly delete a vertex of
/// minimum remaining degree, smallest id on ties. Returns the order and
/// the degeneracy (the largest degree seen at removal time).
pub fn degeneracy_ordering(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut remaining = Bitset::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = remaining
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("nonempty remainder");
        degeneracy = degeneracy.max(deg[v]);
        order.push(v);
        remaining.remove(v);
        for u in g.neighbors(v).iter() {
            if remaining.contains(u) {
                deg[u] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// All k-cliques of `g`, sorted lexicographically by vertex list.
///
/// Each clique is discovered from its earliest vertex in a degeneracy
/// ordering, which keeps the branching sets small on sparse graphs.
pub fn enumerate_cliques(g: &Graph, k: usize) -> Result<Vec<Clique>, CliqueError> {
    if k == 0 {
        return Err(CliqueError::ZeroSize);
    }
    let n = g.vertex_count();
    let (order, _) = degeneracy_ordering(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut stack = Vec::with_capacity(k);
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        let cand = Bitset::from_indices(n, later);
        stack.push(v);
        extend_cliques(g, &cand, k, &mut stack, &mut found);
        stack.pop();
    }
    for q in &mut found {
        q.sort_unstable();
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(Clique::from_sorted_unchecked)
        .collect())
}

fn extend_cliques(
    g: &Graph,
    cand: &Bitset,
    k: usize,
    stack: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if stack.len() == k {
        found.push(stack.clone());
        return;
    }
    if stack.len() + cand.count() < k {
        return;
    }
    for u in cand.iter() {
        let mut next = cand.intersection(g.neighbors(u));
        next.remove_below(u + 1);
        stack.push(u);
        extend_cliques(g, &next, k, stack, found);
        stack.pop();
    }
}

/// The value of a clique: how many vertices of `g` are adjacent to every
/// vertex of `q`. Re-validates `q` against `g`, since a `Clique` may have
/// been built on a different graph.
pub fn clique_value(g: &Graph, q: &Clique) -> Result<usize, CliqueError> {
    let checked = Clique::new(g, q.vertices())?;
    Ok(value_of_valid(g, checked.vertices()))
}

/// Value of a vertex list already known to be a clique of `g`.
fn value_of_valid(g: &Graph, vertices: &[usize]) -> usize {
    let mut common = g.neighbors(vertices[0]).clone();
    for &v in &vertices[1..] {
        common.intersect_assign(g.neighbors(v));
    }
    common.count()
}

/// Clique counts `c_1, ..., c_omega` of a graph.
///
/// The null graph has no cliques at all, so its census is empty; an
/// edgeless graph on `n >= 1` vertices has census `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCensus {
    counts: Vec<u64>,
}

impl CliqueCensus {
    /// The clique number, 0 for the null graph.
    pub fn omega(&self) -> usize {
        self.counts.len()
    }

    /// `c_k`, the number of k-cliques. `c_0` is 1 (the empty clique) and
    /// counts above the clique number are 0.
    pub fn count(&self, k: usize) -> u64 {
        if k == 0 {
            1
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// The counts `[c_1, ..., c_omega]`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Counts the cliques of every size in one recursive sweep. Work is
/// proportional to the number of cliques, not to `2^n`.
pub fn clique_census(g: &Graph) -> CliqueCensus {
    fn rec(g: &Graph, cand: &Bitset, size: usize, counts: &mut Vec<u64>) {
        for u in cand.iter() {
            if counts.len() <= size {
                counts.resize(size + 1, 0);
            }
            counts[size] += 1;
            let mut next = cand.intersection(g.neighbors(u));
            next.remove_below(u + 1);
            if !next.is_empty() {
                rec(g, &next, size + 1, counts);
            }
        }
    }
    let mut counts = Vec::new();
    rec(g, &Bitset::full(g.vertex_count()), 0, &mut counts);
    CliqueCensus { counts }
}

/// One instance of the clique handshaking identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandshakingReport {
    /// Clique size the values were summed over.
    pub k: usize,
    /// `val(q)` summed over all k-cliques `q`.
    pub value_sum: u64,
    /// `(k + 1) * c_{k+1}`.
    pub rhs: u64,
    pub equal: bool,
}

/// Checks `sum val = (k+1) c_{k+1}` for one `k`. The identity is a
/// theorem, so `equal: false` indicates a bug, not a property of `g`.
pub fn verify_handshaking(g: &Graph, k: usize) -> Result<HandshakingReport, CliqueError> {
    if k == 0 {
        return Err(CliqueError::ZeroSize);
    }
    let value_sum: u64 = enumerate_cliques(g, k)?
        .iter()
        .map(|q| value_of_valid(g, q.vertices()) as u64)
        .sum();
    let c_next = enumerate_cliques(g, k + 1)?.len() as u64;
    let rhs = (k as u64 + 1) * c_next;
    Ok(HandshakingReport {
        k,
        value_sum,
        rhs,
        equal: value_sum == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn g1() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    fn lists(cliques: &[Clique]) -> Vec<Vec<usize>> {
        cliques.iter().map(|q| q.vertices().to_vec()).collect()
    }

    #[test]
    fn clique_validation() {
        let g = g1();
        assert!(Clique::new(&g, &[2, 0, 1]).is_ok());
        assert_eq!(Clique::new(&g, &[]), Err(CliqueError::Empty));
        assert_eq!(
            Clique::new(&g, &[0, 3]),
            Err(CliqueError::NotAClique { u: 0, v: 3 })
        );
        assert_eq!(
            Clique::new(&g, &[1, 1]),
            Err(CliqueError::DuplicateVertex { v: 1 })
        );
        assert_eq!(
            Clique::new(&g, &[4]),
            Err(CliqueError::VertexOutOfRange { v: 4, n: 4 })
        );
        let q = Clique::new(&g, &[2, 1]).unwrap();
        assert_eq!(q.vertices(), &[1, 2]);
        assert_eq!(q.to_string(), "{1, 2}");
    }

    #[test]
    fn degeneracy_orderings() {
        let (order, d) = degeneracy_ordering(&generators::cycle(5).unwrap());
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        assert_eq!(d, 2);
        let (_, d) = degeneracy_ordering(&generators::complete(5));
        assert_eq!(d, 4);
        // In the star the leaves go first; once four are gone the center
        // is tied at degree 1 and wins on id.
        let (order, d) = degeneracy_ordering(&generators::complete_bipartite(1, 5));
        assert_eq!(d, 1);
        assert_eq!(order, vec![1, 2, 3, 4, 0, 5]);
        let (order, d) = degeneracy_ordering(&Graph::empty(0));
        assert!(order.is_empty());
        assert_eq!(d, 0);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let k4 = generators::complete(4);
        assert_eq!(
            lists(&enumerate_cliques(&k4, 2).unwrap()),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(
            lists(&enumerate_cliques(&k4, 3).unwrap()),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn enumeration_on_the_pendant_triangle() {
        let g = g1();
        assert_eq!(enumerate_cliques(&g, 1).unwrap().len(), 4);
        assert_eq!(
            lists(&enumerate_cliques(&g, 2).unwrap()),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(
            lists(&enumerate_cliques(&g, 3).unwrap()),
            vec![vec![0, 1, 2]]
        );
        assert!(enumerate_cliques(&g, 4).unwrap().is_empty());
        assert_eq!(enumerate_cliques(&g, 0), Err(CliqueError::ZeroSize));
    }

    #[test]
    fn values_on_the_pendant_triangle() {
        // Triangle edges each see the third triangle vertex; the pendant
        // edge sees nobody.
        let g = g1();
        let val = |vs: &[usize]| clique_value(&g, &Clique::new(&g, vs).unwrap()).unwrap();
        assert_eq!(val(&[0, 1]), 1);
        assert_eq!(val(&[0, 2]), 1);
        assert_eq!(val(&[1, 2]), 1);
        assert_eq!(val(&[2, 3]), 0);
        assert_eq!(val(&[0, 1, 2]), 0);
        assert_eq!(val(&[2]), 3);

        let other = generators::complete(3);
        let q = Clique::new(&other, &[0, 1, 2]).unwrap();
        assert_eq!(
            clique_value(&g, &q),
            Ok(0),
            "triangle 0-1-2 also lives in g1"
        );
        let k5 = generators::complete(5);
        let q5 = Clique::new(&k5, &[0, 4]).unwrap();
        assert!(clique_value(&g, &q5).is_err());
    }

    #[test]
    fn value_of_single_vertex_is_its_degree() {
        let g = generators::gnp(10, 0.5, 3).unwrap();
        for v in 0..10 {
            let q = Clique::new(&g, &[v]).unwrap();
            assert_eq!(clique_value(&g, &q).unwrap(), g.degree(v));
        }
    }

    #[test]
    fn census_values() {
        assert_eq!(clique_census(&g1()).counts(), &[4, 4, 1]);
        assert_eq!(
            clique_census(&generators::complete(5)).counts(),
            &[5, 10, 10, 5, 1]
        );
        assert_eq!(
            clique_census(&generators::cycle(5).unwrap()).counts(),
            &[5, 5]
        );
        assert_eq!(
            clique_census(&generators::book(3).unwrap()).counts(),
            &[5, 7, 3]
        );
        assert_eq!(clique_census(&Graph::empty(4)).counts(), &[4]);
        assert_eq!(clique_census(&Graph::empty(0)).counts(), &[] as &[u64]);
        let census = clique_census(&g1());
        assert_eq!(census.omega(), 3);
        assert_eq!(census.count(0), 1);
        assert_eq!(census.count(2), 4);
        assert_eq!(census.count(9), 0);
    }

    #[test]
    fn handshaking_on_fixed_graphs() {
        let g = g1();
        let r = verify_handshaking(&g, 2).unwrap();
        assert_eq!((r.value_sum, r.rhs, r.equal), (3, 3, true));
        let r = verify_handshaking(&g, 1).unwrap();
        assert_eq!(
            (r.value_sum, r.rhs),
            (8, 8),
            "degree sum is twice the edge count"
        );
        let r = verify_handshaking(&g, 3).unwrap();
        assert_eq!((r.value_sum, r.rhs, r.equal), (0, 0, true));

        let b3 = generators::book(3).unwrap();
        let r = verify_handshaking(&b3, 2).unwrap();
        assert_eq!((r.value_sum, r.rhs, r.equal), (9, 9, true));

        let k5 = generators::complete(5);
        let r = verify_handshaking(&k5, 2).unwrap();
        assert_eq!((r.value_sum, r.rhs, r.equal), (30, 30, true));

        assert_eq!(verify_handshaking(&g, 0), Err(CliqueError::ZeroSize));
    }

    #[test]
    fn handshaking_across_all_small_graphs() {
        for n in 0..=5 {
            for g in generators::enumerate_all_labeled_graphs(n).unwrap() {
                for k in 1..=4 {
                    assert!(verify_handshaking(&g, k).unwrap().equal, "{g:?} k={k}");
                }
            }
        }
    }
}
