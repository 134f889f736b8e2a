//! Slow reference implementations used to cross-examine the fast paths.
//!
//! Everything here favors directness over speed: subset scans instead of
//! ordered expansion, vertex loops instead of bitset intersections, a
//! textbook augmenting-path matcher, and signature sets instead of
//! automorphism arithmetic. The verification suites run fast path and
//! oracle side by side; agreement is the evidence.

use std::collections::HashSet;

use crate::graph::Graph;

/// All k-subsets of the vertices that are pairwise adjacent, by direct
/// subset enumeration with a completion-time adjacency check.
pub fn cliques_by_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            let pairwise = current
                .iter()
                .enumerate()
                .all(|(i, &u)| current[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if pairwise {
                out.push(current.clone());
            }
            return;
        }
        for v in start..g.vertex_count() {
            current.push(v);
            rec(g, k, v + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        rec(g, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Triangle count by triple loop.
pub fn triangle_count(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Common neighbors of a vertex set, counted by scanning every vertex.
pub fn common_neighbor_count(g: &Graph, vertices: &[usize]) -> usize {
    (0..g.vertex_count())
        .filter(|&w| vertices.iter().all(|&v| g.has_edge(v, w)))
        .count()
}

/// Both sides of the handshaking identity, computed from subset scans.
pub fn handshaking_sides(g: &Graph, k: usize) -> (u64, u64) {
    let lhs = cliques_by_subsets(g, k)
        .iter()
        .map(|q| common_neighbor_count(g, q) as u64)
        .sum();
    let rhs = (k as u64 + 1) * cliques_by_subsets(g, k + 1).len() as u64;
    (lhs, rhs)
}

fn packing_conflict(g: &Graph, k: usize, a: &[usize], b: &[usize]) -> bool {
    if a.iter().any(|v| b.contains(v)) {
        return true;
    }
    k == 1 && g.has_edge(a[0], b[0])
}

/// Maximum independent family of k-cliques by enumerating every
/// conflict-free family once (no pruning, no bounds).
pub fn max_packing_size(g: &Graph, k: usize) -> usize {
    fn rec(
        g: &Graph,
        k: usize,
        items: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        start: usize,
    ) -> usize {
        let mut best = chosen.len();
        for j in start..items.len() {
            let free = chosen
                .iter()
                .all(|&i| !packing_conflict(g, k, &items[i], &items[j]));
            if free {
                chosen.push(j);
                best = best.max(rec(g, k, items, chosen, j + 1));
                chosen.pop();
            }
        }
        best
    }
    let items = cliques_by_subsets(g, k);
    rec(g, k, &items, &mut Vec::new(), 0)
}

/// Maximum matching size via Kuhn's augmenting paths. Returns `None`
/// when the graph is not bipartite (an odd cycle shows up in coloring).
pub fn bipartite_matching_size(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for v in g.neighbors(u).iter() {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push(v);
                    }
                    Some(c) if c == color[u].unwrap() => return None,
                    Some(_) => {}
                }
            }
        }
    }

    fn augment(
        u: usize,
        g: &Graph,
        visited: &mut [bool],
        matched_to: &mut [Option<usize>],
    ) -> bool {
        for v in g.neighbors(u).iter() {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if matched_to[v].is_none() || augment(matched_to[v].unwrap(), g, visited, matched_to) {
                matched_to[v] = Some(u);
                return true;
            }
        }
        false
    }

    let mut matched_to = vec![None; n];
    let mut size = 0;
    for u in (0..n).filter(|&u| color[u] == Some(false)) {
        let mut visited = vec![false; n];
        if augment(u, g, &mut visited, &mut matched_to) {
            size += 1;
        }
    }
    Some(size)
}

/// `s(H, G)` by collecting the distinct (vertex set, edge set) images of
/// all injective edge-preserving maps, with no automorphism arithmetic.
pub fn subgraph_count_by_signatures(h: &Graph, g: &Graph) -> u64 {
    type Signature = (Vec<usize>, Vec<(usize, usize)>);

    fn rec(i: usize, h: &Graph, g: &Graph, image: &mut Vec<usize>, sigs: &mut HashSet<Signature>) {
        if i == h.vertex_count() {
            let mut vertices = image.clone();
            vertices.sort_unstable();
            let mut edges: Vec<(usize, usize)> = h
                .edges()
                .map(|e| {
                    let (a, b) = (image[e.u], image[e.v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            sigs.insert((vertices, edges));
            return;
        }
        for v in 0..g.vertex_count() {
            if image.contains(&v) {
                continue;
            }
            let consistent = (0..i).all(|j| !h.has_edge(i, j) || g.has_edge(image[j], v));
            if consistent {
                image.push(v);
                rec(i + 1, h, g, image, sigs);
                image.pop();
            }
        }
    }

    let mut sigs = HashSet::new();
    rec(0, h, g, &mut Vec::new(), &mut sigs);
    sigs.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{clique_census, enumerate_cliques, verify_handshaking};
    use crate::generators;
    use crate::packing::{greedy_maximal_packing, max_clique_packing, SolverBudget};
    use crate::subgraph::subgraph_count;

    #[test]
    fn subset_cliques_match_fast_enumeration() {
        for n in 0..=5 {
            for g in generators::enumerate_all_labeled_graphs(n).unwrap() {
                let census = clique_census(&g);
                for k in 1..=5 {
                    let slow = cliques_by_subsets(&g, k);
                    let fast: Vec<Vec<usize>> = enumerate_cliques(&g, k)
                        .unwrap()
                        .iter()
                        .map(|q| q.vertices().to_vec())
                        .collect();
                    assert_eq!(slow, fast, "{g:?} k={k}");
                    assert_eq!(slow.len() as u64, census.count(k));
                }
                assert_eq!(triangle_count(&g), census.count(3));
            }
        }
    }

    #[test]
    fn handshaking_agrees_with_oracle() {
        for n in 0..=5 {
            for g in generators::enumerate_all_labeled_graphs(n).unwrap() {
                for k in 1..=3 {
                    let (lhs, rhs) = handshaking_sides(&g, k);
                    assert_eq!(lhs, rhs, "{g:?} k={k}");
                    let fast = verify_handshaking(&g, k).unwrap();
                    assert_eq!((fast.value_sum, fast.rhs), (lhs, rhs));
                }
            }
        }
    }

    #[test]
    fn packing_sizes_match_solver_on_small_graphs() {
        for g in generators::enumerate_all_labeled_graphs(4).unwrap() {
            for k in 1..=3 {
                let oracle = max_packing_size(&g, k);
                let exact = max_clique_packing(&g, k, SolverBudget::default()).unwrap();
                assert!(exact.optimal);
                assert_eq!(exact.size(), oracle, "{g:?} k={k}");
                assert!(greedy_maximal_packing(&g, k).unwrap().size() <= oracle);
            }
        }
    }

    #[test]
    fn matching_oracle_on_bipartite_instances() {
        assert_eq!(
            bipartite_matching_size(&generators::complete_bipartite(3, 4)),
            Some(3)
        );
        assert_eq!(
            bipartite_matching_size(&generators::cycle(6).unwrap()),
            Some(3)
        );
        assert_eq!(
            bipartite_matching_size(&generators::cycle(5).unwrap()),
            None
        );
        let path5 = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(bipartite_matching_size(&path5), Some(2));
        assert_eq!(bipartite_matching_size(&Graph::empty(3)), Some(0));

        for (g, label) in [
            (generators::complete_bipartite(2, 5), "K25"),
            (generators::cycle(8).unwrap(), "C8"),
            (generators::turan(7, 2).unwrap(), "T72"),
        ] {
            let matching = bipartite_matching_size(&g).expect("bipartite instance");
            let solver = max_clique_packing(&g, 2, SolverBudget::default()).unwrap();
            assert_eq!(solver.size(), matching, "{label}");
            assert_eq!(max_packing_size(&g, 2), matching, "{label}");
        }
    }

    #[test]
    fn signature_count_agrees_with_automorphism_route() {
        let patterns = [
            generators::complete(2),
            Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap(),
            generators::complete(3),
            generators::cycle(4).unwrap(),
            generators::complete(4),
            // An edge plus an isolated vertex: the division route must
            // handle patterns whose copies differ only in the spare vertex.
            Graph::from_edge_list(3, [(0, 1)]).unwrap(),
        ];
        let hosts = [
            Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
            generators::complete(5),
            generators::book(3).unwrap(),
            generators::gnp(7, 0.5, 11).unwrap(),
        ];
        for h in &patterns {
            for g in &hosts {
                assert_eq!(
                    subgraph_count(h, g).unwrap(),
                    subgraph_count_by_signatures(h, g),
                    "{h:?} in {g:?}"
                );
            }
        }
        let lonely_pattern = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(subgraph_count_by_signatures(&lonely_pattern, &p3), 2);
    }
}
