//! Exact and greedy solvers for maximum independent sets of k-cliques.
//!
//! Two k-cliques are independent when they share no vertex; for k = 1
//! independence additionally requires the two vertices to be
//! non-adjacent. That makes the k = 1 problem the classical maximum
//! independent vertex set and the k = 2 problem the classical maximum
//! matching, the two instances the general notion specializes to.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bitset::Bitset;
use crate::clique::{enumerate_cliques, Clique};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("clique size k must be at least 1")]
    ZeroSize,
}

/// Limits on the exact search. Exhausting a limit is not an error; the
/// solver returns its incumbent with `optimal = false`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    /// Maximum branch-and-bound nodes to explore. Must be positive.
    pub node_limit: u64,
    /// Wall-clock cap. Must be positive.
    pub time_limit: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        Self {
            node_limit: 10_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

/// A family of pairwise independent k-cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSolution {
    /// Order of the member cliques.
    pub k: usize,
    /// Members sorted lexicographically by vertex list.
    pub members: Vec<Clique>,
    /// True iff the exact solver proved maximality within budget. Among
    /// maximum families it returns the lexicographically least one.
    pub optimal: bool,
}

impl PackingSolution {
    /// `|A|`, the packing size.
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// True iff no vertex appears in two of the cliques.
pub fn is_vertex_disjoint(members: &[Clique]) -> bool {
    let cap = members
        .iter()
        .flat_map(|q| q.vertices().iter().copied())
        .max()
        .map_or(0, |v| v + 1);
    let mut seen = Bitset::new(cap);
    for q in members {
        for &v in q.vertices() {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
    }
    true
}

/// Vertices that choosing `q` makes unusable: its own vertices, plus
/// their neighbors when k = 1 (adjacency is a conflict there).
fn footprint(g: &Graph, q: &Clique) -> Bitset {
    let n = g.vertex_count();
    let mut out = q.vertex_set(n);
    if q.size() == 1 {
        out.union_assign(g.neighbors(q.vertices()[0]));
    }
    out
}

fn conflicts(g: &Graph, a: &Clique, b: &Clique) -> bool {
    let n = g.vertex_count();
    if !a.vertex_set(n).is_disjoint(&b.vertex_set(n)) {
        return true;
    }
    a.size() == 1 && b.size() == 1 && g.has_edge(a.vertices()[0], b.vertices()[0])
}

/// Checks a finished family against the host graph before release. A
/// failure here is a solver defect, hence the hard assertions.
fn certify(g: &Graph, k: usize, members: &[Clique]) {
    for q in members {
        let revalidated = Clique::new(g, q.vertices()).expect("member must be a clique of g");
        assert_eq!(revalidated.size(), k, "member has the wrong order");
    }
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            assert!(!conflicts(g, a, b), "members {a} and {b} conflict");
        }
    }
}

/// Greedy baseline: scan the k-cliques in lexicographic order and accept
/// whatever does not conflict with earlier acceptances. The result is
/// maximal but often smaller than the maximum, so `optimal` is always
/// false.
pub fn greedy_maximal_packing(g: &Graph, k: usize) -> Result<PackingSolution, SolverError> {
    let items = enumerate_cliques(g, k).map_err(|_| SolverError::ZeroSize)?;
    let n = g.vertex_count();
    let mut banned = Bitset::new(n);
    let mut members = Vec::new();
    for q in items {
        if q.vertex_set(n).is_disjoint(&banned) {
            banned.union_assign(&footprint(g, &q));
            members.push(q);
        }
    }
    certify(g, k, &members);
    Ok(PackingSolution {
        k,
        members,
        optimal: false,
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    items: Vec<Clique>,
    masks: Vec<Bitset>,
    footprints: Vec<Bitset>,
    best: Vec<usize>,
    best_size: usize,
    /// True once a solution of `best_size` was found by the tree search
    /// itself (as opposed to the greedy seed). While false, ties must be
    /// explored; afterwards they are pruned, which keeps the first and
    /// only recorded solution of each size the lexicographically least.
    found_in_tree: bool,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    exhausted: bool,
}

impl Search<'_> {
    fn budget_spent(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit
            || (self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline)
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn dfs(&mut self, idx: usize, chosen: &mut Vec<usize>, banned: &Bitset) {
        if self.budget_spent() {
            return;
        }
        if idx == self.items.len() {
            let record = chosen.len() > self.best_size
                || (chosen.len() == self.best_size && !self.found_in_tree);
            if record {
                self.best_size = chosen.len();
                self.best = chosen.clone();
                self.found_in_tree = true;
            }
            return;
        }
        let usable: Vec<usize> = (idx..self.items.len())
            .filter(|&j| self.masks[j].is_disjoint(banned))
            .collect();
        let free = self.g.vertex_count() - banned.count();
        let bound = chosen.len() + usable.len().min(free / self.k);
        if bound < self.best_size || (bound == self.best_size && self.found_in_tree) {
            return;
        }
        if self.masks[idx].is_disjoint(banned) {
            let mut next_banned = banned.clone();
            next_banned.union_assign(&self.footprints[idx]);
            chosen.push(idx);
            self.dfs(idx + 1, chosen, &next_banned);
            chosen.pop();
        }
        self.dfs(idx + 1, chosen, banned);
    }
}

/// Exact maximum independent set of k-cliques via branch and bound over
/// the canonical clique list, seeded with the greedy solution.
///
/// Pruning uses `|chosen| + min(usable items, free vertices / k)` as the
/// optimistic bound. Within budget the result is a true maximum and the
/// lexicographically least such family; on budget exhaustion the best
/// incumbent is returned with `optimal = false`.
pub fn max_clique_packing(
    g: &Graph,
    k: usize,
    budget: SolverBudget,
) -> Result<PackingSolution, SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroSize);
    }
    let items = enumerate_cliques(g, k).expect("k >= 1 checked");
    let n = g.vertex_count();
    let masks: Vec<Bitset> = items.iter().map(|q| q.vertex_set(n)).collect();
    let footprints: Vec<Bitset> = items.iter().map(|q| footprint(g, q)).collect();

    let greedy = greedy_maximal_packing(g, k)?;
    let mut search = Search {
        g,
        k,
        items,
        masks,
        footprints,
        best_size: greedy.size(),
        best: Vec::new(),
        found_in_tree: false,
        nodes: 0,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.time_limit,
        exhausted: false,
    };
    search.dfs(0, &mut Vec::new(), &Bitset::new(n));

    let members = if search.found_in_tree {
        search
            .best
            .iter()
            .map(|&j| search.items[j].clone())
            .collect()
    } else {
        greedy.members
    };
    certify(g, k, &members);
    Ok(PackingSolution {
        k,
        members,
        optimal: !search.exhausted,
    })
}
