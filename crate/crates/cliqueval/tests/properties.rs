//! Randomized properties: identities, codec round trips, and solver
//! agreement on arbitrary small graphs.

use proptest::prelude::*;

use cliqueval::bounds::{check_clique_mantel, verify_proof_chain, BoundsError, StepStatus};
use cliqueval::clique::{clique_census, enumerate_cliques, verify_handshaking};
use cliqueval::generators::complete;
use cliqueval::graph::Graph;
use cliqueval::graph6;
use cliqueval::oracle;
use cliqueval::packing::{
    greedy_maximal_packing, is_vertex_disjoint, max_clique_packing, SolverBudget,
};
use cliqueval::subgraph::verify_kelly;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, edges).expect("mask edges are valid")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), 0..(1u64 << pairs)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(10)) {
        let s = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn handshaking_holds_everywhere(g in arb_graph(8), k in 1usize..=4) {
        let r = verify_handshaking(&g, k).unwrap();
        prop_assert!(r.equal);
    }

    #[test]
    fn census_matches_enumeration(g in arb_graph(8), k in 1usize..=5) {
        let listed = enumerate_cliques(&g, k).unwrap().len() as u64;
        prop_assert_eq!(listed, clique_census(&g).count(k));
    }

    #[test]
    fn solver_agrees_with_oracle(g in arb_graph(6), k in 1usize..=3) {
        let exact = max_clique_packing(&g, k, SolverBudget::default()).unwrap();
        let greedy = greedy_maximal_packing(&g, k).unwrap();
        prop_assert!(exact.optimal);
        prop_assert_eq!(exact.size(), oracle::max_packing_size(&g, k));
        prop_assert!(greedy.size() <= exact.size());
        prop_assert!(is_vertex_disjoint(&exact.members));
        if k == 1 {
            // Size-1 members must additionally be pairwise non-adjacent.
            for a in &exact.members {
                for b in &exact.members {
                    if a != b {
                        prop_assert!(!g.has_edge(a.vertices()[0], b.vertices()[0]));
                    }
                }
            }
        }
    }

    #[test]
    fn bound_reports_are_internally_consistent(g in arb_graph(8), k in 1usize..=3) {
        let census = clique_census(&g);
        let r = check_clique_mantel(&g, k).unwrap();
        prop_assert_eq!(r.eligible, census.count(k + 2) == 0);
        prop_assert_eq!(r.lhs, census.count(k + 1));
        if r.eligible {
            let lhs = cliqueval::bounds::Rational::from_integer(r.lhs as i128);
            prop_assert_eq!(r.holds, Some(lhs <= r.rhs));
            prop_assert_eq!(r.slack, Some(r.rhs - lhs));
        } else {
            prop_assert_eq!(r.holds, None);
            prop_assert_eq!(r.slack, None);
        }
    }

    #[test]
    fn deletion_identity_holds_on_clean_hosts(g in arb_graph(8), pat in 0usize..2) {
        prop_assume!(!g.has_isolated_vertex());
        let h = match pat {
            0 => complete(2),
            _ => Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap(),
        };
        prop_assume!(h.vertex_count() <= g.vertex_count());
        let r = verify_kelly(&h, &g).unwrap();
        prop_assert!(r.equal);
    }

    #[test]
    fn chain_is_sound(g in arb_graph(7), k in 1usize..=2) {
        match verify_proof_chain(&g, k, SolverBudget::default()) {
            Err(BoundsError::Ineligible { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
            Ok(r) => {
                prop_assert!(!r.tainted);
                prop_assert_eq!(
                    r.a_size + r.b_size,
                    clique_census(&g).count(k) as usize
                );
                let early_hold = r.steps[..3].iter().all(|s| s.status == StepStatus::Holds);
                if early_hold {
                    for s in &r.steps[3..] {
                        prop_assert_eq!(s.status, StepStatus::Holds);
                    }
                    prop_assert_eq!(r.final_bound.holds, Some(true));
                }
            }
        }
    }
}
