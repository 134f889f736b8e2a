//! Named verification suites: exhaustive sweeps over small labeled graphs
//! and seed-deterministic randomized batteries. Each suite returns a summary
//! row plus any findings, already in canonical order.

use crate::bounds::{check_clique_mantel, verify_proof_chain, Rational, StepStatus};
use crate::clique::{clique_census, enumerate_cliques, verify_handshaking};
use crate::generators::{self, GeneratorError};
use crate::graph::Graph;
use crate::graph6;
use crate::oracle;
use crate::packing::{self, SolverBudget};
use crate::report::{Finding, FindingKind, SuiteRow};
use crate::subgraph::verify_kelly;

fn sort_findings(findings: &mut Vec<Finding>) {
    findings.sort_by_key(Finding::sort_key);
    findings.dedup();
}

/// Handshaking identity and census/enumeration cross-check over every
/// labeled graph of the given order, for k = 1..=k_max.
pub fn handshaking_exhaustive(
    n: usize,
    k_max: usize,
) -> Result<(SuiteRow, Vec<Finding>), GeneratorError> {
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for g in generators::enumerate_all_labeled_graphs(n)? {
        cases += 1;
        let mut bad = false;
        let census = clique_census(&g);
        for k in 1..=k_max {
            let listed = enumerate_cliques(&g, k)
                .map(|c| c.len() as u64)
                .unwrap_or(0);
            if listed != census.count(k) {
                bad = true;
                findings.push(Finding::new(
                    FindingKind::IdentityViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    k,
                    None,
                    Rational::from_integer(listed as i128),
                    Rational::from_integer(census.count(k) as i128),
                ));
            }
            let r = verify_handshaking(&g, k).expect("k >= 1");
            if !r.equal {
                bad = true;
                findings.push(Finding::new(
                    FindingKind::IdentityViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    k,
                    None,
                    Rational::from_integer(r.value_sum as i128),
                    Rational::from_integer(r.rhs as i128),
                ));
            }
        }
        if bad {
            failures += 1;
        }
    }
    sort_findings(&mut findings);
    Ok((
        SuiteRow {
            name: format!("handshaking_exhaustive_n{n}"),
            cases,
            failures,
        },
        findings,
    ))
}

/// Mantel-type bound over every labeled graph of the given order, for the
/// listed clique sizes. Only eligible graphs are judged.
pub fn bounds_exhaustive(
    n: usize,
    ks: &[usize],
) -> Result<(SuiteRow, Vec<Finding>), GeneratorError> {
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for g in generators::enumerate_all_labeled_graphs(n)? {
        cases += 1;
        let mut bad = false;
        for &k in ks {
            let r = check_clique_mantel(&g, k).expect("k >= 1");
            if r.holds == Some(false) {
                bad = true;
                findings.push(Finding::new(
                    FindingKind::BoundViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    k,
                    None,
                    Rational::from_integer(r.lhs as i128),
                    r.rhs,
                ));
            }
        }
        if bad {
            failures += 1;
        }
    }
    sort_findings(&mut findings);
    Ok((
        SuiteRow {
            name: format!("bounds_exhaustive_n{n}"),
            cases,
            failures,
        },
        findings,
    ))
}

fn solver_matches_oracle(g: &Graph, k: usize) -> (u64, u64, bool) {
    let exact = packing::max_clique_packing(g, k, SolverBudget::default()).expect("k >= 1");
    let oracle_size = oracle::max_packing_size(g, k);
    let greedy = packing::greedy_maximal_packing(g, k).expect("k >= 1");
    let ok = exact.optimal && exact.size() == oracle_size && greedy.size() <= exact.size();
    (exact.size() as u64, oracle_size as u64, ok)
}

/// Branch-and-bound packing size against the brute-force oracle over every
/// labeled graph of the given order.
pub fn solver_oracle_exhaustive(
    n: usize,
    ks: &[usize],
) -> Result<(SuiteRow, Vec<Finding>), GeneratorError> {
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for g in generators::enumerate_all_labeled_graphs(n)? {
        cases += 1;
        let mut bad = false;
        for &k in ks {
            let (got, want, ok) = solver_matches_oracle(&g, k);
            if !ok {
                bad = true;
                findings.push(Finding::new(
                    FindingKind::IdentityViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    k,
                    None,
                    Rational::from_integer(got as i128),
                    Rational::from_integer(want as i128),
                ));
            }
        }
        if bad {
            failures += 1;
        }
    }
    sort_findings(&mut findings);
    Ok((
        SuiteRow {
            name: format!("solver_oracle_exhaustive_n{n}"),
            cases,
            failures,
        },
        findings,
    ))
}

fn kelly_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", generators::complete(2)),
        (
            "P3",
            Graph::from_edge_list(3, [(0, 1), (1, 2)]).expect("valid path"),
        ),
        ("K3", generators::complete(3)),
        ("C4", generators::cycle(4).expect("n >= 3")),
    ]
}

/// Vertex-deletion counting identity on random hosts. The `pairs` budget
/// is split evenly over the four fixed patterns; for each pattern the
/// suite keeps drawing G(n, 1/2) hosts with n cycling over 6..=10 until
/// its share of hosts without isolated vertices has been checked.
pub fn kelly_random(pairs: u64, seed: u64) -> (SuiteRow, Vec<Finding>) {
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut findings = Vec::new();
    let patterns = kelly_patterns();
    let share = pairs / patterns.len() as u64;
    let extra = pairs % patterns.len() as u64;
    for (pat_idx, (_, h)) in patterns.into_iter().enumerate() {
        let quota = share + u64::from((pat_idx as u64) < extra);
        let mut checked = 0u64;
        let mut attempt = 0u64;
        while checked < quota {
            let n = 6 + (attempt % 5) as usize;
            let host_seed = seed
                .wrapping_mul(4)
                .wrapping_add(pat_idx as u64)
                .wrapping_add(attempt.wrapping_mul(0x9e37_79b9));
            attempt += 1;
            let g = generators::gnp(n, 0.5, host_seed).expect("valid probability");
            if g.has_isolated_vertex() {
                continue;
            }
            checked += 1;
            cases += 1;
            let r = verify_kelly(&h, &g).expect("eligible host");
            if !r.equal {
                failures += 1;
                findings.push(Finding::new(
                    FindingKind::IdentityViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    h.vertex_count(),
                    None,
                    Rational::from_integer(r.lhs as i128),
                    Rational::from_integer(r.rhs as i128),
                ));
            }
        }
    }
    sort_findings(&mut findings);
    (
        SuiteRow {
            name: "kelly_random".to_string(),
            cases,
            failures,
        },
        findings,
    )
}

/// Triangle bound on random G(12, p) hosts with p cycling over a small grid,
/// judged at k = 2 wherever the graph is eligible (no 4-cliques).
pub fn random_bounds(samples: u64, seed: u64) -> (SuiteRow, Vec<Finding>) {
    const GRID: [f64; 3] = [0.2, 0.3, 0.4];
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for i in 0..samples {
        let p = GRID[(i % GRID.len() as u64) as usize];
        let g = generators::gnp(12, p, seed.wrapping_add(i)).expect("valid probability");
        let r = check_clique_mantel(&g, 2).expect("k >= 1");
        if r.holds == Some(false) {
            failures += 1;
            findings.push(Finding::new(
                FindingKind::BoundViolation,
                graph6::encode(&g).expect("n fits graph6"),
                2,
                None,
                Rational::from_integer(r.lhs as i128),
                r.rhs,
            ));
        }
    }
    sort_findings(&mut findings);
    (
        SuiteRow {
            name: "random_bounds_g12".to_string(),
            cases: samples,
            failures,
        },
        findings,
    )
}

/// Solver-versus-oracle agreement on random hosts of order 5..=8 at
/// k = 1 and k = 2.
pub fn random_solver(samples: u64, seed: u64) -> (SuiteRow, Vec<Finding>) {
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for i in 0..samples {
        let n = 5 + (i % 4) as usize;
        let g = generators::gnp(n, 0.5, seed.wrapping_add(i)).expect("valid probability");
        let mut bad = false;
        for k in [1, 2] {
            let (got, want, ok) = solver_matches_oracle(&g, k);
            if !ok {
                bad = true;
                findings.push(Finding::new(
                    FindingKind::IdentityViolation,
                    graph6::encode(&g).expect("n fits graph6"),
                    k,
                    None,
                    Rational::from_integer(got as i128),
                    Rational::from_integer(want as i128),
                ));
            }
        }
        if bad {
            failures += 1;
        }
    }
    sort_findings(&mut findings);
    (
        SuiteRow {
            name: "random_solver".to_string(),
            cases: samples,
            failures,
        },
        findings,
    )
}

/// Balanced three-part complete multipartite spot checks: the k = 2 bound
/// must hold for every order up to the cap.
pub fn turan_spot_checks(n_max: usize) -> (SuiteRow, Vec<Finding>) {
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut findings = Vec::new();
    for n in 3..=n_max {
        cases += 1;
        let g = generators::turan(n, 3).expect("r <= n");
        let r = check_clique_mantel(&g, 2).expect("k >= 1");
        if r.holds == Some(false) {
            failures += 1;
            findings.push(Finding::new(
                FindingKind::BoundViolation,
                graph6::encode(&g).expect("n fits graph6"),
                2,
                None,
                Rational::from_integer(r.lhs as i128),
                r.rhs,
            ));
        }
    }
    sort_findings(&mut findings);
    (
        SuiteRow {
            name: format!("turan_spot_checks_n{n_max}"),
            cases,
            failures,
        },
        findings,
    )
}

/// The standard exhaustive battery at a given order: handshaking for
/// k = 1..=5, bounds for k = 1..=3, and (up to order 6, where the oracle
/// stays fast) solver-versus-oracle for k = 1..=3.
pub fn run_exhaustive(n: usize) -> Result<Vec<(SuiteRow, Vec<Finding>)>, GeneratorError> {
    let mut out = vec![
        handshaking_exhaustive(n, 5)?,
        bounds_exhaustive(n, &[1, 2, 3])?,
    ];
    if n <= 6 {
        out.push(solver_oracle_exhaustive(n, &[1, 2, 3])?);
    }
    Ok(out)
}

/// Re-runs the check a finding names on its decoded witness. A finding is
/// only fit to report if this returns true.
///
/// Bound and step findings re-run the exact named check. Identity findings
/// come from several always-true equalities (handshaking, census against
/// enumeration, solver against oracle, vertex-deletion counting), so they
/// re-verify by confirming that some identity in that family still breaks
/// on the witness at the recorded k.
pub fn reverify(finding: &Finding) -> bool {
    let Ok(g) = graph6::decode(&finding.graph) else {
        return false;
    };
    let k = finding.k;
    if k == 0 {
        return false;
    }
    match finding.kind {
        FindingKind::BoundViolation => check_clique_mantel(&g, k)
            .map(|r| r.holds == Some(false))
            .unwrap_or(false),
        FindingKind::StepViolation => {
            let Some(step) = finding.step.as_deref() else {
                return false;
            };
            let Ok(want) = step.parse::<crate::bounds::StepId>() else {
                return false;
            };
            verify_proof_chain(&g, k, SolverBudget::default())
                .map(|r| {
                    r.steps
                        .iter()
                        .any(|s| s.id == want && s.status == StepStatus::Fails)
                })
                .unwrap_or(false)
        }
        FindingKind::IdentityViolation => {
            if verify_handshaking(&g, k).map(|r| !r.equal).unwrap_or(false) {
                return true;
            }
            let listed = enumerate_cliques(&g, k)
                .map(|c| c.len() as u64)
                .unwrap_or(0);
            if listed != clique_census(&g).count(k) {
                return true;
            }
            if !solver_matches_oracle(&g, k).2 {
                return true;
            }
            if !g.has_isolated_vertex() {
                for (_, h) in kelly_patterns() {
                    if h.vertex_count() == k
                        && verify_kelly(&h, &g).map(|r| !r.equal).unwrap_or(false)
                    {
                        return true;
                    }
                }
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_suites_are_clean_on_small_orders() {
        for n in 1..=4 {
            for (row, findings) in run_exhaustive(n).unwrap() {
                assert_eq!(row.failures, 0, "suite {} found failures", row.name);
                assert!(findings.is_empty());
                assert_eq!(row.cases, 1u64 << (n * (n - 1) / 2));
            }
        }
    }

    #[test]
    fn randomized_suites_are_clean_and_deterministic() {
        let (row_a, f_a) = random_bounds(60, 7);
        let (row_b, f_b) = random_bounds(60, 7);
        assert_eq!(row_a, row_b);
        assert_eq!(f_a, f_b);
        assert_eq!(row_a.failures, 0);

        let (row, findings) = random_solver(40, 11);
        assert_eq!(row.failures, 0);
        assert!(findings.is_empty());

        let (row, findings) = kelly_random(22, 3);
        assert_eq!(row.cases, 22);
        assert_eq!(row.failures, 0);
        assert!(findings.is_empty());

        let (row, findings) = turan_spot_checks(20);
        assert_eq!(row.failures, 0);
        assert!(findings.is_empty());
    }

    #[test]
    fn reverify_accepts_true_violations_and_rejects_junk() {
        // A genuine S1 failure: the three pages of the book all see both
        // spine vertices, but only two vertex-disjoint edges fit.
        let book = generators::book(3).unwrap();
        let f = Finding::new(
            FindingKind::StepViolation,
            graph6::encode(&book).unwrap(),
            2,
            Some(crate::bounds::StepId::S1),
            Rational::from_integer(3),
            Rational::from_integer(2),
        );
        assert!(reverify(&f));

        // The same witness does not support a bound violation claim.
        let junk = Finding::new(
            FindingKind::BoundViolation,
            graph6::encode(&book).unwrap(),
            2,
            None,
            Rational::from_integer(3),
            Rational::from_integer(2),
        );
        assert!(!reverify(&junk));

        let garbage = Finding::new(
            FindingKind::IdentityViolation,
            "not graph6 \u{7f}".to_string(),
            1,
            None,
            Rational::from_integer(0),
            Rational::from_integer(0),
        );
        assert!(!reverify(&garbage));
    }
}
