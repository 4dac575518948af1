// Copyright 2026 Fixnet Developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact optimum for small instances by enumerating open/closed patterns of
//! the fixed-charge arcs, plus an independent solution checker.
//!
//! A concave objective over a polytope attains its minimum at a vertex, and
//! every vertex is the LP optimum of the pattern that opens exactly the arcs
//! it uses, so the minimum over patterns is the optimum.

use crate::netcore::{solve_lp, NetworkProblem, SimplexError, SimplexState};
use thiserror::Error;

/// Default bound on the number of fixed-charge arcs.
pub const DEFAULT_MAX_FC_ARCS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{count} fixed-charge arcs exceed the enumeration limit of {limit}")]
    TooLarge { count: usize, limit: usize },
    #[error("problem is infeasible")]
    Infeasible,
    #[error(transparent)]
    Simplex(SimplexError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub optimum: f64,
    pub witness_flows: Vec<i64>,
    pub subsets_explored: u64,
    pub proven: bool,
}

/// Minimum fixed-charge cost over all open/closed patterns.
///
/// Patterns are visited in Gray-code order so consecutive LPs differ in one
/// arc and each is a warm re-solve. A closed arc is priced at `c + BigM`;
/// for integral data this is equivalent to an upper bound of 0 whenever the
/// pattern is feasible, and a pattern whose optimum still uses a closed arc
/// is infeasible and skipped. Open arcs pay their charge only if they carry
/// flow.
pub fn brute_force_opt(problem: &NetworkProblem, max_fc_arcs: usize) -> Result<OracleResult, OracleError> {
    let fc = problem.fixed_charge_arcs();
    if fc.len() > max_fc_arcs || fc.len() >= 63 {
        return Err(OracleError::TooLarge {
            count: fc.len(),
            limit: max_fc_arcs,
        });
    }
    let mut costs = problem.variable_costs();
    let big_m = problem.big_m();
    let mut state = match solve_lp(problem, &costs) {
        Ok(s) => s,
        Err(SimplexError::Infeasible(_)) => return Err(OracleError::Infeasible),
        Err(e) => return Err(OracleError::Simplex(e)),
    };

    let mut closed = vec![false; problem.arc_count()];
    let mut best = (problem.fc_value(state.flows()), state.flows().to_vec());
    let total = 1u64 << fc.len();
    for g in 1..total {
        let arc = fc[g.trailing_zeros() as usize];
        closed[arc] = !closed[arc];
        costs[arc] = problem.arc(arc).cost as f64 + if closed[arc] { big_m } else { 0.0 };
        state.reoptimize(&costs).map_err(OracleError::Simplex)?;
        consider(problem, &state, &closed, &mut best);
    }
    Ok(OracleResult {
        optimum: best.0,
        witness_flows: best.1,
        subsets_explored: total,
        proven: true,
    })
}

fn consider(problem: &NetworkProblem, state: &SimplexState, closed: &[bool], best: &mut (f64, Vec<i64>)) {
    let flows = state.flows();
    if flows.iter().zip(closed).any(|(&x, &c)| c && x > 0) {
        return;
    }
    let v = problem.fc_value(flows);
    if v < best.0 {
        best.0 = v;
        best.1.clear();
        best.1.extend_from_slice(flows);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Length { expected: usize, got: usize },
    Bound { arc: usize, flow: i64, capacity: i64 },
    Conservation { node: usize, net: i64, supply: i64 },
}

/// Outcome of [`check_solution`]. Flows are integers by type, so
/// integrality always holds.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub violations: Vec<Violation>,
    /// `Σ c x + Σ{F : x > 0}` over the given flows, feasible or not.
    pub objective: f64,
}

impl SolutionReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a flow vector from scratch and reports every violation.
pub fn check_solution(problem: &NetworkProblem, flows: &[i64]) -> SolutionReport {
    let arcs = problem.arcs();
    let mut violations = Vec::new();
    if flows.len() != arcs.len() {
        violations.push(Violation::Length {
            expected: arcs.len(),
            got: flows.len(),
        });
    }
    let mut net = vec![0i64; problem.node_count()];
    let mut objective: i128 = 0;
    for (j, (a, &x)) in arcs.iter().zip(flows).enumerate() {
        if x < 0 || x > a.capacity {
            violations.push(Violation::Bound {
                arc: j,
                flow: x,
                capacity: a.capacity,
            });
        }
        net[a.tail] += x;
        net[a.head] -= x;
        objective += a.cost as i128 * x as i128;
        if x > 0 {
            objective += a.fixed as i128;
        }
    }
    for (i, (&n, &b)) in net.iter().zip(problem.supply()).enumerate() {
        if n != b {
            violations.push(Violation::Conservation {
                node: i,
                net: n,
                supply: b,
            });
        }
    }
    SolutionReport {
        violations,
        objective: objective as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netcore::ArcData;

    fn diagonal() -> NetworkProblem {
        NetworkProblem::new(
            vec![5, 5, -5, -5],
            vec![
                ArcData::new(0, 2, 1, 0, 10),
                ArcData::new(0, 3, 1, 100, 10),
                ArcData::new(1, 2, 1, 100, 10),
                ArcData::new(1, 3, 1, 0, 10),
            ],
        )
        .unwrap()
    }

    #[test]
    fn no_charges_means_one_pattern() {
        let p = NetworkProblem::new(
            vec![4, 0, -4],
            vec![
                ArcData::new(0, 1, 1, 0, 9),
                ArcData::new(1, 2, 1, 0, 9),
                ArcData::new(0, 2, 3, 0, 9),
            ],
        )
        .unwrap();
        let r = brute_force_opt(&p, DEFAULT_MAX_FC_ARCS).unwrap();
        assert_eq!(r.subsets_explored, 1);
        assert_eq!(r.optimum, 8.0);
        assert!(r.proven);
    }

    #[test]
    fn diagonal_optimum() {
        let r = brute_force_opt(&diagonal(), DEFAULT_MAX_FC_ARCS).unwrap();
        assert_eq!(r.optimum, 10.0);
        assert_eq!(r.witness_flows, vec![5, 0, 0, 5]);
        assert_eq!(r.subsets_explored, 4);
        assert!(check_solution(&diagonal(), &r.witness_flows).is_feasible());
    }

    #[test]
    fn charge_beats_variable_cost() {
        // direct arc is cheap per unit but carries a large charge
        let p = NetworkProblem::new(
            vec![10, 0, -10],
            vec![
                ArcData::new(0, 2, 1, 100, 10),
                ArcData::new(0, 1, 2, 0, 10),
                ArcData::new(1, 2, 2, 0, 10),
            ],
        )
        .unwrap();
        let r = brute_force_opt(&p, DEFAULT_MAX_FC_ARCS).unwrap();
        assert_eq!(r.optimum, 40.0);
        assert_eq!(r.witness_flows, vec![0, 10, 10]);
    }

    #[test]
    fn limits_and_infeasibility() {
        assert_eq!(
            brute_force_opt(&diagonal(), 1),
            Err(OracleError::TooLarge { count: 2, limit: 1 })
        );
        let p = NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 1, 3, 4)]).unwrap();
        assert_eq!(brute_force_opt(&p, 20), Err(OracleError::Infeasible));
    }

    #[test]
    fn report_names_the_faulty_arc() {
        let p = diagonal();
        let r = check_solution(&p, &[11, 0, 0, 5]);
        assert!(!r.is_feasible());
        assert!(r.violations.contains(&Violation::Bound {
            arc: 0,
            flow: 11,
            capacity: 10
        }));
        let r = check_solution(&p, &[5, 0]);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Length { .. })));
        let ok = check_solution(&p, &[5, 0, 0, 5]);
        assert!(ok.is_feasible());
        assert_eq!(ok.objective, 10.0);
    }
}
