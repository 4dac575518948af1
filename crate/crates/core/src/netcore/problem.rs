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

use thiserror::Error;

/// Upper limit for the per-instance penalty constant.
pub const BIG_M_CAP: f64 = 1e12;

/// One directed arc of a fixed-charge network.
///
/// Costs, charges and capacities are integers as read from instance files,
/// which keeps every fixed-charge objective value exactly representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcData {
    pub tail: usize,
    pub head: usize,
    /// Variable cost per unit of flow.
    pub cost: i64,
    /// Charge incurred once the arc carries any flow.
    pub fixed: i64,
    pub capacity: i64,
}

impl ArcData {
    pub fn new(tail: usize, head: usize, cost: i64, fixed: i64, capacity: i64) -> Self {
        ArcData {
            tail,
            head,
            cost,
            fixed,
            capacity,
        }
    }

    /// True when the arc belongs to the fixed-charge set.
    #[inline]
    pub fn is_fixed_charge(&self) -> bool {
        self.fixed > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("network has no nodes")]
    NoNodes,
    #[error("supplies sum to {0}, expected 0")]
    UnbalancedSupply(i64),
    #[error("arc {arc} has invalid endpoints ({tail}, {head})")]
    BadArcEndpoint { arc: usize, tail: usize, head: usize },
    #[error("arc {arc} has a negative capacity or fixed charge")]
    NegativeCapacityOrCharge { arc: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("expected {expected} arc flows, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("flow {flow} on arc {arc} outside [0, {capacity}]")]
    BoundViolated { arc: usize, flow: i64, capacity: i64 },
    #[error("node {node} has net outflow {net}, supply is {supply}")]
    ConservationViolated { node: usize, net: i64, supply: i64 },
}

/// A pure network with supplies and fixed-charge arcs. Nodes are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkProblem {
    supply: Vec<i64>,
    arcs: Vec<ArcData>,
}

impl NetworkProblem {
    /// Builds and validates a problem.
    pub fn new(supply: Vec<i64>, arcs: Vec<ArcData>) -> Result<Self, ProblemError> {
        NetworkProblem { supply, arcs }.validate()
    }

    /// Checks every structural invariant and hands the problem back on success.
    pub fn validate(self) -> Result<Self, ProblemError> {
        if self.supply.is_empty() {
            return Err(ProblemError::NoNodes);
        }
        let total: i64 = self.supply.iter().sum();
        if total != 0 {
            return Err(ProblemError::UnbalancedSupply(total));
        }
        let n = self.supply.len();
        for (j, a) in self.arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n || a.tail == a.head {
                return Err(ProblemError::BadArcEndpoint {
                    arc: j,
                    tail: a.tail,
                    head: a.head,
                });
            }
            if a.capacity < 0 || a.fixed < 0 {
                return Err(ProblemError::NegativeCapacityOrCharge { arc: j });
            }
        }
        Ok(self)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.supply.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn supply(&self) -> &[i64] {
        &self.supply
    }

    pub fn arcs(&self) -> &[ArcData] {
        &self.arcs
    }

    #[inline]
    pub fn arc(&self, j: usize) -> &ArcData {
        &self.arcs[j]
    }

    /// Indices of arcs with a positive fixed charge.
    pub fn fixed_charge_arcs(&self) -> Vec<usize> {
        (0..self.arcs.len())
            .filter(|&j| self.arcs[j].is_fixed_charge())
            .collect()
    }

    /// The variable cost vector as reals.
    pub fn variable_costs(&self) -> Vec<f64> {
        self.arcs.iter().map(|a| a.cost as f64).collect()
    }

    /// Penalty constant that dominates any finite objective of this instance:
    /// twice the sum of |c|·U and F, capped at [`BIG_M_CAP`].
    pub fn big_m(&self) -> f64 {
        let mut total: i128 = 0;
        for a in &self.arcs {
            total += (a.cost as i128).abs() * a.capacity as i128 + a.fixed as i128;
        }
        ((2 * total) as f64).clamp(1.0, BIG_M_CAP)
    }

    /// Net outflow per node for the given flows.
    pub fn net_outflow(&self, flows: &[i64]) -> Vec<i64> {
        let mut net = vec![0i64; self.supply.len()];
        for (a, &x) in self.arcs.iter().zip(flows) {
            net[a.tail] += x;
            net[a.head] -= x;
        }
        net
    }

    /// Checks bounds and conservation for a full flow vector.
    pub fn check_flows(&self, flows: &[i64]) -> Result<(), FlowError> {
        if flows.len() != self.arcs.len() {
            return Err(FlowError::LengthMismatch {
                expected: self.arcs.len(),
                got: flows.len(),
            });
        }
        for (j, (a, &x)) in self.arcs.iter().zip(flows).enumerate() {
            if x < 0 || x > a.capacity {
                return Err(FlowError::BoundViolated {
                    arc: j,
                    flow: x,
                    capacity: a.capacity,
                });
            }
        }
        for (i, (net, &b)) in self.net_outflow(flows).into_iter().zip(&self.supply).enumerate() {
            if net != b {
                return Err(FlowError::ConservationViolated {
                    node: i,
                    net,
                    supply: b,
                });
            }
        }
        Ok(())
    }

    /// Fixed-charge objective `cx + Σ{F_j : x_j > 0}` without feasibility checks.
    ///
    /// Evaluated in integer arithmetic; the conversion to `f64` is exact for
    /// every magnitude below 2^53.
    pub fn fc_value(&self, flows: &[i64]) -> f64 {
        let mut total: i128 = 0;
        for (a, &x) in self.arcs.iter().zip(flows) {
            total += a.cost as i128 * x as i128;
            if x > 0 {
                total += a.fixed as i128;
            }
        }
        total as f64
    }

    /// Linear part `cx` only.
    pub fn linear_value(&self, flows: &[i64]) -> f64 {
        let total: i128 = self
            .arcs
            .iter()
            .zip(flows)
            .map(|(a, &x)| a.cost as i128 * x as i128)
            .sum();
        total as f64
    }
}

/// Fixed-charge objective of a feasible flow vector.
pub fn fc_objective(problem: &NetworkProblem, flows: &[i64]) -> Result<f64, FlowError> {
    problem.check_flows(flows)?;
    Ok(problem.fc_value(flows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagonal() -> NetworkProblem {
        // sources 0,1 ; sinks 2,3 ; arcs (0,2) (0,3) (1,2) (1,3)
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
    fn minimal_balanced_instance_is_accepted() {
        let p = NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 3, 0, 10)]).unwrap();
        assert_eq!(p.node_count(), 2);
        assert_eq!(p.arc_count(), 1);
    }

    #[test]
    fn unbalanced_supply_is_rejected() {
        let err = NetworkProblem::new(vec![5, -4], vec![ArcData::new(0, 1, 3, 0, 10)]);
        assert_eq!(err, Err(ProblemError::UnbalancedSupply(1)));
    }

    #[test]
    fn self_loop_is_rejected() {
        let err = NetworkProblem::new(vec![0, 0], vec![ArcData::new(1, 1, 3, 0, 10)]);
        assert!(matches!(err, Err(ProblemError::BadArcEndpoint { arc: 0, .. })));
        let err = NetworkProblem::new(vec![0, 0], vec![ArcData::new(0, 2, 3, 0, 10)]);
        assert!(matches!(err, Err(ProblemError::BadArcEndpoint { .. })));
    }

    #[test]
    fn negative_capacity_or_charge_is_rejected() {
        let err = NetworkProblem::new(vec![0, 0], vec![ArcData::new(0, 1, 3, 0, -1)]);
        assert_eq!(err, Err(ProblemError::NegativeCapacityOrCharge { arc: 0 }));
        let err = NetworkProblem::new(vec![0, 0], vec![ArcData::new(0, 1, 3, -2, 1)]);
        assert_eq!(err, Err(ProblemError::NegativeCapacityOrCharge { arc: 0 }));
    }

    #[test]
    fn fc_objective_examples() {
        let empty = NetworkProblem::new(vec![0, 0], vec![ArcData::new(0, 1, 3, 100, 10)]).unwrap();
        assert_eq!(fc_objective(&empty, &[0]), Ok(0.0));

        let one = NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 3, 100, 10)]).unwrap();
        assert_eq!(fc_objective(&one, &[5]), Ok(115.0));

        assert_eq!(fc_objective(&diagonal(), &[5, 0, 0, 5]), Ok(10.0));
    }

    #[test]
    fn infeasible_flows_are_reported() {
        let p = diagonal();
        assert!(matches!(
            fc_objective(&p, &[11, 0, 0, 5]),
            Err(FlowError::BoundViolated { arc: 0, .. })
        ));
        assert!(matches!(
            fc_objective(&p, &[5, 0, 0, 4]),
            Err(FlowError::ConservationViolated { node: 1, .. })
        ));
        assert!(matches!(
            fc_objective(&p, &[5, 0]),
            Err(FlowError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn big_m_dominates_and_is_capped() {
        let p = diagonal();
        // 2 * (4 * 1 * 10 + 200)
        assert_eq!(p.big_m(), 480.0);
        let huge = NetworkProblem::new(
            vec![0, 0],
            vec![ArcData::new(0, 1, i32::MAX as i64, 0, i32::MAX as i64)],
        )
        .unwrap();
        assert_eq!(huge.big_m(), BIG_M_CAP);
    }
}
