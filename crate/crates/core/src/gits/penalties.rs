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

use super::Params;
use crate::netcore::NetworkProblem;

/// Penalty for one arc: `F/v` with the conventions for tiny and huge `v`.
#[inline]
pub fn penalty(fixed: i64, v: f64, big_m: f64, eps: f64) -> f64 {
    if fixed == 0 {
        0.0
    } else if v < eps {
        big_m
    } else if v > big_m {
        0.0
    } else {
        fixed as f64 / v
    }
}

/// Penalty vector for all arcs.
pub fn build_penalties(v: &[f64], fixed: &[i64], big_m: f64, eps: f64) -> Vec<f64> {
    v.iter().zip(fixed).map(|(&v, &f)| penalty(f, v, big_m, eps)).collect()
}

/// Self-organizing penalty state. Vectors are indexed by arc; entries of
/// arcs without a fixed charge stay unused.
#[derive(Debug, Clone, PartialEq)]
pub struct Penalties {
    pub v: Vec<f64>,
    pub p: Vec<f64>,
    pub mean: Vec<f64>,
    /// Largest fixed-charge flow in the first LP solution.
    pub u_o: i64,
    /// Largest flow seen so far per arc.
    pub u0: Vec<i64>,
    pub num_sol: u64,
}

impl Penalties {
    /// Initial state after the plain LP: `v = mean = U` and `U0 = x`.
    pub fn initial(problem: &NetworkProblem, fc: &[usize], lp_flows: &[i64]) -> Self {
        let m = problem.arc_count();
        let mut pen = Penalties {
            v: vec![0.0; m],
            p: vec![0.0; m],
            mean: vec![0.0; m],
            u_o: fc.iter().map(|&j| lp_flows[j]).max().unwrap_or(0),
            u0: vec![0; m],
            num_sol: 0,
        };
        for &j in fc {
            let cap = problem.arc(j).capacity as f64;
            pen.v[j] = cap;
            pen.mean[j] = cap;
            pen.u0[j] = lp_flows[j];
        }
        pen
    }

    /// Recomputes `p` from `v`.
    pub fn rebuild(&mut self, fixed: &[i64], big_m: f64, eps: f64) {
        self.p = build_penalties(&self.v, fixed, big_m, eps);
        debug_assert!(self.p.iter().all(|p| p.is_finite()));
    }

    /// `U0_j = max(U0_j, x_j)` over the given arcs.
    pub fn raise_bounds(&mut self, arcs: impl IntoIterator<Item = usize>, flows: &[i64]) {
        for j in arcs {
            self.u0[j] = self.u0[j].max(flows[j]);
        }
    }

    /// Blends the locally best flows into `v`. The global-best bookkeeping
    /// that accompanies this step belongs to the caller.
    pub fn v_update(&mut self, fc: &[usize], x_star: &[i64], params: &Params) {
        self.num_sol += 1;
        let y = self.num_sol.min(params.max_sol) as f64;
        let x = 1.0 / y;
        let [a1, a2, a3] = params.alpha;
        for &j in fc {
            let xs = x_star[j] as f64;
            self.mean[j] = x * xs + (1.0 - x) * self.mean[j];
            let u_mean = params.beta * self.mean[j] + (1.0 - params.beta) * self.u_o as f64;
            self.v[j] = a1 * xs + a2 * self.v[j] + a3 * u_mean;
        }
    }

    /// Reflects `v` about the proxy bound: `v_j = max(U_o - v_j, 1)`.
    pub fn mini_diversify(&mut self, fc: &[usize]) {
        let u_o = self.u_o as f64;
        for &j in fc {
            self.v[j] = (u_o - self.v[j]).max(1.0);
        }
    }

    /// Frequency-based reset of `v` from zero-flow counts.
    ///
    /// With `use_capacity` the high-frequency branch scales the arc capacity
    /// instead of the observed bound `U0`.
    pub fn diversify_v(&mut self, problem: &NetworkProblem, fc: &[usize], sum_zero: &[u64], use_capacity: bool) {
        let max = fc.iter().map(|&j| sum_zero[j]).max().unwrap_or(0);
        for &j in fc {
            let f = if max == 0 { 0.0 } else { sum_zero[j] as f64 / max as f64 };
            let u0 = self.u0[j] as f64;
            self.v[j] = if sum_zero[j] as f64 > max as f64 / 2.0 {
                let bound = if use_capacity {
                    problem.arc(j).capacity as f64
                } else {
                    u0
                };
                (f * bound).floor()
            } else {
                (f * u0).floor().max(1.0)
            };
        }
    }
}
