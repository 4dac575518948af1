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

use fixnet::netcore::{fc_objective, solve_lp, ArcData, NetworkProblem, SimplexError};
use fixnet_testkit::min_cost_flow;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Supplies come from a hidden feasible flow, so every instance is feasible
/// unless `shake` moves some supply around afterwards.
fn random_problem(seed: u64, n: usize, m: usize, cost_lo: i64, shake: bool) -> NetworkProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut supply = vec![0i64; n];
    let arcs: Vec<ArcData> = (0..m)
        .map(|_| {
            let t = rng.gen_range(0..n);
            let mut h = rng.gen_range(0..n - 1);
            if h >= t {
                h += 1;
            }
            let cap = rng.gen_range(0..16);
            let x = rng.gen_range(0..=cap);
            supply[t] += x;
            supply[h] -= x;
            ArcData::new(t, h, rng.gen_range(cost_lo..10), rng.gen_range(0..60), cap)
        })
        .collect();
    if shake {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let q = rng.gen_range(0..8);
        supply[a] += q;
        supply[b] -= q;
    }
    NetworkProblem::new(supply, arcs).unwrap()
}

fn raw(p: &NetworkProblem) -> Vec<(usize, usize, i64, i64)> {
    p.arcs().iter().map(|a| (a.tail, a.head, a.cost, a.capacity)).collect()
}

#[test]
fn six_node_instance_matches_ssp() {
    let mut checked = 0;
    for seed in 0..40 {
        let p = random_problem(seed, 6, 12, 0, seed % 5 == 0);
        let oracle = min_cost_flow(p.supply(), &raw(&p));
        match (solve_lp(&p, &p.variable_costs()), oracle) {
            (Ok(s), Some((z, _))) => {
                assert_eq!(s.lp_objective(), z as f64, "seed {seed}");
                checked += 1;
            }
            (Err(SimplexError::Infeasible(_)), None) => {}
            (a, b) => panic!(
                "seed {seed}: simplex {:?} vs oracle {:?}",
                a.map(|s| s.lp_objective()),
                b
            ),
        }
    }
    assert!(checked >= 25);
}

#[test]
fn warm_start_agrees_with_cold_solve() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..30 {
        let p = random_problem(seed, 12, 40, -2, false);
        let Ok(mut s) = solve_lp(&p, &p.variable_costs()) else {
            continue;
        };
        for _ in 0..5 {
            let costs: Vec<f64> = p
                .arcs()
                .iter()
                .map(|a| (a.cost + rng.gen_range(-3..=3)) as f64)
                .collect();
            s.reoptimize(&costs).unwrap();
            s.verify().unwrap();
            let cold = solve_lp(&p, &costs).unwrap();
            assert_eq!(s.lp_objective(), cold.lp_objective(), "seed {seed}");
        }
    }
}

#[test]
fn fixed_charge_delta_matches_recomputation() {
    for seed in 0..60 {
        let p = random_problem(seed, 5, 8, 0, false);
        let Ok(mut s) = solve_lp(&p, &p.variable_costs()) else {
            continue;
        };
        for step in 0..6 {
            let before = fc_objective(&p, s.flows()).unwrap();
            let nonbasic: Vec<usize> = (0..p.arc_count()).filter(|&j| !s.is_basic(j)).collect();
            for &j in &nonbasic {
                let ev = s.evaluate_fc_entering(&p, j);
                let mut t = s.clone();
                t.pivot(&ev).unwrap();
                t.verify().unwrap();
                if t.artificial_flow() == 0 {
                    let after = fc_objective(&p, t.flows()).unwrap();
                    assert_eq!(after - before, ev.x_oj, "seed {seed} arc {j}");
                    assert!(ev.feasible);
                } else {
                    assert!(!ev.feasible);
                }
            }
            // walk to a neighbouring basis
            let Some(&j) = nonbasic.get(step % nonbasic.len().max(1)) else {
                break;
            };
            let ev = s.evaluate_fc_entering(&p, j);
            if ev.feasible {
                s.pivot(&ev).unwrap();
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lp_solutions_are_integral_feasible_and_optimal(seed in any::<u64>(), n in 2usize..12, extra in 0usize..30) {
        let p = random_problem(seed, n, n + extra, -3, seed % 3 == 0);
        let oracle = min_cost_flow(p.supply(), &raw(&p));
        match solve_lp(&p, &p.variable_costs()) {
            Ok(s) => {
                s.verify().map_err(TestCaseError::fail)?;
                prop_assert!(p.check_flows(s.flows()).is_ok());
                prop_assert!(s.is_optimal());
                prop_assert_eq!(Some(s.lp_objective()), oracle.map(|o| o.0 as f64));
            }
            Err(SimplexError::Infeasible(_)) => prop_assert!(oracle.is_none()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn pivots_preserve_basis_invariants(seed in any::<u64>(), walk in proptest::collection::vec(any::<usize>(), 1..20)) {
        let p = random_problem(seed, 7, 18, 0, false);
        if let Ok(mut s) = solve_lp(&p, &p.variable_costs()) {
            for k in walk {
                let nb: Vec<usize> = (0..p.arc_count()).filter(|&j| !s.is_basic(j)).collect();
                if nb.is_empty() {
                    break;
                }
                let ev = s.evaluate_fc_entering(&p, nb[k % nb.len()]);
                s.pivot(&ev).map_err(|e| TestCaseError::fail(e.to_string()))?;
                s.verify().map_err(TestCaseError::fail)?;
            }
        }
    }
}
