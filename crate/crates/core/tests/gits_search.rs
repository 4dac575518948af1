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

use fixnet::gits::{run, run_observed, Event, ParamError, Params, StopReason};
use fixnet::netcore::{solve_lp, ArcData, NetworkProblem};
use fixnet::oracle::check_solution;
use fixnet::probio::{generate_fctp, FctpSpec};
use fixnet_testkit::fixed_charge_bnb;

fn fctp(m: usize, n: usize, seed: u64) -> NetworkProblem {
    generate_fctp(&FctpSpec::new(m, n, 100 * m as i64, (50, 200), seed)).unwrap()
}

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

fn without_charges(p: &NetworkProblem) -> NetworkProblem {
    let arcs = p.arcs().iter().map(|a| ArcData { fixed: 0, ..*a }).collect();
    NetworkProblem::new(p.supply().to_vec(), arcs).unwrap()
}

fn events(p: &NetworkProblem, params: &Params) -> (fixnet::gits::RunResult, Vec<Event>) {
    let mut log = Vec::new();
    let res = run_observed(p, params, &mut |e| log.push(e.clone())).unwrap();
    (res, log)
}

#[test]
fn zero_charges_give_the_lp_optimum() {
    for seed in 0..10 {
        let p = without_charges(&fctp(4, 6, seed));
        let lp = solve_lp(&p, &p.variable_costs()).unwrap();
        let res = run(&p, &Params::default()).unwrap();
        assert_eq!(res.best_value, p.linear_value(lp.flows()), "seed {seed}");
    }
}

#[test]
fn diagonal_instance_reaches_ten() {
    let res = run(&diagonal(), &Params::default()).unwrap();
    assert_eq!(res.best_value, 10.0);
    assert_eq!(res.best_flows, vec![5, 0, 0, 5]);
}

#[test]
fn dense_five_by_five_quality_against_branch_and_bound() {
    let mut ratios = Vec::new();
    for seed in 0..30 {
        let p = fctp(5, 5, 500 + seed);
        let raw: Vec<_> = p.arcs().iter().map(|a| (a.tail, a.head, a.cost, a.capacity)).collect();
        let fixed: Vec<i64> = p.arcs().iter().map(|a| a.fixed).collect();
        let (opt, _) = fixed_charge_bnb(p.supply(), &raw, &fixed).unwrap();
        let res = run(&p, &Params::default()).unwrap();
        let r = res.best_value / opt as f64;
        assert!(r >= 1.0 - 1e-9, "seed {seed}: {} beats optimum {opt}", res.best_value);
        ratios.push(r);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    assert!(mean <= 1.01, "mean ratio {mean}");
}

#[test]
fn out_of_luck_one_stops_after_a_single_outside_iteration() {
    // the diagonal optimum is found before the outside loop starts
    let params = Params {
        out_of_luck: 1,
        ..Params::default()
    };
    let (res, log) = events(&diagonal(), &params);
    assert_eq!(res.stop, StopReason::OutOfLuck);
    assert_eq!(res.stats.outside_iterations, 1);
    let restricted = log.iter().filter(|e| matches!(e, Event::Restricted { .. })).count();
    assert_eq!(restricted, 1);
}

#[test]
fn max_iter_one_allows_one_pivot_per_inside_loop() {
    let params = Params {
        max_iter: 1,
        ..Params::default()
    };
    for seed in 0..5 {
        let (res, log) = events(&fctp(4, 4, seed), &params);
        let mut per_loop = std::collections::HashMap::new();
        for e in &log {
            if let Event::Move {
                j_iter, inside_iter, ..
            } = e
            {
                assert_eq!(*inside_iter, 1);
                *per_loop.entry(*j_iter).or_insert(0) += 1;
            }
        }
        assert!(per_loop.values().all(|&c| c <= 1));
        assert!(res.stats.inside_iterations <= res.stats.outside_iterations as u64);
    }
}

#[test]
fn tabu_arcs_enter_only_by_aspiration() {
    let params = Params {
        descent_tenure: Some(7),
        ascent_tenure: Some(13),
        ..Params::default()
    };
    let mut moves = 0;
    let mut aspired = 0;
    for seed in 0..6 {
        let p = fctp(5, 6, 40 + seed);
        let (_, log) = events(&p, &params);
        // shadow of the tabu list, rebuilt from the reported moves
        let mut tabu = vec![0usize; p.arc_count()];
        let mut current = usize::MAX;
        for e in &log {
            let Event::Move {
                j_iter,
                inside_iter,
                entering,
                leaving,
                x_oj,
                threshold,
                tabu_set,
                tabu_until,
                ..
            } = *e
            else {
                continue;
            };
            if j_iter != current {
                tabu.fill(0);
                current = j_iter;
            }
            assert_eq!(tabu_until, tabu[entering]);
            if tabu[entering] >= inside_iter {
                assert!(x_oj < threshold, "tabu arc {entering} entered without aspiring");
                aspired += 1;
            }
            let tenure = if x_oj < -params.epsilon { 7 } else { 13 };
            if leaving < p.arc_count() {
                assert_eq!(tabu_set, Some(inside_iter + tenure));
                tabu[leaving] = inside_iter + tenure;
            } else {
                assert_eq!(tabu_set, None);
            }
            moves += 1;
        }
    }
    assert!(moves > 100, "only {moves} moves observed");
    eprintln!("{moves} moves, {aspired} by aspiration");
}

#[test]
fn descent_moves_strictly_decrease_the_objective() {
    for seed in 0..8 {
        let p = fctp(4, 4, 80 + seed);
        let (_, log) = events(&p, &Params::default());
        let mut last: Option<(usize, f64)> = None;
        for e in &log {
            match *e {
                Event::Restricted { .. } => last = None,
                Event::Move {
                    j_iter,
                    descent: true,
                    x_oj,
                    value_before,
                    value_after,
                    ..
                } if x_oj < 0.0 => {
                    assert!(value_after < value_before);
                    assert_eq!(value_after - value_before, x_oj);
                    if let Some((j, v)) = last {
                        if j == j_iter {
                            assert!(value_after < v);
                        }
                    }
                    last = Some((j_iter, value_after));
                }
                Event::Move { .. } | Event::DescentEnded { .. } => last = None,
                _ => {}
            }
        }
    }
}

#[test]
fn descent_ends_at_most_once_per_inside_loop() {
    for seed in 0..5 {
        let (_, log) = events(&fctp(4, 5, 120 + seed), &Params::default());
        let mut ended = std::collections::HashMap::new();
        for e in &log {
            if let Event::DescentEnded { j_iter, .. } = e {
                *ended.entry(*j_iter).or_insert(0) += 1;
            }
        }
        assert!(ended.values().all(|&c| c == 1));
    }
}

#[test]
fn without_tabu_phase_no_ascent_move_happens() {
    let params = Params {
        do_tabu: false,
        ..Params::default()
    };
    for seed in 0..8 {
        let (res, log) = events(&fctp(4, 5, 160 + seed), &params);
        for e in &log {
            if let Event::Move { descent, x_oj, .. } = e {
                assert!(*descent && *x_oj < 0.0, "non-descent move with tabu off");
            }
        }
        assert!(check_solution(&fctp(4, 5, 160 + seed), &res.best_flows).is_feasible());
    }
}

#[test]
fn runs_are_deterministic() {
    let p = fctp(5, 6, 9);
    let a = run(&p, &Params::default()).unwrap();
    let b = run(&p, &Params::default()).unwrap();
    assert_eq!(a.best_flows, b.best_flows);
    assert_eq!(a.best_value, b.best_value);
    assert_eq!(a.stats, b.stats);
    assert_eq!(a.best_trace, b.best_trace);
    assert_eq!(
        (a.best_pass, a.gbest_iter, a.total_pivots),
        (b.best_pass, b.gbest_iter, b.total_pivots)
    );
}

#[test]
fn global_best_is_monotone_and_consistent() {
    for seed in 0..10 {
        let p = fctp(4, 6, 200 + seed);
        let (res, log) = events(&p, &Params::default());
        assert!(res.best_trace.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(res.best_trace.last(), Some(&res.best_value));
        let reported: Vec<f64> = log
            .iter()
            .filter_map(|e| match e {
                Event::GlobalBest { value } => Some(*value),
                _ => None,
            })
            .collect();
        assert_eq!(reported, res.best_trace);
        let report = check_solution(&p, &res.best_flows);
        assert!(report.is_feasible(), "{:?}", report.violations);
        assert_eq!(report.objective, res.best_value);
        assert!(res.passes_used <= Params::default().max_pass);
    }
}

#[test]
fn restriction_never_worsens_the_linear_cost() {
    for seed in 0..8 {
        let (_, log) = events(&fctp(5, 5, 240 + seed), &Params::default());
        let mut seen = 0;
        for e in &log {
            if let Event::Restricted {
                linear_before,
                linear_after,
                closed_flow,
                ..
            } = *e
            {
                assert_eq!(closed_flow, 0);
                assert!(linear_after <= linear_before);
                seen += 1;
            }
        }
        assert!(seen > 0);
    }
}

#[test]
fn max_pass_bounds_diversification() {
    let params = Params {
        max_pass: 2,
        lim_match: 1,
        s_lim: 3,
        max_outside_iter: Some(400),
        ..Params::default()
    };
    let mut diversified = 0;
    for seed in 0..6 {
        let (res, log) = events(&fctp(4, 4, 300 + seed), &params);
        let passes: Vec<usize> = log
            .iter()
            .filter_map(|e| match e {
                Event::Diversify { pass, .. } => Some(*pass),
                _ => None,
            })
            .collect();
        diversified += passes.len();
        assert!(passes.iter().all(|&p| p <= params.max_pass));
        assert!(res.passes_used <= params.max_pass);
        if res.stop == StopReason::MaxPass {
            assert_eq!(res.passes_used, params.max_pass);
        }
    }
    assert!(diversified > 0, "no diversification was triggered");
}

#[test]
fn invalid_params_are_rejected_before_solving() {
    let p = diagonal();
    let bad = Params {
        alpha: [0.5, 0.5, 0.5],
        ..Params::default()
    };
    assert!(matches!(
        run(&p, &bad),
        Err(fixnet::gits::SearchError::Params(ParamError::Invalid {
            key: "Alpha",
            ..
        }))
    ));
    let bad = Params {
        s_lim: 0,
        ..Params::default()
    };
    assert!(run(&p, &bad).is_err());
}

#[test]
fn infeasible_problem_is_reported() {
    let p = NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 1, 10, 3)]).unwrap();
    assert!(matches!(
        run(&p, &Params::default()),
        Err(fixnet::gits::SearchError::Simplex(_))
    ));
}
