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

//! The ghost-image tabu search main routine.

use super::memory::{DupMemory, DupOutcome};
use super::params::{ParamError, Params};
use super::penalties::Penalties;
use crate::netcore::{solve_lp, NetworkProblem, PivotEval, SimplexError, SimplexState};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Simplex(#[from] SimplexError),
}

/// Why the outside loop ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    OutsideIterations,
    OutOfLuck,
    MaxPass,
    TimeLimit,
}

/// Bookkeeping counters. None of them steers the search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub outside_iterations: usize,
    pub inside_iterations: u64,
    pub inside_pivots: u64,
    pub empty_candidate_sets: u64,
    pub descent_improve: u64,
    pub all_ts_improve: u64,
    pub best_iter: usize,
    pub best_iter_g: usize,
    pub mini_diversifications: u64,
    pub diversifications: u64,
    pub matches: u64,
    pub recover: u64,
    pub max_recover: u64,
    pub s_max: usize,
    pub num_sol: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_flows: Vec<i64>,
    pub best_value: f64,
    pub best_pass: usize,
    pub gbest_iter: usize,
    pub passes_used: usize,
    /// Simplex pivots of every kind, LP re-solves included.
    pub total_pivots: u64,
    pub elapsed: Duration,
    pub stop: StopReason,
    pub stats: SearchStats,
    /// Successive global-best values, one per improvement.
    pub best_trace: Vec<f64>,
}

/// Trace of notable steps, for tests and diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub enum Event {
    /// Restricted LP re-solve at the start of an outside iteration.
    Restricted {
        j_iter: usize,
        linear_before: f64,
        linear_after: f64,
        value: f64,
        pivots: usize,
        closed_flow: i64,
    },
    /// One inside-loop pivot.
    Move {
        j_iter: usize,
        inside_iter: usize,
        entering: usize,
        leaving: usize,
        x_oj: f64,
        value_before: f64,
        value_after: f64,
        descent: bool,
        /// `Tabu(entering)` when it was selected.
        tabu_until: usize,
        /// Aspiration threshold `Aspire - x_o''` at selection.
        threshold: f64,
        /// `Tabu(leaving)` after the move.
        tabu_set: Option<usize>,
    },
    /// Inside iteration in which no arc was admissible.
    NoMove {
        j_iter: usize,
        inside_iter: usize,
    },
    DescentEnded {
        j_iter: usize,
        inside_iter: usize,
    },
    MiniDiversify {
        j_iter: usize,
    },
    Dup {
        j_iter: usize,
        outcome: DupOutcome,
    },
    Diversify {
        pass: usize,
        sum_zero_cleared: bool,
    },
    GlobalBest {
        value: f64,
    },
}

/// Runs the search with default observation.
pub fn run(problem: &NetworkProblem, params: &Params) -> Result<RunResult, SearchError> {
    run_observed(problem, params, &mut |_| {})
}

/// Runs the search, reporting every [`Event`] to `observe`.
pub fn run_observed(
    problem: &NetworkProblem,
    params: &Params,
    observe: &mut dyn FnMut(&Event),
) -> Result<RunResult, SearchError> {
    params.validate()?;
    let start = Instant::now();
    let mut s = Search::start(problem, params, observe)?;
    let stop = s.outside_loop(start)?;
    s.conclude();
    Ok(s.into_result(stop, start.elapsed()))
}

struct Search<'a> {
    problem: &'a NetworkProblem,
    params: &'a Params,
    observe: &'a mut dyn FnMut(&Event),
    fc: Vec<usize>,
    fixed: Vec<i64>,
    base: Vec<f64>,
    work: Vec<f64>,
    big_m: f64,
    state: SimplexState,
    pen: Penalties,
    dup: DupMemory,
    zero_now: Vec<bool>,
    tabu: Vec<usize>,

    x_star: Vec<i64>,
    xo_star: f64,
    x_g: Option<Vec<i64>>,
    xo_g: f64,
    /// Objective of the current solution x''.
    xo_cur: f64,
    trace: Vec<f64>,

    j_iter: usize,
    inside_iter: usize,
    pass: usize,
    no_luck: usize,
    last_inside_improve: usize,
    best_pass: usize,
    gbest_iter: usize,
    tenure: usize,
    aspire: f64,
    descent: bool,
    improve: bool,
    inside_ok: bool,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    /// Initial LP, first penalized LP and ring seeding.
    fn start(
        problem: &'a NetworkProblem,
        params: &'a Params,
        observe: &'a mut dyn FnMut(&Event),
    ) -> Result<Self, SearchError> {
        let base = problem.variable_costs();
        let state = solve_lp(problem, &base)?;
        let x_star = state.flows().to_vec();
        let xo_star = problem.fc_value(&x_star);
        let fc = problem.fixed_charge_arcs();
        let pen = Penalties::initial(problem, &fc, &x_star);
        let m = problem.arc_count();
        let mut s = Search {
            problem,
            params,
            observe,
            fixed: problem.arcs().iter().map(|a| a.fixed).collect(),
            fc,
            work: base.clone(),
            base,
            big_m: problem.big_m(),
            state,
            pen,
            dup: DupMemory::new(&vec![false; m], params.s_lim, params.lim_match),
            zero_now: vec![false; m],
            tabu: vec![0; m],
            x_star,
            xo_star,
            x_g: None,
            xo_g: f64::INFINITY,
            xo_cur: xo_star,
            trace: Vec::new(),
            j_iter: 0,
            inside_iter: 0,
            pass: 0,
            no_luck: 0,
            last_inside_improve: 0,
            best_pass: 0,
            gbest_iter: 0,
            tenure: params.descent_tenure(),
            aspire: xo_star,
            descent: false,
            improve: false,
            inside_ok: false,
            stats: SearchStats::default(),
        };

        s.solve_penalized()?;
        s.pen.num_sol = 1;
        s.pen.raise_bounds(s.fc.iter().copied(), s.state.flows());
        if s.improves(s.xo_cur, s.xo_star) {
            s.take_current_as_star();
            s.descent = true;
            s.v_update();
        }
        s.build_zero_now();
        s.dup = DupMemory::new(&s.zero_now, params.s_lim, params.lim_match);
        Ok(s)
    }

    fn outside_loop(&mut self, start: Instant) -> Result<StopReason, SearchError> {
        let params = self.params;
        let mut outside_ok = true;
        let mut stop = StopReason::OutsideIterations;
        while outside_ok {
            if params.time_limit.is_some_and(|t| start.elapsed() >= t) {
                return Ok(StopReason::TimeLimit);
            }
            self.phase1_restrict()?;
            self.inside_loop();

            self.j_iter += 1;
            if self.j_iter > params.max_outside_iter() {
                outside_ok = false;
            }
            if self.improve {
                self.no_luck = 0;
            } else {
                self.no_luck += 1;
                if self.no_luck == params.out_of_luck {
                    stop = StopReason::OutOfLuck;
                    break;
                } else if self.no_luck == params.bad_luck {
                    self.pen.mini_diversify(&self.fc);
                    self.stats.mini_diversifications += 1;
                    self.offer_star_as_global();
                    // forces the next penalized solution to become x*
                    self.xo_star = f64::INFINITY;
                    (self.observe)(&Event::MiniDiversify { j_iter: self.j_iter });
                }
            }

            self.solve_penalized()?;
            // per-arc proxy update; the scalar proxy stays fixed
            self.pen.raise_bounds(self.fc.iter().copied(), self.state.flows());
            if self.improves(self.xo_cur, self.xo_star) {
                self.take_current_as_star();
                self.v_update();
            }
            self.build_zero_now();
            if self.dup_check()? {
                return Ok(StopReason::MaxPass);
            }
        }
        Ok(stop)
    }

    /// Phase I: re-solve with every currently idle fixed-charge arc priced
    /// out, and all other arcs at their variable cost.
    fn phase1_restrict(&mut self) -> Result<(), SearchError> {
        let linear_before = self.problem.linear_value(self.state.flows());
        for j in 0..self.work.len() {
            self.work[j] = self.base[j] + if self.zero_now[j] { self.big_m } else { 0.0 };
        }
        let pivots = self.state.reoptimize(&self.work)?;
        self.xo_cur = self.problem.fc_value(self.state.flows());
        if self.improves(self.xo_cur, self.xo_star) {
            self.descent = true;
        }
        if self.j_iter <= self.params.v_iter() {
            self.pen.raise_bounds(self.fc.iter().copied(), self.state.flows());
        }
        let flows = self.state.flows();
        (self.observe)(&Event::Restricted {
            j_iter: self.j_iter,
            linear_before,
            linear_after: self.problem.linear_value(flows),
            value: self.xo_cur,
            pivots,
            closed_flow: (0..flows.len()).filter(|&j| self.zero_now[j]).map(|j| flows[j]).sum(),
        });
        Ok(())
    }

    /// Phase II: tabu-guided pivoting on the fixed-charge objective.
    fn inside_loop(&mut self) {
        let params = self.params;
        self.inside_iter = 0;
        self.stats.best_iter = 0;
        self.last_inside_improve = 0;
        self.descent = true;
        self.improve = false;
        self.tenure = params.descent_tenure();
        self.tabu.fill(0);
        self.aspire = self.xo_cur.min(self.xo_star);
        self.inside_ok = true;

        while self.inside_iter < params.max_iter && self.inside_ok {
            self.inside_iter += 1;
            self.stats.inside_iterations += 1;
            let threshold = self.aspire - self.xo_cur;
            let mut best: Option<PivotEval> = None;
            for j in 0..self.problem.arc_count() {
                if self.state.is_basic(j) {
                    continue;
                }
                let ev = self.state.evaluate_fc_entering(self.problem, j);
                if !ev.feasible || !(self.tabu[j] < self.inside_iter || ev.x_oj < threshold) {
                    continue;
                }
                if best.as_ref().is_none_or(|b| ev.x_oj < b.x_oj) {
                    best = Some(ev);
                }
            }
            match best {
                Some(ev) => self.descend_step(ev, threshold),
                None => self.no_move(),
            }
            if self.inside_iter - self.last_inside_improve > params.max_inside_improve {
                self.inside_ok = false;
            }
        }
    }

    /// No admissible arc: the iteration counts as non-improving. During the
    /// descent this ends the descent just as a non-improving move would.
    fn no_move(&mut self) {
        self.stats.empty_candidate_sets += 1;
        (self.observe)(&Event::NoMove {
            j_iter: self.j_iter,
            inside_iter: self.inside_iter,
        });
        if self.descent {
            self.end_descent();
            if !self.params.do_tabu {
                self.inside_ok = false;
            }
        }
    }

    fn descend_step(&mut self, ev: PivotEval, threshold: f64) {
        let params = self.params;
        let improving = ev.x_oj < -params.epsilon;
        let tabu_until = self.tabu[ev.entering];
        let was_descent = self.descent;
        if self.descent {
            if improving {
                self.pivot_jstar(&ev);
                self.aspire = self.xo_star.min(self.xo_cur);
                self.stats.descent_improve += 1;
            } else {
                self.end_descent();
                if !params.do_tabu {
                    self.inside_ok = false;
                    return;
                }
                self.pivot_jstar(&ev);
            }
        } else {
            self.pivot_jstar(&ev);
            if improving {
                self.tenure = params.descent_tenure();
                if self.improves(self.xo_cur, self.xo_star) {
                    self.improve = true;
                    self.stats.best_iter = self.inside_iter;
                    self.last_inside_improve = self.inside_iter;
                    self.stats.best_iter_g = self.j_iter;
                    self.take_current_as_star();
                    self.stats.all_ts_improve += 1;
                    self.aspire = self.xo_star;
                    self.v_update();
                }
            } else {
                self.tenure = params.ascent_tenure();
            }
        }
        let until = self.inside_iter + self.tenure;
        // artificial arcs never re-enter from here, they carry no tabu entry
        let tabu_set = self.tabu.get_mut(ev.leaving).map(|t| {
            *t = until;
            until
        });
        (self.observe)(&Event::Move {
            j_iter: self.j_iter,
            inside_iter: self.inside_iter,
            entering: ev.entering,
            leaving: ev.leaving,
            x_oj: ev.x_oj,
            value_before: self.xo_cur - ev.x_oj,
            value_after: self.xo_cur,
            descent: was_descent,
            tabu_until,
            threshold,
            tabu_set,
        });
    }

    /// First non-improving step of a descent: the solution reached is a
    /// local optimum and may become x*.
    fn end_descent(&mut self) {
        self.descent = false;
        self.tenure = self.params.ascent_tenure();
        if self.improves(self.xo_cur, self.xo_star) {
            self.improve = true;
            self.stats.best_iter = self.inside_iter - 1;
            self.last_inside_improve = self.inside_iter - 1;
            self.stats.best_iter_g = self.j_iter;
            self.take_current_as_star();
            self.v_update();
        }
        (self.observe)(&Event::DescentEnded {
            j_iter: self.j_iter,
            inside_iter: self.inside_iter,
        });
    }

    fn pivot_jstar(&mut self, ev: &PivotEval) {
        self.state.pivot(ev).expect("evaluation was taken on the current basis");
        self.stats.inside_pivots += 1;
        self.xo_cur += ev.x_oj;
        debug_assert_eq!(self.xo_cur, self.problem.fc_value(self.state.flows()));
        let flows = self.state.flows();
        for &j in self.state.last_cycle() {
            if self.fixed[j] > 0 {
                self.pen.u0[j] = self.pen.u0[j].max(flows[j]);
            }
        }
    }

    fn v_update(&mut self) {
        self.pen.v_update(&self.fc, &self.x_star, self.params);
        if self.offer_star_as_global() {
            self.gbest_iter = self.j_iter;
        }
    }

    /// Returns true when the run must stop.
    fn dup_check(&mut self) -> Result<bool, SearchError> {
        let outcome = self.dup.check(&self.zero_now);
        (self.observe)(&Event::Dup {
            j_iter: self.j_iter,
            outcome,
        });
        match outcome {
            DupOutcome::Fresh => Ok(false),
            DupOutcome::Match { .. } => {
                self.stats.matches += 1;
                Ok(false)
            }
            DupOutcome::Diversify { .. } => {
                self.stats.matches += 1;
                self.diversify()
            }
        }
    }

    /// Returns true when the pass budget is exhausted.
    fn diversify(&mut self) -> Result<bool, SearchError> {
        let params = self.params;
        if self.offer_star_as_global() {
            self.best_pass = self.pass;
        }
        if self.pass == params.max_pass {
            return Ok(true);
        }
        self.pass += 1;
        self.stats.diversifications += 1;
        self.pen.diversify_v(
            self.problem,
            &self.fc,
            self.dup.sum_zero(),
            params.diversify_use_capacity,
        );
        self.solve_penalized()?;
        self.take_current_as_star();
        self.pen.raise_bounds(self.fc.iter().copied(), self.state.flows());
        self.build_zero_now();
        self.v_update();
        self.dup.restart(&self.zero_now, self.pass, params.zero_refresh);
        (self.observe)(&Event::Diversify {
            pass: self.pass,
            sum_zero_cleared: self.pass.is_multiple_of(params.zero_refresh),
        });
        Ok(false)
    }

    fn conclude(&mut self) {
        if self.offer_star_as_global() {
            self.best_pass = self.pass;
        }
    }

    /// Rebuilds `p` from `v` and re-solves LP(p) from the current basis.
    fn solve_penalized(&mut self) -> Result<(), SearchError> {
        self.pen.rebuild(&self.fixed, self.big_m, self.params.epsilon);
        for j in 0..self.work.len() {
            self.work[j] = self.base[j] + self.pen.p[j];
        }
        self.state.reoptimize(&self.work)?;
        self.xo_cur = self.problem.fc_value(self.state.flows());
        Ok(())
    }

    fn build_zero_now(&mut self) {
        let flows = self.state.flows();
        for j in 0..flows.len() {
            self.zero_now[j] = self.fixed[j] > 0 && flows[j] == 0;
        }
    }

    fn take_current_as_star(&mut self) {
        self.x_star.clear();
        self.x_star.extend_from_slice(self.state.flows());
        self.xo_star = self.xo_cur;
    }

    fn offer_star_as_global(&mut self) -> bool {
        if self.xo_star < self.xo_g {
            self.xo_g = self.xo_star;
            self.x_g = Some(self.x_star.clone());
            self.trace.push(self.xo_g);
            (self.observe)(&Event::GlobalBest { value: self.xo_g });
            true
        } else {
            false
        }
    }

    #[inline]
    fn improves(&self, value: f64, than: f64) -> bool {
        value < than - self.params.epsilon
    }

    fn into_result(mut self, stop: StopReason, elapsed: Duration) -> RunResult {
        self.stats.outside_iterations = self.j_iter;
        self.stats.recover = self.dup.recover;
        self.stats.max_recover = self.dup.max_recover;
        self.stats.s_max = self.dup.s_max;
        self.stats.num_sol = self.pen.num_sol;
        RunResult {
            best_flows: self.x_g.expect("x* is always finite when the run concludes"),
            best_value: self.xo_g,
            best_pass: self.best_pass,
            gbest_iter: self.gbest_iter,
            passes_used: self.pass,
            total_pivots: self.state.pivot_count(),
            elapsed,
            stop,
            stats: self.stats,
            best_trace: self.trace,
        }
    }
}
