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

//! Primal network simplex over a spanning-tree basis.
//!
//! The basis is rooted at an artificial node connected to every real node by
//! an artificial arc. Artificial arcs are priced with a symbolic cost that
//! dominates every finite cost (a two-tier price), so the penalized costs
//! used by the search may themselves be very large without losing the
//! guarantee that artificial arcs are driven out first.
//!
//! Trees are kept strongly feasible: the leaving arc is the last blocking arc
//! met when walking the pivot cycle from the join node in the direction of
//! the flow change. Entering arcs are priced with Dantzig's rule, ties going
//! to the lowest arc index.

use super::problem::NetworkProblem;
use std::ops::{Add, Sub};
use thiserror::Error;

const NONE: usize = usize::MAX;

/// Capacity given to artificial arcs.
const INF_CAP: i64 = i64::MAX / 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcStatus {
    Lower,
    Tree,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("problem is infeasible: {0} flow units remain on artificial arcs")]
    Infeasible(i64),
    #[error("pivot evaluation is stale: the basis changed after it was computed")]
    StalePivotEval,
    #[error("expected {expected} arc costs, got {got}")]
    CostLength { expected: usize, got: usize },
    #[error("cost of arc {0} is not finite")]
    NonFiniteCost(usize),
}

/// Two-tier price: `big` counts units of the symbolic artificial cost.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
struct Price {
    big: i64,
    val: f64,
}

impl Add for Price {
    type Output = Price;
    fn add(self, o: Price) -> Price {
        Price {
            big: self.big + o.big,
            val: self.val + o.val,
        }
    }
}

impl Sub for Price {
    type Output = Price;
    fn sub(self, o: Price) -> Price {
        Price {
            big: self.big - o.big,
            val: self.val - o.val,
        }
    }
}

/// Outcome of a ratio test for one entering arc, priced on the fixed-charge
/// objective.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotEval {
    pub entering: usize,
    /// Leaving arc; equals `entering` for a bound flip.
    pub leaving: usize,
    /// Blocking flow change of the ratio test.
    pub delta: i64,
    /// Exact change of the fixed-charge objective caused by the pivot.
    pub x_oj: f64,
    /// False when the move would push flow onto an artificial arc.
    pub feasible: bool,
    leave_node: usize,
    leave_first: bool,
    version: u64,
}

impl PivotEval {
    pub fn is_bound_flip(&self) -> bool {
        self.leave_node == NONE
    }
}

#[derive(Debug, Clone, Copy)]
struct Cycle {
    first: usize,
    second: usize,
    join: usize,
    delta: i64,
    leave_node: usize,
    leave_first: bool,
}

/// Basis, flows and potentials of one network LP.
///
/// Real arcs are `0..arc_count`, artificial arc `arc_count + i` joins node
/// `i` with the root, which has index `node_count`.
#[derive(Debug, Clone)]
pub struct SimplexState {
    nodes: usize,
    arcs: usize,
    tail: Vec<usize>,
    head: Vec<usize>,
    cap: Vec<i64>,
    supply: Vec<i64>,
    cost: Vec<f64>,
    flow: Vec<i64>,
    status: Vec<ArcStatus>,
    parent: Vec<usize>,
    pred: Vec<usize>,
    depth: Vec<usize>,
    first_child: Vec<usize>,
    next_sibling: Vec<usize>,
    prev_sibling: Vec<usize>,
    pot: Vec<Price>,
    version: u64,
    pivots: u64,
    last_cycle: Vec<usize>,
    stack: Vec<usize>,
}

/// Solves `min costs·x` over the network polytope from an all-artificial basis.
pub fn solve_lp(problem: &NetworkProblem, costs: &[f64]) -> Result<SimplexState, SimplexError> {
    let mut state = SimplexState::new(problem, costs)?;
    state.optimize();
    state.ensure_feasible()?;
    Ok(state)
}

impl SimplexState {
    /// Builds the all-artificial starting basis without pivoting.
    pub fn new(problem: &NetworkProblem, costs: &[f64]) -> Result<Self, SimplexError> {
        let n = problem.node_count();
        let m = problem.arc_count();
        check_costs(costs, m)?;
        let root = n;
        let total = m + n;

        let mut tail = Vec::with_capacity(total);
        let mut head = Vec::with_capacity(total);
        let mut cap = Vec::with_capacity(total);
        let mut flow = vec![0i64; total];
        let mut status = vec![ArcStatus::Lower; total];
        for a in problem.arcs() {
            tail.push(a.tail);
            head.push(a.head);
            cap.push(a.capacity);
        }
        let mut parent = vec![NONE; n + 1];
        let mut pred = vec![NONE; n + 1];
        let mut depth = vec![0usize; n + 1];
        for (i, &b) in problem.supply().iter().enumerate() {
            // Orientation keeps the start strongly feasible: zero-flow
            // artificial arcs point toward the root.
            if b >= 0 {
                tail.push(i);
                head.push(root);
            } else {
                tail.push(root);
                head.push(i);
            }
            cap.push(INF_CAP);
            flow[m + i] = b.abs();
            status[m + i] = ArcStatus::Tree;
            parent[i] = root;
            pred[i] = m + i;
            depth[i] = 1;
        }

        let mut state = SimplexState {
            nodes: n,
            arcs: m,
            tail,
            head,
            cap,
            supply: problem.supply().to_vec(),
            cost: costs.to_vec(),
            flow,
            status,
            parent,
            pred,
            depth,
            first_child: vec![NONE; n + 1],
            next_sibling: vec![NONE; n + 1],
            prev_sibling: vec![NONE; n + 1],
            pot: vec![Price::default(); n + 1],
            version: 0,
            pivots: 0,
            last_cycle: Vec::new(),
            stack: Vec::new(),
        };
        for i in (0..n).rev() {
            state.attach(i, root);
        }
        state.refresh_subtree_children(root);
        Ok(state)
    }

    /// Re-solves for a new cost vector starting from the current basis.
    /// Returns the number of pivots performed.
    pub fn reoptimize(&mut self, costs: &[f64]) -> Result<usize, SimplexError> {
        check_costs(costs, self.arcs)?;
        self.cost.clear();
        self.cost.extend_from_slice(costs);
        let root = self.nodes;
        self.refresh_subtree_children(root);
        self.version += 1;
        let pivots = self.optimize();
        self.ensure_feasible()?;
        Ok(pivots)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    /// Flows on the real arcs.
    pub fn flows(&self) -> &[i64] {
        &self.flow[..self.arcs]
    }

    #[inline]
    pub fn flow(&self, j: usize) -> i64 {
        self.flow[j]
    }

    #[inline]
    pub fn status(&self, j: usize) -> ArcStatus {
        self.status[j]
    }

    #[inline]
    pub fn is_basic(&self, j: usize) -> bool {
        self.status[j] == ArcStatus::Tree
    }

    /// Current working cost vector.
    pub fn costs(&self) -> &[f64] {
        &self.cost
    }

    /// Total pivots (including bound flips) applied to this state.
    pub fn pivot_count(&self) -> u64 {
        self.pivots
    }

    /// Real arcs whose flow was touched by the most recent pivot.
    pub fn last_cycle(&self) -> &[usize] {
        &self.last_cycle
    }

    /// Flow remaining on artificial arcs.
    pub fn artificial_flow(&self) -> i64 {
        self.flow[self.arcs..].iter().sum()
    }

    /// Objective under the working costs.
    pub fn lp_objective(&self) -> f64 {
        self.cost.iter().zip(&self.flow).map(|(&c, &x)| c * x as f64).sum()
    }

    /// Finite part of the reduced cost of a real arc.
    pub fn reduced_cost(&self, j: usize) -> f64 {
        self.reduced(j).val
    }

    /// Finite part of a node potential (the root has potential 0).
    pub fn potential(&self, i: usize) -> f64 {
        self.pot[i].val
    }

    /// True when no arc prices out under the current costs.
    pub fn is_optimal(&self) -> bool {
        self.select_entering().is_none()
    }

    /// Evaluates pivoting nonbasic arc `j` into the basis on the fixed-charge
    /// objective of `problem`. The state is not modified.
    ///
    /// # Panics
    ///
    /// Panics if `j` is not a nonbasic real arc.
    pub fn evaluate_fc_entering(&self, problem: &NetworkProblem, j: usize) -> PivotEval {
        assert!(j < self.arcs, "arc {j} is not a real arc");
        assert!(!self.is_basic(j), "arc {j} is basic");
        let cyc = self.ratio_test(j);
        let delta = cyc.delta;
        let mut change: i128 = 0;
        let mut feasible = true;
        if delta > 0 {
            let entering = if self.status[j] == ArcStatus::Lower {
                delta
            } else {
                -delta
            };
            change += self.fc_change(problem, j, entering);
            let mut side = |start: usize, up_sign: i64| {
                let mut u = start;
                while u != cyc.join {
                    let a = self.pred[u];
                    let d = if self.tail[a] == u {
                        up_sign * delta
                    } else {
                        -up_sign * delta
                    };
                    if a < self.arcs {
                        change += self.fc_change(problem, a, d);
                    } else if d > 0 {
                        feasible = false;
                    }
                    u = self.parent[u];
                }
            };
            side(cyc.first, -1);
            side(cyc.second, 1);
        }
        PivotEval {
            entering: j,
            leaving: if cyc.leave_node == NONE {
                j
            } else {
                self.pred[cyc.leave_node]
            },
            delta,
            x_oj: change as f64,
            feasible,
            leave_node: cyc.leave_node,
            leave_first: cyc.leave_first,
            version: self.version,
        }
    }

    /// Applies a pivot previously evaluated on this exact basis.
    pub fn pivot(&mut self, eval: &PivotEval) -> Result<(), SimplexError> {
        if eval.version != self.version {
            return Err(SimplexError::StalePivotEval);
        }
        let e = eval.entering;
        let (first, second) = self.orient(e);
        let cyc = Cycle {
            first,
            second,
            join: self.join(first, second),
            delta: eval.delta,
            leave_node: eval.leave_node,
            leave_first: eval.leave_first,
        };
        self.apply(e, &cyc);
        Ok(())
    }

    /// Checks every basis invariant. Intended for tests and debugging.
    pub fn verify(&self) -> Result<(), String> {
        let root = self.nodes;
        for i in 0..self.nodes {
            let a = self.pred[i];
            let p = self.parent[i];
            if a == NONE || p == NONE {
                return Err(format!("node {i} is not attached to the tree"));
            }
            if self.status[a] != ArcStatus::Tree {
                return Err(format!("predecessor arc {a} of node {i} is not marked basic"));
            }
            let joins = (self.tail[a] == i && self.head[a] == p) || (self.head[a] == i && self.tail[a] == p);
            if !joins {
                return Err(format!("arc {a} does not join node {i} to its parent {p}"));
            }
            if self.depth[i] != self.depth[p] + 1 {
                return Err(format!("depth label of node {i} is inconsistent"));
            }
            let rc = self.reduced(a);
            let tol = 1e-9 + 1e-9 * (self.pot[i].val.abs() + self.pot[p].val.abs());
            if rc.big != 0 || rc.val.abs() > tol {
                return Err(format!("tree arc {a} has reduced cost {rc:?}"));
            }
        }
        if self.parent[root] != NONE || self.depth[root] != 0 {
            return Err("root labels are corrupted".into());
        }
        let basic = self.status.iter().filter(|&&s| s == ArcStatus::Tree).count();
        if basic != self.nodes {
            return Err(format!("{basic} basic arcs for {} nodes", self.nodes));
        }
        // every node reachable from the root through child lists
        let mut seen = vec![false; self.nodes + 1];
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            if seen[u] {
                return Err(format!("node {u} visited twice"));
            }
            seen[u] = true;
            let mut c = self.first_child[u];
            while c != NONE {
                if self.parent[c] != u {
                    return Err(format!("child list of {u} holds foreign node {c}"));
                }
                stack.push(c);
                c = self.next_sibling[c];
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err("tree does not span all nodes".into());
        }
        let mut net = vec![0i64; self.nodes + 1];
        for e in 0..self.tail.len() {
            let x = self.flow[e];
            if x < 0 || x > self.cap[e] {
                return Err(format!("flow {x} on arc {e} outside bounds"));
            }
            match self.status[e] {
                ArcStatus::Lower if x != 0 => return Err(format!("arc {e} at lower bound carries {x}")),
                ArcStatus::Upper if x != self.cap[e] => return Err(format!("arc {e} at upper bound carries {x}")),
                _ => {}
            }
            net[self.tail[e]] += x;
            net[self.head[e]] -= x;
        }
        for i in 0..self.nodes {
            if net[i] != self.supply[i] {
                return Err(format!("conservation fails at node {i}"));
            }
        }
        Ok(())
    }

    fn ensure_feasible(&self) -> Result<(), SimplexError> {
        match self.artificial_flow() {
            0 => Ok(()),
            left => Err(SimplexError::Infeasible(left)),
        }
    }

    fn optimize(&mut self) -> usize {
        let mut count = 0;
        while let Some(e) = self.select_entering() {
            let cyc = self.ratio_test(e);
            self.apply(e, &cyc);
            count += 1;
        }
        count
    }

    #[inline]
    fn price(&self, e: usize) -> Price {
        if e < self.arcs {
            Price {
                big: 0,
                val: self.cost[e],
            }
        } else {
            Price { big: 1, val: 0.0 }
        }
    }

    #[inline]
    fn reduced(&self, e: usize) -> Price {
        self.price(e) - self.pot[self.tail[e]] + self.pot[self.head[e]]
    }

    /// Dantzig pricing: the largest violation wins, lowest index on ties.
    fn select_entering(&self) -> Option<usize> {
        let mut best = None;
        let mut best_big = 0i64;
        let mut best_val = 0.0f64;
        for e in 0..self.tail.len() {
            let sign = match self.status[e] {
                ArcStatus::Tree => continue,
                ArcStatus::Lower => -1.0,
                ArcStatus::Upper => 1.0,
            };
            if self.cap[e] == 0 {
                continue;
            }
            let rc = self.reduced(e);
            let big = sign as i64 * rc.big;
            let val = sign * rc.val;
            let eligible = big > 0 || (big == 0 && val > self.tolerance(e));
            if !eligible {
                continue;
            }
            if best.is_none() || big > best_big || (big == best_big && val > best_val) {
                best = Some(e);
                best_big = big;
                best_val = val;
            }
        }
        best
    }

    #[inline]
    fn tolerance(&self, e: usize) -> f64 {
        let c = if e < self.arcs { self.cost[e].abs() } else { 0.0 };
        1e-9 + 1e-12 * (c + self.pot[self.tail[e]].val.abs() + self.pot[self.head[e]].val.abs())
    }

    #[inline]
    fn orient(&self, e: usize) -> (usize, usize) {
        if self.status[e] == ArcStatus::Upper {
            (self.head[e], self.tail[e])
        } else {
            (self.tail[e], self.head[e])
        }
    }

    fn join(&self, mut a: usize, mut b: usize) -> usize {
        while a != b {
            if self.depth[a] > self.depth[b] {
                a = self.parent[a];
            } else if self.depth[b] > self.depth[a] {
                b = self.parent[b];
            } else {
                a = self.parent[a];
                b = self.parent[b];
            }
        }
        a
    }

    /// Ratio test along the cycle closed by `e`. Flow moves across `e` from
    /// `first` to `second`, up the tree from `second` to the join and down
    /// from the join to `first`.
    fn ratio_test(&self, e: usize) -> Cycle {
        let (first, second) = self.orient(e);
        let join = self.join(first, second);
        let mut delta = self.cap[e];
        let mut leave_node = NONE;
        let mut leave_first = false;

        let mut u = first;
        while u != join {
            let a = self.pred[u];
            let d = if self.tail[a] == u {
                self.flow[a]
            } else {
                self.cap[a] - self.flow[a]
            };
            if d < delta {
                delta = d;
                leave_node = u;
                leave_first = true;
            }
            u = self.parent[u];
        }
        u = second;
        while u != join {
            let a = self.pred[u];
            let d = if self.tail[a] == u {
                self.cap[a] - self.flow[a]
            } else {
                self.flow[a]
            };
            if d <= delta {
                delta = d;
                leave_node = u;
                leave_first = false;
            }
            u = self.parent[u];
        }
        Cycle {
            first,
            second,
            join,
            delta,
            leave_node,
            leave_first,
        }
    }

    fn fc_change(&self, problem: &NetworkProblem, a: usize, d: i64) -> i128 {
        let arc = problem.arc(a);
        let old = self.flow[a];
        let new = old + d;
        let mut v = arc.cost as i128 * d as i128;
        if old == 0 && new > 0 {
            v += arc.fixed as i128;
        } else if old > 0 && new == 0 {
            v -= arc.fixed as i128;
        }
        v
    }

    fn apply(&mut self, e: usize, cyc: &Cycle) {
        let delta = cyc.delta;
        self.last_cycle.clear();
        self.last_cycle.push(e);
        if delta > 0 {
            self.flow[e] += if self.status[e] == ArcStatus::Lower {
                delta
            } else {
                -delta
            };
        }
        for (start, up_sign) in [(cyc.first, -1i64), (cyc.second, 1i64)] {
            let mut u = start;
            while u != cyc.join {
                let a = self.pred[u];
                if delta > 0 {
                    self.flow[a] += if self.tail[a] == u {
                        up_sign * delta
                    } else {
                        -up_sign * delta
                    };
                }
                if a < self.arcs {
                    self.last_cycle.push(a);
                }
                u = self.parent[u];
            }
        }

        if cyc.leave_node == NONE {
            self.status[e] = match self.status[e] {
                ArcStatus::Lower => ArcStatus::Upper,
                _ => ArcStatus::Lower,
            };
        } else {
            self.exchange(e, cyc);
        }
        self.version += 1;
        self.pivots += 1;
    }

    /// Replaces the leaving tree arc by `e` and relabels the detached subtree.
    fn exchange(&mut self, e: usize, cyc: &Cycle) {
        let u_out = cyc.leave_node;
        let leaving = self.pred[u_out];
        let (u_in, v_in) = if cyc.leave_first {
            (cyc.first, cyc.second)
        } else {
            (cyc.second, cyc.first)
        };
        self.status[leaving] = if self.flow[leaving] == 0 {
            ArcStatus::Lower
        } else {
            ArcStatus::Upper
        };
        self.status[e] = ArcStatus::Tree;

        // Reverse the parent chain from u_in up to u_out.
        let mut u = u_in;
        let mut new_parent = v_in;
        let mut new_arc = e;
        loop {
            let old_parent = self.parent[u];
            let old_arc = self.pred[u];
            self.detach(u);
            self.parent[u] = new_parent;
            self.pred[u] = new_arc;
            self.attach(u, new_parent);
            if u == u_out {
                break;
            }
            new_parent = u;
            new_arc = old_arc;
            u = old_parent;
        }
        self.refresh_subtree(u_in);
    }

    fn detach(&mut self, u: usize) {
        let p = self.parent[u];
        let prev = self.prev_sibling[u];
        let next = self.next_sibling[u];
        if prev != NONE {
            self.next_sibling[prev] = next;
        } else if p != NONE {
            self.first_child[p] = next;
        }
        if next != NONE {
            self.prev_sibling[next] = prev;
        }
        self.prev_sibling[u] = NONE;
        self.next_sibling[u] = NONE;
    }

    fn attach(&mut self, u: usize, p: usize) {
        let old = self.first_child[p];
        self.next_sibling[u] = old;
        self.prev_sibling[u] = NONE;
        if old != NONE {
            self.prev_sibling[old] = u;
        }
        self.first_child[p] = u;
    }

    /// Recomputes depth and potential of `r` from its parent, then of the
    /// whole subtree below it.
    fn refresh_subtree(&mut self, r: usize) {
        self.relabel(r);
        self.refresh_subtree_children(r);
    }

    fn refresh_subtree_children(&mut self, r: usize) {
        let mut stack = std::mem::take(&mut self.stack);
        stack.clear();
        let mut c = self.first_child[r];
        while c != NONE {
            stack.push(c);
            c = self.next_sibling[c];
        }
        while let Some(u) = stack.pop() {
            self.relabel(u);
            let mut c = self.first_child[u];
            while c != NONE {
                stack.push(c);
                c = self.next_sibling[c];
            }
        }
        self.stack = stack;
    }

    #[inline]
    fn relabel(&mut self, u: usize) {
        let p = self.parent[u];
        let a = self.pred[u];
        self.depth[u] = self.depth[p] + 1;
        let price = self.price(a);
        self.pot[u] = if self.tail[a] == u {
            price + self.pot[p]
        } else {
            self.pot[p] - price
        };
    }
}

fn check_costs(costs: &[f64], m: usize) -> Result<(), SimplexError> {
    if costs.len() != m {
        return Err(SimplexError::CostLength {
            expected: m,
            got: costs.len(),
        });
    }
    if let Some(j) = costs.iter().position(|c| !c.is_finite()) {
        return Err(SimplexError::NonFiniteCost(j));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netcore::{fc_objective, ArcData};

    fn two_node() -> NetworkProblem {
        NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 3, 0, 10)]).unwrap()
    }

    #[test]
    fn single_path_is_forced() {
        let p = two_node();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.flows(), &[5]);
        assert_eq!(s.lp_objective(), 15.0);
        s.verify().unwrap();
    }

    #[test]
    fn transportation_with_equal_costs() {
        let p = NetworkProblem::new(
            vec![5, 5, -5, -5],
            vec![
                ArcData::new(0, 2, 1, 0, 10),
                ArcData::new(0, 3, 1, 0, 10),
                ArcData::new(1, 2, 1, 0, 10),
                ArcData::new(1, 3, 1, 0, 10),
            ],
        )
        .unwrap();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.lp_objective(), 10.0);
        s.verify().unwrap();
    }

    #[test]
    fn infeasible_when_capacity_is_short() {
        let p = NetworkProblem::new(vec![5, -5], vec![ArcData::new(0, 1, 3, 0, 4)]).unwrap();
        assert_eq!(
            solve_lp(&p, &p.variable_costs()).unwrap_err(),
            SimplexError::Infeasible(2)
        );
        let disconnected = NetworkProblem::new(vec![1, -1, 0], vec![ArcData::new(0, 2, 1, 0, 4)]).unwrap();
        assert!(matches!(
            solve_lp(&disconnected, &disconnected.variable_costs()),
            Err(SimplexError::Infeasible(_))
        ));
    }

    #[test]
    fn cost_vector_is_checked() {
        let p = two_node();
        assert!(matches!(
            solve_lp(&p, &[]),
            Err(SimplexError::CostLength { expected: 1, got: 0 })
        ));
        assert_eq!(solve_lp(&p, &[f64::NAN]).unwrap_err(), SimplexError::NonFiniteCost(0));
    }

    #[test]
    fn negative_cost_cycle_saturates() {
        // circulation 0 -> 1 -> 2 -> 0 with negative total cost
        let p = NetworkProblem::new(
            vec![0, 0, 0],
            vec![
                ArcData::new(0, 1, -5, 0, 7),
                ArcData::new(1, 2, 1, 0, 9),
                ArcData::new(2, 0, 1, 0, 4),
            ],
        )
        .unwrap();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.flows(), &[4, 4, 4]);
        assert_eq!(s.lp_objective(), -12.0);
        s.verify().unwrap();
    }

    #[test]
    fn reoptimize_with_unchanged_costs_is_free() {
        let p = NetworkProblem::new(
            vec![4, 3, -2, -5],
            vec![
                ArcData::new(0, 2, 2, 0, 10),
                ArcData::new(0, 3, 4, 0, 10),
                ArcData::new(1, 2, 3, 0, 10),
                ArcData::new(1, 3, 1, 0, 10),
                ArcData::new(2, 3, 1, 0, 10),
            ],
        )
        .unwrap();
        let mut s = solve_lp(&p, &p.variable_costs()).unwrap();
        let before = s.lp_objective();
        assert_eq!(s.reoptimize(&p.variable_costs()).unwrap(), 0);
        assert_eq!(s.lp_objective(), before);
    }

    #[test]
    fn big_m_closes_a_positive_arc() {
        // two parallel routes, the cheap one gets penalized
        let p = NetworkProblem::new(
            vec![5, 0, -5],
            vec![
                ArcData::new(0, 2, 1, 0, 10),
                ArcData::new(0, 1, 2, 0, 10),
                ArcData::new(1, 2, 2, 0, 10),
            ],
        )
        .unwrap();
        let mut s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.flows(), &[5, 0, 0]);
        let mut costs = p.variable_costs();
        costs[0] += p.big_m();
        s.reoptimize(&costs).unwrap();
        assert_eq!(s.flows(), &[0, 5, 5]);
        s.verify().unwrap();
    }

    #[test]
    fn cost_neutral_swap_has_zero_delta() {
        // two identical parallel arcs
        let p = NetworkProblem::new(
            vec![5, -5],
            vec![ArcData::new(0, 1, 2, 0, 10), ArcData::new(0, 1, 2, 0, 10)],
        )
        .unwrap();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        let nb = (0..2).find(|&j| !s.is_basic(j)).unwrap();
        let ev = s.evaluate_fc_entering(&p, nb);
        assert_eq!(ev.x_oj, 0.0);
        assert_eq!(ev.delta, 5);
    }

    #[test]
    fn diverting_off_a_charged_arc() {
        // entering c=1,F=50 takes the 5 units of a c=1,F=80 arc
        let p = NetworkProblem::new(
            vec![5, -5],
            vec![ArcData::new(0, 1, 1, 80, 10), ArcData::new(0, 1, 1, 50, 10)],
        )
        .unwrap();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.flows(), &[5, 0]);
        let ev = s.evaluate_fc_entering(&p, 1);
        assert_eq!(ev.delta, 5);
        assert_eq!(ev.leaving, 0);
        assert_eq!(ev.x_oj, -30.0);
        assert!(ev.feasible);
    }

    #[test]
    fn pivot_matches_evaluation_and_detects_staleness() {
        let p = NetworkProblem::new(
            vec![5, -5],
            vec![ArcData::new(0, 1, 1, 80, 10), ArcData::new(0, 1, 1, 50, 10)],
        )
        .unwrap();
        let mut s = solve_lp(&p, &p.variable_costs()).unwrap();
        let before = fc_objective(&p, s.flows()).unwrap();
        let ev = s.evaluate_fc_entering(&p, 1);
        s.pivot(&ev).unwrap();
        s.verify().unwrap();
        assert_eq!(s.flows(), &[0, 5]);
        assert_eq!(fc_objective(&p, s.flows()).unwrap(), before + ev.x_oj);
        assert_eq!(s.status(0), ArcStatus::Lower);
        assert_eq!(s.pivot(&ev), Err(SimplexError::StalePivotEval));
    }

    #[test]
    fn bound_flip_keeps_the_tree() {
        // arc 1 is a cheaper bypass whose capacity binds first
        let p = NetworkProblem::new(
            vec![5, -5],
            vec![ArcData::new(0, 1, 4, 0, 10), ArcData::new(0, 1, 9, 0, 3)],
        )
        .unwrap();
        let mut s = solve_lp(&p, &p.variable_costs()).unwrap();
        assert_eq!(s.status(1), ArcStatus::Lower);
        let pred_before: Vec<ArcStatus> = (0..2).map(|j| s.status(j)).collect();
        let ev = s.evaluate_fc_entering(&p, 1);
        assert!(ev.is_bound_flip());
        assert_eq!(ev.leaving, 1);
        assert_eq!(ev.delta, 3);
        s.pivot(&ev).unwrap();
        assert_eq!(s.status(1), ArcStatus::Upper);
        assert_eq!(s.status(0), pred_before[0]);
        assert_eq!(s.flows(), &[2, 3]);
        s.verify().unwrap();
    }

    #[test]
    fn degenerate_pivot_changes_tree_not_flows() {
        // node 1 is a transshipment node with zero throughput
        let p = NetworkProblem::new(
            vec![5, 0, -5],
            vec![
                ArcData::new(0, 2, 1, 0, 10),
                ArcData::new(0, 1, 1, 0, 10),
                ArcData::new(1, 2, 1, 0, 10),
            ],
        )
        .unwrap();
        let s = solve_lp(&p, &p.variable_costs()).unwrap();
        let flows = s.flows().to_vec();
        let nb: Vec<usize> = (0..3).filter(|&j| !s.is_basic(j)).collect();
        let mut found = false;
        for j in nb {
            let ev = s.evaluate_fc_entering(&p, j);
            if ev.delta == 0 && !ev.is_bound_flip() {
                let mut t = s.clone();
                t.pivot(&ev).unwrap();
                assert_eq!(t.flows(), &flows[..]);
                assert!(t.is_basic(j));
                assert!(!t.is_basic(ev.leaving));
                t.verify().unwrap();
                found = true;
            }
        }
        assert!(found, "expected a degenerate candidate");
    }
}
