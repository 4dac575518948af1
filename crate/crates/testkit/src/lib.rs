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

//! Reference solvers for tests. Deliberately independent of the main crate:
//! everything works on plain arrays so a bug in the solver model cannot leak
//! into its own oracle.

/// A plain arc: `(tail, head, cost, capacity)`.
pub type RawArc = (usize, usize, i64, i64);

/// Cost arithmetic needed by the shortest-path oracle.
pub trait Cost: Copy + PartialOrd + std::ops::Add<Output = Self> + std::ops::Neg<Output = Self> {
    const ZERO: Self;
    fn times(self, units: i64) -> Self;
    /// Whether `cand` is a strict improvement over `cur` for label correction.
    fn improves(cand: Self, cur: Self) -> bool;
}

impl Cost for i64 {
    const ZERO: Self = 0;
    fn times(self, units: i64) -> Self {
        self * units
    }
    fn improves(cand: Self, cur: Self) -> bool {
        cand < cur
    }
}

impl Cost for f64 {
    const ZERO: Self = 0.0;
    fn times(self, units: i64) -> Self {
        self * units as f64
    }
    fn improves(cand: Self, cur: Self) -> bool {
        // rounding can make a zero-cost residual cycle look negative
        cand < cur - 1e-9 * (1.0 + cur.abs())
    }
}

/// Min-cost flow by successive shortest paths.
///
/// Negative-cost arcs are saturated up front so that all residual costs start
/// nonnegative; the remaining imbalance is then routed from a super source to
/// a super sink along Bellman-Ford shortest paths. Returns `None` when the
/// supplies cannot be met.
pub fn min_cost_flow(supply: &[i64], arcs: &[RawArc]) -> Option<(i64, Vec<i64>)> {
    let costs: Vec<i64> = arcs.iter().map(|a| a.2).collect();
    let caps: Vec<i64> = arcs.iter().map(|a| a.3).collect();
    let ends: Vec<(usize, usize)> = arcs.iter().map(|a| (a.0, a.1)).collect();
    successive_shortest_paths(supply, &ends, &costs, &caps)
}

/// Successive shortest paths over arbitrary cost values.
pub fn successive_shortest_paths<C: Cost>(
    supply: &[i64],
    ends: &[(usize, usize)],
    costs: &[C],
    caps: &[i64],
) -> Option<(C, Vec<i64>)> {
    let n = supply.len();
    let s = n;
    let t = n + 1;
    let mut excess = supply.to_vec();
    let mut flows = vec![0i64; ends.len()];
    let mut total = C::ZERO;

    let mut g: Vec<Vec<Edge<C>>> = vec![Vec::new(); n + 2];
    for (k, (&(u, v), (&c, &cap))) in ends.iter().zip(costs.iter().zip(caps)).enumerate() {
        if c < C::ZERO {
            flows[k] = cap;
            total = total + c.times(cap);
            excess[u] -= cap;
            excess[v] += cap;
            add_edge(&mut g, v, u, cap, -c, Some((k, false)));
        } else {
            add_edge(&mut g, u, v, cap, c, Some((k, true)));
        }
    }
    let mut need = 0i64;
    for (i, &e) in excess.iter().enumerate() {
        if e > 0 {
            add_edge(&mut g, s, i, e, C::ZERO, None);
            need += e;
        } else if e < 0 {
            add_edge(&mut g, i, t, -e, C::ZERO, None);
        }
    }

    let mut sent = 0i64;
    loop {
        let mut dist: Vec<Option<C>> = vec![None; n + 2];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n + 2];
        dist[s] = Some(C::ZERO);
        let mut changed = true;
        while changed {
            changed = false;
            for u in 0..n + 2 {
                let Some(du) = dist[u] else { continue };
                for (ei, e) in g[u].iter().enumerate() {
                    let cand = du + e.cost;
                    if e.cap > 0 && dist[e.to].is_none_or(|d| C::improves(cand, d)) {
                        dist[e.to] = Some(cand);
                        prev[e.to] = Some((u, ei));
                        changed = true;
                    }
                }
            }
        }
        let Some(dt) = dist[t] else { break };
        let mut push = i64::MAX;
        let mut v = t;
        while let Some((u, ei)) = prev[v] {
            push = push.min(g[u][ei].cap);
            v = u;
        }
        let mut v = t;
        while let Some((u, ei)) = prev[v] {
            let rev = g[u][ei].rev;
            g[u][ei].cap -= push;
            g[v][rev].cap += push;
            if let Some((k, forward)) = g[u][ei].arc {
                flows[k] += if forward { push } else { -push };
            }
            v = u;
        }
        sent += push;
        total = total + dt.times(push);
    }
    (sent == need).then_some((total, flows))
}

#[derive(Clone)]
struct Edge<C> {
    to: usize,
    cap: i64,
    cost: C,
    rev: usize,
    // original arc and whether pushing along this edge increases its flow
    arc: Option<(usize, bool)>,
}

fn add_edge<C: Cost>(g: &mut [Vec<Edge<C>>], u: usize, v: usize, cap: i64, cost: C, arc: Option<(usize, bool)>) {
    let ru = g[v].len();
    let rv = g[u].len();
    g[u].push(Edge {
        to: v,
        cap,
        cost,
        rev: ru,
        arc,
    });
    g[v].push(Edge {
        to: u,
        cap: 0,
        cost: -cost,
        rev: rv,
        arc: arc.map(|(k, f)| (k, !f)),
    });
}

/// Exact fixed-charge optimum by depth-first branch and bound.
///
/// Each node fixes some arcs open or closed; undecided arcs carry the
/// linearized cost `c + F/U`, which underestimates their true cost, so the
/// node LP plus the charges of arcs fixed open is a lower bound. Returns the
/// optimum and a witness, or `None` if infeasible.
pub fn fixed_charge_bnb(supply: &[i64], arcs: &[RawArc], fixed: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut decided: Vec<Option<bool>> = fixed.iter().map(|&f| (f == 0).then_some(true)).collect();
    let mut best: Option<(i64, Vec<i64>)> = None;
    bnb_node(supply, arcs, fixed, &mut decided, &mut best);
    best
}

fn bnb_node(
    supply: &[i64],
    arcs: &[RawArc],
    fixed: &[i64],
    decided: &mut Vec<Option<bool>>,
    best: &mut Option<(i64, Vec<i64>)>,
) {
    let ends: Vec<(usize, usize)> = arcs.iter().map(|a| (a.0, a.1)).collect();
    let mut costs = Vec::with_capacity(arcs.len());
    let mut caps = Vec::with_capacity(arcs.len());
    let mut paid = 0i64;
    for (k, &(_, _, c, cap)) in arcs.iter().enumerate() {
        match decided[k] {
            Some(false) => {
                costs.push(c as f64);
                caps.push(0);
            }
            Some(true) => {
                costs.push(c as f64);
                caps.push(cap);
                paid += if fixed[k] > 0 { fixed[k] } else { 0 };
            }
            None => {
                let lin = if cap > 0 { fixed[k] as f64 / cap as f64 } else { 0.0 };
                costs.push(c as f64 + lin);
                caps.push(cap);
            }
        }
    }
    let Some((lp, x)) = successive_shortest_paths(supply, &ends, &costs, &caps) else {
        return;
    };
    let bound = lp + paid as f64;
    if let Some((b, _)) = best {
        if bound >= *b as f64 - 1e-9 {
            return;
        }
    }
    let costs_i: Vec<i64> = arcs.iter().map(|a| a.2).collect();
    let value = fixed_charge_value(&costs_i, fixed, &x);
    if best.as_ref().is_none_or(|(b, _)| value < *b) {
        *best = Some((value, x.clone()));
    }
    // branch on the undecided arc with the largest linearization gap
    let gap = |k: usize| {
        let cap = arcs[k].3;
        if decided[k].is_some() || x[k] == 0 || x[k] == cap {
            return 0.0;
        }
        fixed[k] as f64 * (1.0 - x[k] as f64 / cap as f64)
    };
    let Some(k) = (0..arcs.len())
        .filter(|&k| gap(k) > 0.0)
        .max_by(|&a, &b| gap(a).total_cmp(&gap(b)))
    else {
        return;
    };
    for choice in [true, false] {
        decided[k] = Some(choice);
        bnb_node(supply, arcs, fixed, decided, best);
    }
    decided[k] = None;
}

/// Fixed-charge objective `Σ c·x + Σ{F : x > 0}` over plain arrays.
pub fn fixed_charge_value(costs: &[i64], fixed: &[i64], flows: &[i64]) -> i64 {
    costs
        .iter()
        .zip(fixed)
        .zip(flows)
        .map(|((&c, &f), &x)| c * x + if x > 0 { f } else { 0 })
        .sum()
}

/// Enumerates every basic feasible solution of `{Ax = b, 0 ≤ x ≤ U}`.
///
/// A basic solution is a spanning tree of `n - 1` arcs plus a choice of
/// bound for every other arc; tree flows follow by peeling leaves. Only
/// meant for a handful of arcs. Degenerate solutions are reported once per
/// basis that produces them.
pub fn basic_solutions(supply: &[i64], arcs: &[RawArc]) -> Vec<Vec<i64>> {
    let n = supply.len();
    let m = arcs.len();
    let mut out = Vec::new();
    if n == 0 || m + 1 < n {
        return out;
    }
    let mut pick = Vec::with_capacity(n - 1);
    subsets(m, n - 1, 0, &mut pick, &mut |tree| {
        if !spans(n, arcs, tree) {
            return;
        }
        let rest: Vec<usize> = (0..m).filter(|k| !tree.contains(k)).collect();
        for mask in 0u64..(1u64 << rest.len()) {
            let mut x = vec![0i64; m];
            for (b, &k) in rest.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    x[k] = arcs[k].3;
                }
            }
            if tree_flows(supply, arcs, tree, &mut x) {
                out.push(x);
            }
        }
    });
    out
}

fn subsets(m: usize, k: usize, from: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..m {
        if m - i < k - pick.len() {
            break;
        }
        pick.push(i);
        subsets(m, k, i + 1, pick, f);
        pick.pop();
    }
}

fn spans(n: usize, arcs: &[RawArc], tree: &[usize]) -> bool {
    let mut root: Vec<usize> = (0..n).collect();
    fn find(r: &mut [usize], mut a: usize) -> usize {
        while r[a] != a {
            r[a] = r[r[a]];
            a = r[a];
        }
        a
    }
    for &k in tree {
        let a = find(&mut root, arcs[k].0);
        let b = find(&mut root, arcs[k].1);
        if a == b {
            return false;
        }
        root[a] = b;
    }
    true
}

fn tree_flows(supply: &[i64], arcs: &[RawArc], tree: &[usize], x: &mut [i64]) -> bool {
    let n = supply.len();
    // remaining required net outflow per node
    let mut need = supply.to_vec();
    for (k, &(u, v, _, _)) in arcs.iter().enumerate() {
        if !tree.contains(&k) {
            need[u] -= x[k];
            need[v] += x[k];
        }
    }
    let mut deg = vec![0usize; n];
    for &k in tree {
        deg[arcs[k].0] += 1;
        deg[arcs[k].1] += 1;
    }
    let mut used = vec![false; arcs.len()];
    let mut leaves: Vec<usize> = (0..n).filter(|&i| deg[i] == 1).collect();
    while let Some(v) = leaves.pop() {
        if deg[v] != 1 {
            continue;
        }
        let k = *tree
            .iter()
            .find(|&&k| !used[k] && (arcs[k].0 == v || arcs[k].1 == v))
            .unwrap();
        used[k] = true;
        let (a, b, _, cap) = arcs[k];
        let other = if a == v { b } else { a };
        let flow = if a == v { need[v] } else { -need[v] };
        if flow < 0 || flow > cap {
            return false;
        }
        x[k] = flow;
        need[v] = 0;
        if a == v {
            need[other] += flow;
        } else {
            need[other] -= flow;
        }
        deg[v] = 0;
        deg[other] -= 1;
        if deg[other] == 1 {
            leaves.push(other);
        }
    }
    need.iter().all(|&r| r == 0)
}
