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

//! Seeded instance generators. All randomness comes from `ChaCha8Rng`, so
//! output is identical across platforms for a given seed.

use crate::netcore::{ArcData, NetworkProblem};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("infeasible spec: {0}")]
    InfeasibleSpec(String),
}

/// Inclusive integer range.
pub type Range = (i64, i64);

fn check_range(name: &str, r: Range, min: i64) -> Result<(), GenError> {
    if r.0 > r.1 || r.0 < min {
        return Err(GenError::InvalidSpec(format!(
            "{name} range [{}, {}] must be nonempty and start at {min} or above",
            r.0, r.1
        )));
    }
    Ok(())
}

/// Dense fixed-charge transportation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FctpSpec {
    pub sources: usize,
    pub sinks: usize,
    pub total_supply: i64,
    pub cost_range: Range,
    pub fc_range: Range,
    /// Explicit arc capacity range. `None` gives each arc the smaller of its
    /// source's supply and its sink's demand.
    pub cap_range: Option<Range>,
    pub seed: u64,
}

impl FctpSpec {
    /// Spec with variable costs in [3, 8] and default capacities.
    pub fn new(sources: usize, sinks: usize, total_supply: i64, fc_range: Range, seed: u64) -> Self {
        FctpSpec {
            sources,
            sinks,
            total_supply,
            cost_range: (3, 8),
            fc_range,
            cap_range: None,
            seed,
        }
    }
}

/// Splits `total` into `k` positive integers with random proportions.
///
/// Uniform weights are scaled to the total and floored; entries are raised
/// to at least 1 and the leftover (either sign) is settled on the largest
/// entries.
pub fn partition(total: i64, k: usize, rng: &mut impl Rng) -> Vec<i64> {
    assert!(k > 0 && total >= k as i64);
    let w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=1000)).collect();
    let wsum: i64 = w.iter().sum();
    let mut parts: Vec<i64> = w
        .iter()
        .map(|&x| ((total as i128 * x as i128) / wsum as i128) as i64)
        .map(|x| x.max(1))
        .collect();
    let mut residue = total - parts.iter().sum::<i64>();
    let largest = (0..k).max_by_key(|&i| (parts[i], std::cmp::Reverse(i))).unwrap();
    if residue >= 0 {
        parts[largest] += residue;
    } else {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(parts[i]), i));
        for i in order {
            let take = (parts[i] - 1).min(-residue);
            parts[i] -= take;
            residue += take;
            if residue == 0 {
                break;
            }
        }
    }
    parts
}

/// Complete bipartite problem: sources are nodes `0..m`, sinks follow, arcs
/// run source-major.
pub fn generate_fctp(spec: &FctpSpec) -> Result<NetworkProblem, GenError> {
    let (m, n) = (spec.sources, spec.sinks);
    if m == 0 || n == 0 {
        return Err(GenError::InvalidSpec("need at least one source and one sink".into()));
    }
    check_range("cost", spec.cost_range, i64::MIN)?;
    check_range("fixed charge", spec.fc_range, 0)?;
    if let Some(r) = spec.cap_range {
        check_range("capacity", r, 0)?;
    }
    if spec.total_supply < m.max(n) as i64 {
        return Err(GenError::InfeasibleSpec(format!(
            "total supply {} cannot give every one of {m} sources and {n} sinks a unit",
            spec.total_supply
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let supply = partition(spec.total_supply, m, &mut rng);
    let demand = partition(spec.total_supply, n, &mut rng);
    let mut arcs = Vec::with_capacity(m * n);
    for i in 0..m {
        for k in 0..n {
            let cost = rng.gen_range(spec.cost_range.0..=spec.cost_range.1);
            let fixed = rng.gen_range(spec.fc_range.0..=spec.fc_range.1);
            let cap = match spec.cap_range {
                Some((lo, hi)) => rng.gen_range(lo..=hi),
                None => supply[i].min(demand[k]),
            };
            arcs.push(ArcData::new(i, m + k, cost, fixed, cap));
        }
    }
    let mut b = supply;
    b.extend(demand.iter().map(|d| -d));
    NetworkProblem::new(b, arcs).map_err(|e| GenError::InvalidSpec(e.to_string()))
}

/// Sparse transshipment network in the NETGEN style.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetgenFcSpec {
    pub nodes: usize,
    pub sources: usize,
    pub sinks: usize,
    pub arcs: usize,
    pub total_supply: i64,
    pub cost_range: Range,
    pub fc_range: Range,
    pub cap_range: Range,
    pub seed: u64,
}

impl NetgenFcSpec {
    /// Spec with costs in [3, 8] and capacities in [200, 1500].
    pub fn new(
        nodes: usize,
        sources: usize,
        sinks: usize,
        arcs: usize,
        total_supply: i64,
        fc_range: Range,
        seed: u64,
    ) -> Self {
        NetgenFcSpec {
            nodes,
            sources,
            sinks,
            arcs,
            total_supply,
            cost_range: (3, 8),
            fc_range,
            cap_range: (200, 1500),
            seed,
        }
    }
}

/// Generates a connected network with exactly `spec.arcs` arcs.
///
/// Sources are nodes `0..sources`, sinks the next `sinks` nodes, the rest
/// are transshipment nodes with zero supply. A skeleton routes a feasible
/// flow from sources to sinks (directly or through one random intermediate
/// node), isolated parts are then linked in, and random extra arcs fill up
/// the arc count. Arc order is shuffled at the end.
pub fn generate_netgen_fc(spec: &NetgenFcSpec) -> Result<NetworkProblem, GenError> {
    let n = spec.nodes;
    if spec.sources == 0 || spec.sinks == 0 || spec.sources + spec.sinks > n {
        return Err(GenError::InvalidSpec(format!(
            "{} sources and {} sinks do not fit {n} nodes",
            spec.sources, spec.sinks
        )));
    }
    check_range("cost", spec.cost_range, i64::MIN)?;
    check_range("fixed charge", spec.fc_range, 0)?;
    check_range("capacity", spec.cap_range, 1)?;
    if spec.arcs + 1 < n {
        return Err(GenError::InvalidSpec(format!(
            "{} arcs cannot connect {n} nodes",
            spec.arcs
        )));
    }
    if spec.arcs as u128 > n as u128 * (n as u128 - 1) {
        return Err(GenError::InvalidSpec(format!(
            "{} arcs exceed the {n}-node simple digraph",
            spec.arcs
        )));
    }
    if spec.total_supply < spec.sources.max(spec.sinks) as i64 {
        return Err(GenError::InfeasibleSpec(format!(
            "total supply {} is below the number of sources or sinks",
            spec.total_supply
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let supply = partition(spec.total_supply, spec.sources, &mut rng);
    let demand = partition(spec.total_supply, spec.sinks, &mut rng);

    let mut net = Builder {
        index: HashMap::new(),
        arcs: Vec::new(),
        used: Vec::new(),
        spec,
    };

    // Northwest-corner pairing gives the amounts each source sends each sink.
    let (mut i, mut k) = (0usize, 0usize);
    let (mut left_s, mut left_d) = (supply[0], demand[0]);
    while i < spec.sources && k < spec.sinks {
        let q = left_s.min(left_d);
        net.route(i, spec.sources + k, q, &mut rng)?;
        left_s -= q;
        left_d -= q;
        if left_s == 0 {
            i += 1;
            if i < spec.sources {
                left_s = supply[i];
            }
        }
        if left_d == 0 {
            k += 1;
            if k < spec.sinks {
                left_d = demand[k];
            }
        }
    }

    // Link every weak component to the one holding node 0.
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(d: &mut [usize], mut a: usize) -> usize {
        while d[a] != a {
            d[a] = d[d[a]];
            a = d[a];
        }
        a
    }
    for &(t, h) in net.index.keys() {
        let (a, b) = (find(&mut dsu, t), find(&mut dsu, h));
        dsu[a] = b;
    }
    let mut members: Vec<usize> = (0..n).filter(|&v| find(&mut dsu, v) == find(&mut dsu, 0)).collect();
    let mut in_main = vec![false; n];
    for &v in &members {
        in_main[v] = true;
    }
    for v in 1..n {
        let (rv, r0) = (find(&mut dsu, v), find(&mut dsu, 0));
        if rv == r0 {
            continue;
        }
        loop {
            let u = members[rng.gen_range(0..members.len())];
            let (t, h) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            if net.add(t, h, &mut rng).is_some() {
                break;
            }
        }
        dsu[rv] = r0;
        for w in v..n {
            if find(&mut dsu, w) == r0 && !in_main[w] {
                in_main[w] = true;
                members.push(w);
            }
        }
    }

    if net.arcs.len() > spec.arcs {
        return Err(GenError::InfeasibleSpec(format!(
            "the feasible skeleton needs {} arcs, only {} requested",
            net.arcs.len(),
            spec.arcs
        )));
    }
    while net.arcs.len() < spec.arcs {
        let t = rng.gen_range(0..n);
        let h = rng.gen_range(0..n);
        if t != h {
            net.add(t, h, &mut rng);
        }
    }
    net.arcs.shuffle(&mut rng);

    let mut b = vec![0i64; n];
    b[..spec.sources].copy_from_slice(&supply);
    for (k, d) in demand.iter().enumerate() {
        b[spec.sources + k] = -d;
    }
    NetworkProblem::new(b, net.arcs).map_err(|e| GenError::InvalidSpec(e.to_string()))
}

struct Builder<'a> {
    index: HashMap<(usize, usize), usize>,
    arcs: Vec<ArcData>,
    // skeleton flow per arc, kept within capacity
    used: Vec<i64>,
    spec: &'a NetgenFcSpec,
}

impl Builder<'_> {
    /// Adds arc `t -> h` with random attributes unless it exists.
    fn add(&mut self, t: usize, h: usize, rng: &mut ChaCha8Rng) -> Option<usize> {
        if self.index.contains_key(&(t, h)) {
            return None;
        }
        self.index.insert((t, h), self.arcs.len());
        let s = self.spec;
        let cost = rng.gen_range(s.cost_range.0..=s.cost_range.1);
        let fixed = rng.gen_range(s.fc_range.0..=s.fc_range.1);
        let cap = rng.gen_range(s.cap_range.0..=s.cap_range.1);
        self.arcs.push(ArcData::new(t, h, cost, fixed, cap));
        self.used.push(0);
        Some(self.arcs.len() - 1)
    }

    fn find_or_add(&mut self, t: usize, h: usize, rng: &mut ChaCha8Rng) -> usize {
        match self.add(t, h, rng) {
            Some(j) => j,
            None => self.index[&(t, h)],
        }
    }

    fn residual(&self, j: usize) -> i64 {
        self.arcs[j].capacity - self.used[j]
    }

    /// Sends `q` units from `s` to `t` over new or spare arcs. Fails once the
    /// skeleton outgrows the arc budget.
    fn route(&mut self, s: usize, t: usize, mut q: i64, rng: &mut ChaCha8Rng) -> Result<(), GenError> {
        let n = self.spec.nodes;
        let mut stalls = 0;
        while q > 0 {
            if self.arcs.len() > self.spec.arcs || stalls > 4 * n {
                return Err(GenError::InfeasibleSpec(format!(
                    "cannot route the supply within {} arcs",
                    self.spec.arcs
                )));
            }
            let direct = self.find_or_add(s, t, rng);
            let r = self.residual(direct);
            if r > 0 {
                let push = r.min(q);
                self.used[direct] += push;
                q -= push;
                continue;
            }
            let mid = loop {
                let v = rng.gen_range(0..n);
                if v != s && v != t {
                    break v;
                }
            };
            let a = self.find_or_add(s, mid, rng);
            let b = self.find_or_add(mid, t, rng);
            let push = self.residual(a).min(self.residual(b)).min(q);
            if push > 0 {
                self.used[a] += push;
                self.used[b] += push;
                q -= push;
            } else {
                stalls += 1;
            }
        }
        Ok(())
    }
}

/// Fixed-charge ranges of the eight Test Set 1 types, `A` to `H`.
pub const FCTP_TYPES: [(char, Range); 8] = [
    ('A', (50, 200)),
    ('B', (100, 400)),
    ('C', (200, 800)),
    ('D', (400, 1600)),
    ('E', (800, 3200)),
    ('F', (1600, 6400)),
    ('G', (3200, 12800)),
    ('H', (6400, 25600)),
];

/// Dimensions `(sources, sinks, total supply)` of Test Set 1.
pub const FCTP_DIMENSIONS: [(usize, usize, i64); 7] = [
    (10, 10, 10_000),
    (10, 20, 15_000),
    (15, 15, 15_000),
    (10, 30, 15_000),
    (50, 50, 50_000),
    (30, 100, 30_000),
    (50, 100, 50_000),
];

pub fn fctp_type(letter: char) -> Option<Range> {
    FCTP_TYPES
        .iter()
        .find(|(c, _)| c.eq_ignore_ascii_case(&letter))
        .map(|&(_, r)| r)
}

/// One named member of a generated suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteEntry {
    Fctp { name: String, spec: FctpSpec },
    Netgen { name: String, spec: NetgenFcSpec },
}

impl SuiteEntry {
    pub fn name(&self) -> &str {
        match self {
            SuiteEntry::Fctp { name, .. } | SuiteEntry::Netgen { name, .. } => name,
        }
    }

    pub fn generate(&self) -> Result<NetworkProblem, GenError> {
        match self {
            SuiteEntry::Fctp { spec, .. } => generate_fctp(spec),
            SuiteEntry::Netgen { spec, .. } => generate_netgen_fc(spec),
        }
    }

    /// Comment lines describing the entry, for the instance file header.
    pub fn describe(&self) -> Vec<String> {
        match self {
            SuiteEntry::Fctp { name, spec } => vec![
                format!("instance {name}"),
                format!(
                    "fctp {}x{} supply {} cost [{},{}] fc [{},{}] seed {}",
                    spec.sources,
                    spec.sinks,
                    spec.total_supply,
                    spec.cost_range.0,
                    spec.cost_range.1,
                    spec.fc_range.0,
                    spec.fc_range.1,
                    spec.seed
                ),
            ],
            SuiteEntry::Netgen { name, spec } => vec![
                format!("instance {name}"),
                format!(
                    "netgen nodes {} sources {} sinks {} arcs {} supply {} cost [{},{}] fc [{},{}] cap [{},{}] seed {}",
                    spec.nodes,
                    spec.sources,
                    spec.sinks,
                    spec.arcs,
                    spec.total_supply,
                    spec.cost_range.0,
                    spec.cost_range.1,
                    spec.fc_range.0,
                    spec.fc_range.1,
                    spec.cap_range.0,
                    spec.cap_range.1,
                    spec.seed
                ),
            ],
        }
    }
}

/// Test Set 1 grid: every dimension and type, `count` instances each.
/// Seeds are `base_seed + ordinal`.
pub fn testset1_suite(count: usize, base_seed: u64) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    for &(m, n, supply) in &FCTP_DIMENSIONS {
        for &(letter, range) in &FCTP_TYPES {
            for r in 1..=count {
                let seed = base_seed + out.len() as u64;
                out.push(SuiteEntry::Fctp {
                    name: format!("fctp_{m}x{n}_{letter}_{r:02}"),
                    spec: FctpSpec::new(m, n, supply, range, seed),
                });
            }
        }
    }
    out
}

/// The 96-cell factorial design of Test Set 2, numbered 1001 to 1096.
pub fn testset2_suite(base_seed: u64) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    for nodes in [500usize, 1000, 3000, 5000] {
        // transportation 30% / 70%, then transshipment 20% / 20%
        for (sp, tp) in [(30usize, 70usize), (20, 20)] {
            for arcs in [10_000usize, 50_000, 100_000] {
                for supply in [100_000i64, 500_000] {
                    for fc in [(20i64, 200i64), (1600, 6400)] {
                        let ordinal = out.len() as u64;
                        out.push(SuiteEntry::Netgen {
                            name: format!("{}", 1001 + ordinal),
                            spec: NetgenFcSpec::new(
                                nodes,
                                nodes * sp / 100,
                                nodes * tp / 100,
                                arcs,
                                supply,
                                fc,
                                base_seed + ordinal,
                            ),
                        });
                    }
                }
            }
        }
    }
    out
}
