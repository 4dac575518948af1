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

//! Harness behind the `fixnet` binary: runs the search over instance files,
//! optionally compares with the exact oracle, and writes CSV tables.

use fixnet::gits::{self, ParamError, Params, RunResult, SearchError};
use fixnet::netcore::{NetworkProblem, SimplexError};
use fixnet::oracle::{brute_force_opt, OracleError};
use fixnet::probio::{parse_fcnf, GenError, ParseError};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;
use thiserror::Error;

/// CSV header of every result table.
pub const HEADER: [&str; 11] = [
    "instance", "nodes", "arcs", "fc_lo", "fc_hi", "best_z", "time_sec", "oracle_z", "z_ratio", "passes", "pivots",
];

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("problem is infeasible")]
    Infeasible,
    #[error(transparent)]
    Search(SearchError),
    #[error(transparent)]
    Oracle(OracleError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error("{0}")]
    Usage(String),
}

impl BenchError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Parse { .. } | BenchError::Params(_) | BenchError::Usage(_) => 2,
            BenchError::Infeasible => 3,
            _ => 1,
        }
    }
}

impl From<SearchError> for BenchError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Simplex(SimplexError::Infeasible(_)) => BenchError::Infeasible,
            SearchError::Params(p) => BenchError::Params(p),
            e => BenchError::Search(e),
        }
    }
}

impl From<OracleError> for BenchError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Infeasible => BenchError::Infeasible,
            e => BenchError::Oracle(e),
        }
    }
}

/// One row of a result table. Fields are empty when the instance failed or
/// the oracle was not run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    pub instance: String,
    pub nodes: Option<usize>,
    pub arcs: Option<usize>,
    pub fc_lo: Option<i64>,
    pub fc_hi: Option<i64>,
    pub best_z: Option<f64>,
    pub time_sec: Option<f64>,
    pub oracle_z: Option<f64>,
    pub z_ratio: Option<f64>,
    pub passes: Option<usize>,
    pub pivots: Option<u64>,
}

impl Record {
    /// Row with only the instance name, used for failures.
    pub fn failed(instance: &str) -> Self {
        Record {
            instance: instance.to_string(),
            ..Record::default()
        }
    }

    fn fields(&self) -> Vec<String> {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        vec![
            self.instance.clone(),
            opt(self.nodes),
            opt(self.arcs),
            opt(self.fc_lo),
            opt(self.fc_hi),
            opt(self.best_z),
            self.time_sec.map(|t| format!("{t:.3}")).unwrap_or_default(),
            opt(self.oracle_z),
            opt(self.z_ratio),
            opt(self.passes),
            opt(self.pivots),
        ]
    }
}

/// Smallest and largest positive fixed charge.
pub fn fc_range(problem: &NetworkProblem) -> Option<(i64, i64)> {
    let mut it = problem.arcs().iter().map(|a| a.fixed).filter(|&f| f > 0);
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), f| (lo.min(f), hi.max(f))))
}

/// Options shared by every solve.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub params: Params,
    /// Run the exact oracle when the instance is small enough.
    pub oracle: bool,
    pub max_fc_arcs: usize,
}

/// Solves one instance. Only the search call is timed.
pub fn solve_instance(
    name: &str,
    problem: &NetworkProblem,
    opts: &SolveOptions,
) -> Result<(Record, RunResult), BenchError> {
    let start = Instant::now();
    let res = gits::run(problem, &opts.params)?;
    let secs = start.elapsed().as_secs_f64();
    let mut rec = Record {
        instance: name.to_string(),
        nodes: Some(problem.node_count()),
        arcs: Some(problem.arc_count()),
        fc_lo: Some(fc_range(problem).map_or(0, |r| r.0)),
        fc_hi: Some(fc_range(problem).map_or(0, |r| r.1)),
        best_z: Some(res.best_value),
        time_sec: Some((secs * 1000.0).round() / 1000.0),
        passes: Some(res.passes_used),
        pivots: Some(res.total_pivots),
        ..Record::default()
    };
    if opts.oracle && problem.fixed_charge_arcs().len() <= opts.max_fc_arcs {
        let o = brute_force_opt(problem, opts.max_fc_arcs)?;
        rec.oracle_z = Some(o.optimum);
        rec.z_ratio = Some(if o.optimum == 0.0 {
            if res.best_value == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            res.best_value / o.optimum
        });
    }
    Ok((rec, res))
}

/// Reads and parses an instance file.
pub fn load_problem(path: &Path) -> Result<NetworkProblem, BenchError> {
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_fcnf(&text).map_err(|source| BenchError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Instance name of a file: its stem.
pub fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// `.fcnf` files of a directory, sorted by name.
pub fn instance_files(dir: &Path) -> Result<Vec<PathBuf>, BenchError> {
    let io = |source| BenchError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "fcnf") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Solves every file, on up to `threads` worker threads. Results keep the
/// order of `files`; a failed file yields its error in place of a record.
pub fn bench_files(
    files: &[PathBuf],
    opts: &SolveOptions,
    threads: usize,
) -> Vec<Result<Record, (String, BenchError)>> {
    let one = |path: &PathBuf| {
        let name = instance_name(path);
        load_problem(path)
            .and_then(|p| solve_instance(&name, &p, opts))
            .map(|(rec, _)| rec)
            .map_err(|e| (name, e))
    };
    let threads = threads.clamp(1, files.len().max(1));
    if threads == 1 {
        return files.iter().map(one).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<_>>> = files.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= files.len() {
                    break;
                }
                let r = one(&files[k]);
                *slots[k].lock().unwrap() = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every file is processed"))
        .collect()
}

/// Summary row: column means over the records that have each value,
/// labelled `Average`.
pub fn average_row(records: &[Record]) -> Vec<String> {
    fn mean(vals: impl Iterator<Item = f64>) -> String {
        let vals: Vec<f64> = vals.collect();
        if vals.is_empty() {
            String::new()
        } else {
            (vals.iter().sum::<f64>() / vals.len() as f64).to_string()
        }
    }
    let rs = records;
    vec![
        "Average".to_string(),
        mean(rs.iter().filter_map(|r| r.nodes).map(|v| v as f64)),
        mean(rs.iter().filter_map(|r| r.arcs).map(|v| v as f64)),
        mean(rs.iter().filter_map(|r| r.fc_lo).map(|v| v as f64)),
        mean(rs.iter().filter_map(|r| r.fc_hi).map(|v| v as f64)),
        mean(rs.iter().filter_map(|r| r.best_z)),
        mean(rs.iter().filter_map(|r| r.time_sec)),
        mean(rs.iter().filter_map(|r| r.oracle_z)),
        mean(rs.iter().filter_map(|r| r.z_ratio)),
        mean(rs.iter().filter_map(|r| r.passes).map(|v| v as f64)),
        mean(rs.iter().filter_map(|r| r.pivots).map(|v| v as f64)),
    ]
}

/// Writes the header, one row per record and, when there is at least one
/// record and `summary` is set, the `Average` row.
pub fn write_csv<W: Write>(out: W, records: &[Record], summary: bool) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    if summary && !records.is_empty() {
        w.write_record(average_row(records))?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Builds search parameters: defaults, then the config file, then
/// `KEY=VALUE` overrides, then the seed and time limit.
pub fn build_params(
    config: Option<&Path>,
    overrides: &[String],
    seed: Option<u64>,
    time_limit: Option<f64>,
) -> Result<Params, BenchError> {
    let mut params = Params::default();
    if let Some(path) = config {
        let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        params.apply_config(&text)?;
    }
    for kv in overrides {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| BenchError::Usage(format!("expected KEY=VALUE, got `{kv}`")))?;
        params.set(k.trim(), v.trim())?;
    }
    if let Some(seed) = seed {
        params.rng_seed = seed;
    }
    if let Some(t) = time_limit {
        params.set("time_limit", &t.to_string())?;
    }
    params.validate()?;
    Ok(params)
}

/// Solution file: the objective, then one `f <arc> <flow>` line per arc
/// with 1-based arc numbers.
pub fn solution_text(res: &RunResult) -> String {
    let mut s = format!("s {}\n", res.best_value);
    for (j, x) in res.best_flows.iter().enumerate() {
        s.push_str(&format!("f {} {}\n", j + 1, x));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(name: &str, z: f64, t: f64) -> Record {
        Record {
            instance: name.into(),
            nodes: Some(4),
            arcs: Some(4),
            fc_lo: Some(100),
            fc_hi: Some(100),
            best_z: Some(z),
            time_sec: Some(t),
            passes: Some(1),
            pivots: Some(9),
            ..Record::default()
        }
    }

    #[test]
    fn empty_table_is_header_only() {
        let mut out = Vec::new();
        write_csv(&mut out, &[], true).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), format!("{}\n", HEADER.join(",")));
    }

    #[test]
    fn average_row_is_the_column_mean() {
        let rows = [rec("a", 10.0, 0.5), rec("b", 15.0, 0.25), Record::failed("c")];
        let avg = average_row(&rows);
        assert_eq!(avg[0], "Average");
        assert_eq!(avg[5], "12.5");
        assert_eq!(avg[6], "0.375");
        assert_eq!(avg[7], "");
    }

    #[test]
    fn failed_rows_keep_the_column_count() {
        let mut out = Vec::new();
        write_csv(&mut out, &[Record::failed("bad")], false).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().nth(1), Some("bad,,,,,,,,,,"));
    }

    #[test]
    fn overrides_apply_after_defaults() {
        let p = build_params(None, &["MaxPass=1".into(), "DoTabu = false".into()], Some(7), Some(2.5)).unwrap();
        assert_eq!(p.max_pass, 1);
        assert!(!p.do_tabu);
        assert_eq!(p.rng_seed, 7);
        assert_eq!(p.time_limit, Some(std::time::Duration::from_millis(2500)));
        assert!(matches!(
            build_params(None, &["MaxPass".into()], None, None),
            Err(BenchError::Usage(_))
        ));
        assert!(matches!(
            build_params(None, &["Nope=1".into()], None, None),
            Err(BenchError::Params(_))
        ));
    }
}
