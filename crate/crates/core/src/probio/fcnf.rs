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

//! FCNF text format: DIMACS min-cost-flow lines with a trailing fixed charge.
//!
//! ```text
//! c comment
//! p fcnf <nodes> <arcs>
//! n <id> <supply>
//! a <tail> <head> <lower> <capacity> <cost> <fixed>
//! ```
//!
//! Node ids are 1-based, nodes without an `n` line have supply 0 and the
//! lower bound is always 0.

use crate::netcore::{ArcData, NetworkProblem, ProblemError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("problem line declares {declared} arcs, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: node {node} has a second supply line")]
    DuplicateNodeLine { line: usize, node: usize },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn parse_fcnf(text: &str) -> Result<NetworkProblem, ParseError> {
    let mut dims: Option<(usize, usize)> = None;
    let mut supply = Vec::new();
    let mut seen = Vec::new();
    let mut arcs = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if dims.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                if tok.next() != Some("fcnf") {
                    return Err(syntax(line, "expected `p fcnf <nodes> <arcs>`"));
                }
                let n: usize = field(tok.next(), line, "node count")?;
                let m: usize = field(tok.next(), line, "arc count")?;
                if n == 0 {
                    return Err(syntax(line, "node count must be positive"));
                }
                dims = Some((n, m));
                supply = vec![0i64; n];
                seen = vec![false; n];
                arcs.reserve(m);
            }
            "n" | "a" => {
                let (n, _) = dims.ok_or_else(|| syntax(line, "record before problem line"))?;
                let node = |t: Option<&str>, what: &str| -> Result<usize, ParseError> {
                    let id: usize = field(t, line, what)?;
                    if id == 0 || id > n {
                        return Err(syntax(line, format!("{what} {id} out of range 1..={n}")));
                    }
                    Ok(id - 1)
                };
                if kind == "n" {
                    let id = node(tok.next(), "node id")?;
                    if seen[id] {
                        return Err(ParseError::DuplicateNodeLine { line, node: id + 1 });
                    }
                    seen[id] = true;
                    supply[id] = field(tok.next(), line, "supply")?;
                } else {
                    let tail = node(tok.next(), "tail")?;
                    let head = node(tok.next(), "head")?;
                    let lower: i64 = field(tok.next(), line, "lower bound")?;
                    let cap: i64 = field(tok.next(), line, "capacity")?;
                    let cost: i64 = field(tok.next(), line, "cost")?;
                    let fixed: i64 = field(tok.next(), line, "fixed charge")?;
                    if lower != 0 {
                        return Err(syntax(line, "lower bound must be 0"));
                    }
                    if tail == head {
                        let err = ProblemError::BadArcEndpoint {
                            arc: arcs.len(),
                            tail,
                            head,
                        };
                        return Err(syntax(line, err.to_string()));
                    }
                    if cap < 0 || fixed < 0 {
                        let err = ProblemError::NegativeCapacityOrCharge { arc: arcs.len() };
                        return Err(syntax(line, err.to_string()));
                    }
                    arcs.push(ArcData::new(tail, head, cost, fixed, cap));
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
        if tok.next().is_some() {
            return Err(syntax(line, "trailing fields"));
        }
    }

    let (_, m) = dims.ok_or_else(|| syntax(0, "missing problem line"))?;
    if arcs.len() != m {
        return Err(ParseError::CountMismatch {
            declared: m,
            found: arcs.len(),
        });
    }
    Ok(NetworkProblem::new(supply, arcs)?)
}

pub fn write_fcnf(problem: &NetworkProblem) -> String {
    write_fcnf_with_comments(problem, &[])
}

/// Like [`write_fcnf`], with `c` lines at the top.
pub fn write_fcnf_with_comments(problem: &NetworkProblem, comments: &[String]) -> String {
    let mut s = String::with_capacity(32 * (problem.arc_count() + problem.node_count()));
    for c in comments {
        let _ = writeln!(s, "c {c}");
    }
    let _ = writeln!(s, "p fcnf {} {}", problem.node_count(), problem.arc_count());
    for (i, &b) in problem.supply().iter().enumerate() {
        if b != 0 {
            let _ = writeln!(s, "n {} {}", i + 1, b);
        }
    }
    for a in problem.arcs() {
        let _ = writeln!(
            s,
            "a {} {} 0 {} {} {}",
            a.tail + 1,
            a.head + 1,
            a.capacity,
            a.cost,
            a.fixed
        );
    }
    s
}
