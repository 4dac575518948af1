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

use std::fmt::Write as _;
use std::time::Duration;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("unknown parameter `{0}`")]
    UnknownKey(String),
    #[error("bad value `{value}` for parameter `{key}`")]
    BadValue { key: String, value: String },
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("parameter `{key}` {reason}")]
    Invalid { key: &'static str, reason: &'static str },
}

/// Search parameters. Field defaults are the tuned settings.
///
/// Config keys use the conventional names (`MaxIter`, `TabuTenure`,
/// `sLim`, ...); matching is case-insensitive.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    /// Inside-loop iterations per outside iteration; also bounds the outside
    /// loop unless `max_outside_iter` is set.
    pub max_iter: usize,
    pub max_outside_iter: Option<usize>,
    pub max_pass: usize,
    pub max_inside_improve: usize,
    pub bad_luck: usize,
    pub out_of_luck: usize,
    pub alpha: [f64; 3],
    pub beta: f64,
    pub max_sol: u64,
    pub tabu_tenure: usize,
    /// Defaults to `tabu_tenure`.
    pub descent_tenure: Option<usize>,
    /// Defaults to `tabu_tenure`.
    pub ascent_tenure: Option<usize>,
    pub lim_match: usize,
    pub s_lim: usize,
    pub zero_refresh: usize,
    pub do_tabu: bool,
    pub epsilon: f64,
    /// Seed for randomized helpers. The search itself is deterministic.
    pub rng_seed: u64,
    /// Use the arc capacity instead of the observed flow bound in the
    /// high-frequency branch of diversification.
    pub diversify_use_capacity: bool,
    /// Wall-clock budget, checked between outside iterations.
    pub time_limit: Option<Duration>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            max_iter: 50,
            max_outside_iter: None,
            max_pass: 10,
            max_inside_improve: 40,
            bad_luck: 5,
            out_of_luck: 20,
            alpha: [0.3, 0.45, 0.25],
            beta: 0.4,
            max_sol: 1000,
            tabu_tenure: 10,
            descent_tenure: None,
            ascent_tenure: None,
            lim_match: 10,
            s_lim: 10,
            zero_refresh: 30,
            do_tabu: true,
            epsilon: 1e-6,
            rng_seed: 0,
            diversify_use_capacity: false,
            time_limit: None,
        }
    }
}

const KEYS: &[&str] = &[
    "MaxIter",
    "MaxOutsideIter",
    "MaxPass",
    "MaxInsideImprove",
    "BadLuck",
    "OutOfLuck",
    "Alpha1",
    "Alpha2",
    "Alpha3",
    "Beta",
    "MaxSol",
    "TabuTenure",
    "DescentTenure",
    "AscentTenure",
    "LimMatch",
    "sLim",
    "ZeroRefresh",
    "DoTabu",
    "epsilon",
    "rng_seed",
    "diversify_use_capacity",
    "time_limit",
];

impl Params {
    pub fn descent_tenure(&self) -> usize {
        self.descent_tenure.unwrap_or(self.tabu_tenure)
    }

    pub fn ascent_tenure(&self) -> usize {
        self.ascent_tenure.unwrap_or(self.tabu_tenure)
    }

    pub fn max_outside_iter(&self) -> usize {
        self.max_outside_iter.unwrap_or(self.max_iter)
    }

    /// Iterations during which observed flow bounds keep growing.
    pub fn v_iter(&self) -> usize {
        self.max_iter / 4
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let positive = [
            ("MaxIter", self.max_iter),
            ("MaxPass", self.max_pass),
            ("MaxInsideImprove", self.max_inside_improve),
            ("BadLuck", self.bad_luck),
            ("OutOfLuck", self.out_of_luck),
            ("MaxSol", self.max_sol as usize),
            ("TabuTenure", self.tabu_tenure),
            ("DescentTenure", self.descent_tenure()),
            ("AscentTenure", self.ascent_tenure()),
            ("LimMatch", self.lim_match),
            ("sLim", self.s_lim),
            ("ZeroRefresh", self.zero_refresh),
            ("MaxOutsideIter", self.max_outside_iter()),
        ];
        for (key, v) in positive {
            if v == 0 {
                return Err(ParamError::Invalid {
                    key,
                    reason: "must be positive",
                });
            }
        }
        if self.alpha.iter().any(|a| !a.is_finite() || *a < 0.0) || (self.alpha.iter().sum::<f64>() - 1.0).abs() > 1e-9
        {
            return Err(ParamError::Invalid {
                key: "Alpha",
                reason: "weights must be nonnegative and sum to 1",
            });
        }
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(ParamError::Invalid {
                key: "Beta",
                reason: "must lie in [0, 1]",
            });
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(ParamError::Invalid {
                key: "epsilon",
                reason: "must be positive",
            });
        }
        Ok(())
    }

    /// Sets one parameter from its textual form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ParamError> {
        let value = value.trim();
        let bad = || ParamError::BadValue {
            key: key.to_string(),
            value: value.to_string(),
        };
        let int = || value.parse::<usize>().map_err(|_| bad());
        let real = || value.parse::<f64>().map_err(|_| bad());
        let flag = || match value.to_ascii_lowercase().as_str() {
            "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            _ => Err(bad()),
        };
        let canonical = KEYS
            .iter()
            .find(|k| k.eq_ignore_ascii_case(key.trim()))
            .ok_or_else(|| ParamError::UnknownKey(key.to_string()))?;
        match *canonical {
            "MaxIter" => self.max_iter = int()?,
            "MaxOutsideIter" => self.max_outside_iter = Some(int()?),
            "MaxPass" => self.max_pass = int()?,
            "MaxInsideImprove" => self.max_inside_improve = int()?,
            "BadLuck" => self.bad_luck = int()?,
            "OutOfLuck" => self.out_of_luck = int()?,
            "Alpha1" => self.alpha[0] = real()?,
            "Alpha2" => self.alpha[1] = real()?,
            "Alpha3" => self.alpha[2] = real()?,
            "Beta" => self.beta = real()?,
            "MaxSol" => self.max_sol = value.parse().map_err(|_| bad())?,
            "TabuTenure" => self.tabu_tenure = int()?,
            "DescentTenure" => self.descent_tenure = Some(int()?),
            "AscentTenure" => self.ascent_tenure = Some(int()?),
            "LimMatch" => self.lim_match = int()?,
            "sLim" => self.s_lim = int()?,
            "ZeroRefresh" => self.zero_refresh = int()?,
            "DoTabu" => self.do_tabu = flag()?,
            "epsilon" => self.epsilon = real()?,
            "rng_seed" => self.rng_seed = value.parse().map_err(|_| bad())?,
            "diversify_use_capacity" => self.diversify_use_capacity = flag()?,
            "time_limit" => {
                let secs = real()?;
                if !(secs.is_finite() && secs >= 0.0) {
                    return Err(bad());
                }
                self.time_limit = Some(Duration::from_secs_f64(secs));
            }
            _ => unreachable!(),
        }
        Ok(())
    }

    /// Applies `key = value` lines on top of `self`. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn apply_config(&mut self, text: &str) -> Result<(), ParamError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ParamError::Syntax(i + 1))?;
            self.set(k.trim(), v)?;
        }
        Ok(())
    }

    /// Defaults overridden by a config text, validated.
    pub fn from_config(text: &str) -> Result<Params, ParamError> {
        let mut p = Params::default();
        p.apply_config(text)?;
        p.validate()?;
        Ok(p)
    }

    /// Config text that [`Params::from_config`] reads back to `self`.
    pub fn to_config(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(s, "{k} = {v}");
        };
        line("MaxIter", self.max_iter.to_string());
        if let Some(v) = self.max_outside_iter {
            line("MaxOutsideIter", v.to_string());
        }
        line("MaxPass", self.max_pass.to_string());
        line("MaxInsideImprove", self.max_inside_improve.to_string());
        line("BadLuck", self.bad_luck.to_string());
        line("OutOfLuck", self.out_of_luck.to_string());
        line("Alpha1", format!("{:?}", self.alpha[0]));
        line("Alpha2", format!("{:?}", self.alpha[1]));
        line("Alpha3", format!("{:?}", self.alpha[2]));
        line("Beta", format!("{:?}", self.beta));
        line("MaxSol", self.max_sol.to_string());
        line("TabuTenure", self.tabu_tenure.to_string());
        if let Some(v) = self.descent_tenure {
            line("DescentTenure", v.to_string());
        }
        if let Some(v) = self.ascent_tenure {
            line("AscentTenure", v.to_string());
        }
        line("LimMatch", self.lim_match.to_string());
        line("sLim", self.s_lim.to_string());
        line("ZeroRefresh", self.zero_refresh.to_string());
        line("DoTabu", self.do_tabu.to_string());
        line("epsilon", format!("{:?}", self.epsilon));
        line("rng_seed", self.rng_seed.to_string());
        line("diversify_use_capacity", self.diversify_use_capacity.to_string());
        if let Some(t) = self.time_limit {
            line("time_limit", format!("{:?}", t.as_secs_f64()));
        }
        s
    }
}
