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

//! Network model and the primal simplex engine.

mod problem;
mod simplex;

pub use problem::{fc_objective, ArcData, FlowError, NetworkProblem, ProblemError, BIG_M_CAP};
pub use simplex::{solve_lp, ArcStatus, PivotEval, SimplexError, SimplexState};
