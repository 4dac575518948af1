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

//! Ghost-image tabu search for fixed-charge network flow.
//!
//! Each outside iteration solves a penalized LP whose costs `c + F/v` act as
//! a linear stand-in for the fixed charges, restricts it to the arcs it
//! uses, and then pivots on the true fixed-charge objective with a short
//! tabu list. The denominators `v` adapt to the best solutions found.

mod memory;
mod params;
mod penalties;
mod search;

pub use memory::{DupMemory, DupOutcome};
pub use params::{ParamError, Params};
pub use penalties::{build_penalties, penalty, Penalties};
pub use search::{run, run_observed, Event, RunResult, SearchError, SearchStats, StopReason};
