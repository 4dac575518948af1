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

//! Fixed-charge network flow.
//!
//! [`netcore`] holds the problem model and a warm-startable primal network
//! simplex. [`gits`] runs the ghost-image tabu search on top of it,
//! [`probio`] reads, writes and generates instances, and [`oracle`] solves
//! small instances exactly.

// parallel per-arc vectors read clearer with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod gits;
pub mod netcore;
pub mod oracle;
pub mod probio;
