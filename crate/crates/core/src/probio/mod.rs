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

//! Instance files and generators.

mod fcnf;
mod generate;

pub use fcnf::{parse_fcnf, write_fcnf, write_fcnf_with_comments, ParseError};
pub use generate::{
    fctp_type, generate_fctp, generate_netgen_fc, partition, testset1_suite, testset2_suite, FctpSpec, GenError,
    NetgenFcSpec, Range, SuiteEntry, FCTP_DIMENSIONS, FCTP_TYPES,
};
