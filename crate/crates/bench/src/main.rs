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

use clap::{Args, Parser, Subcommand, ValueEnum};
use fixnet::oracle::{brute_force_opt, DEFAULT_MAX_FC_ARCS};
use fixnet::probio::{
    fctp_type, testset1_suite, testset2_suite, write_fcnf_with_comments, FctpSpec, SuiteEntry, FCTP_DIMENSIONS,
};
use fixnet_bench::{
    bench_files, build_params, instance_files, instance_name, load_problem, solution_text, solve_instance, write_csv,
    BenchError, Record, SolveOptions,
};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Fixed-charge network flow solver and benchmark harness.
#[derive(Parser)]
#[command(name = "fixnet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance; prints a CSV record and writes the flows.
    Solve {
        input: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Solution file (default: the input path with extension `sol`).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate instance files.
    Generate(GenerateArgs),
    /// Solve every `.fcnf` file of a directory into a CSV table.
    Bench {
        dir: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Also run the exact oracle where the instance is small enough.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_FC_ARCS)]
        max_fc_arcs: usize,
        /// Instances solved concurrently.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// CSV file (default: stdout).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact optimum by pattern enumeration.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_FC_ARCS)]
        max_fc_arcs: usize,
        /// Witness solution file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Parameter override, repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Config file with key=value lines.
    #[arg(long, env = "FIXNET_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Wall-clock budget per run, in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Testset1,
    Testset2,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, conflicts_with = "fctp", required_unless_present = "fctp")]
    suite: Option<Suite>,
    /// Single transportation instance, e.g. `50x100`.
    #[arg(long, value_name = "MxN", requires = "fc_type")]
    fctp: Option<String>,
    /// Fixed-charge type `A` to `H`.
    #[arg(long = "type", value_name = "X")]
    fc_type: Option<char>,
    /// Total supply of a single instance (default: the table value for the
    /// dimensions, else 1000 per source).
    #[arg(long)]
    supply: Option<i64>,
    /// Instances per dimension and type in `testset1`.
    #[arg(long, default_value_t = 15)]
    count: usize,
    /// Base seed; suite members use base + ordinal.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Directory for suites (default `.`), file for a single instance
    /// (default stdout).
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fixnet: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), BenchError> {
    match cmd {
        Command::Solve { input, search, output } => solve(&input, &search, output),
        Command::Generate(args) => generate(&args),
        Command::Bench {
            dir,
            search,
            oracle,
            max_fc_arcs,
            threads,
            output,
        } => {
            let opts = SolveOptions {
                params: params_of(&search)?,
                oracle,
                max_fc_arcs,
            };
            let files = instance_files(&dir)?;
            let mut records = Vec::new();
            for r in bench_files(&files, &opts, threads) {
                records.push(r.unwrap_or_else(|(name, e)| {
                    eprintln!("fixnet: {name}: {e}");
                    Record::failed(&name)
                }));
            }
            match output {
                Some(path) => write_csv(create(&path)?, &records, true),
                None => write_csv(std::io::stdout().lock(), &records, true),
            }
        }
        Command::Oracle {
            input,
            max_fc_arcs,
            output,
        } => {
            let p = load_problem(&input)?;
            let res = brute_force_opt(&p, max_fc_arcs)?;
            println!("instance,nodes,arcs,oracle_z,subsets,proven");
            println!(
                "{},{},{},{},{},{}",
                instance_name(&input),
                p.node_count(),
                p.arc_count(),
                res.optimum,
                res.subsets_explored,
                res.proven
            );
            if let Some(path) = output {
                let mut text = format!("s {}\n", res.optimum);
                for (j, x) in res.witness_flows.iter().enumerate() {
                    text.push_str(&format!("f {} {}\n", j + 1, x));
                }
                write_file(&path, text.as_bytes())?;
            }
            Ok(())
        }
    }
}

fn params_of(search: &SearchArgs) -> Result<fixnet::gits::Params, BenchError> {
    build_params(search.config.as_deref(), &search.params, search.seed, search.time_limit)
}

fn solve(input: &Path, search: &SearchArgs, output: Option<PathBuf>) -> Result<(), BenchError> {
    let opts = SolveOptions {
        params: params_of(search)?,
        oracle: false,
        max_fc_arcs: DEFAULT_MAX_FC_ARCS,
    };
    let problem = load_problem(input)?;
    let (rec, res) = solve_instance(&instance_name(input), &problem, &opts)?;
    let sol = output.unwrap_or_else(|| input.with_extension("sol"));
    write_file(&sol, solution_text(&res).as_bytes())?;
    write_csv(std::io::stdout().lock(), &[rec], false)
}

fn generate(args: &GenerateArgs) -> Result<(), BenchError> {
    let entries = match (args.suite, &args.fctp) {
        (Some(Suite::Testset1), _) => testset1_suite(args.count, args.seed),
        (Some(Suite::Testset2), _) => testset2_suite(args.seed),
        (None, Some(dims)) => vec![single_fctp(dims, args)?],
        (None, None) => unreachable!("clap requires a suite or a single instance"),
    };
    if args.suite.is_none() {
        let entry = &entries[0];
        let text = render(entry)?;
        return match &args.output {
            Some(path) => write_file(path, text.as_bytes()),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|source| BenchError::Io {
                    path: PathBuf::from("-"),
                    source,
                }),
        };
    }
    let dir = args.output.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir).map_err(|source| BenchError::Io {
        path: dir.clone(),
        source,
    })?;
    for entry in &entries {
        let text = render(entry)?;
        write_file(&dir.join(format!("{}.fcnf", entry.name())), text.as_bytes())?;
    }
    eprintln!("fixnet: wrote {} instances to {}", entries.len(), dir.display());
    Ok(())
}

fn single_fctp(dims: &str, args: &GenerateArgs) -> Result<SuiteEntry, BenchError> {
    let bad = |msg: String| BenchError::Usage(format!("bad instance shape: {msg}"));
    let (m, n) = dims
        .split_once(['x', 'X'])
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .ok_or_else(|| bad(dims.to_string()))?;
    let letter = args.fc_type.unwrap_or('A');
    let range = fctp_type(letter).ok_or_else(|| bad(format!("type {letter}")))?;
    let supply = args.supply.unwrap_or_else(|| {
        FCTP_DIMENSIONS
            .iter()
            .find(|d| d.0 == m && d.1 == n)
            .map_or(1000 * m as i64, |d| d.2)
    });
    Ok(SuiteEntry::Fctp {
        name: format!("fctp_{m}x{n}_{}", letter.to_ascii_uppercase()),
        spec: FctpSpec::new(m, n, supply, range, args.seed),
    })
}

fn render(entry: &SuiteEntry) -> Result<String, BenchError> {
    let problem = entry.generate()?;
    Ok(write_fcnf_with_comments(&problem, &entry.describe()))
}

fn create(path: &Path) -> Result<std::fs::File, BenchError> {
    std::fs::File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), BenchError> {
    std::fs::write(path, bytes).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}
