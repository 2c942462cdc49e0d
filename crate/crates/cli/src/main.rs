// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `imatch`: generate graphs, run the induced matching pipeline, sweep
//! experiments, query the brute-force oracles and verify certificates.
//!
//! Exit status: 0 success, 1 invalid certificate, 2 usage or input error,
//! 3 algorithmic failure (empty matching, triangle budget, retries).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "imatch",
    version,
    about = "Certified induced matchings in graphs avoiding K_{B,B}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph in edge-list format.
    Generate(GenerateArgs),
    /// Run the pipeline on an edge-list file and print a certificate.
    Run(RunArgs),
    /// Sweep a graph family and write one CSV row per trial.
    Experiment(ExperimentArgs),
    /// Brute-force reference values for a small graph.
    Oracle(OracleArgs),
    /// Check that a certificate is an induced matching of a graph.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Projective,
    Polarity,
    RandomRegular,
    Fixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SamplingArg {
    Independent,
    Fourwise,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Prime field order for projective and polarity graphs.
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Fixture name, e.g. petersen, cycle-6, complete-bipartite-2-3.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct PipelineArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fixed ε in (0, 3); defaults to 1/(2B).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Side size of the forbidden K_{B,B}.
    #[arg(long = "B", default_value_t = 2)]
    b: usize,
    #[arg(long)]
    d0: Option<usize>,
    #[arg(long)]
    max_retries: Option<usize>,
    /// Fall back to a greedy induced matching when every attempt fails.
    #[arg(long)]
    greedy_fallback: bool,
    /// Certify the output (pass `--verify false` to skip).
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    verify: bool,
    /// Keep the sparsification output as is instead of extending it to a
    /// maximal independent set.
    #[arg(long)]
    no_extend: bool,
    #[arg(long, value_enum, default_value_t = SamplingArg::Independent)]
    sampling: SamplingArg,
}

#[derive(Args)]
struct RunArgs {
    /// Edge-list file.
    graph: PathBuf,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Also write the certificate to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Comma-separated field orders (projective, polarity).
    #[arg(long, value_delimiter = ',')]
    q: Vec<u64>,
    /// Comma-separated vertex counts (random-regular).
    #[arg(long, value_delimiter = ',')]
    n: Vec<u64>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Ratio floor for the PASS/FAIL verdict.
    #[arg(long, conflicts_with = "calibrate")]
    floor: Option<f64>,
    /// Derive the floor as half the median ratio over 50 runs at q = 3.
    #[arg(long)]
    calibrate: bool,
    /// Record wall-clock time per trial (makes the CSV non-reproducible).
    #[arg(long)]
    timing: bool,
    /// CSV output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long = "B", default_value_t = 2)]
    b: usize,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    certificate: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Run(a) => commands::run(a),
        Command::Experiment(a) => commands::experiment(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Verify(a) => commands::verify(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
