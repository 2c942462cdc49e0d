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

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::Path;
use std::process::ExitCode;

use imatch_core::experiment::{self, ExperimentSpec, Family, StatsRow};
use imatch_core::generators::GeneratorSpec;
use imatch_core::oracle;
use imatch_core::pipeline::{self, EpsilonPolicy, PipelineConfig};
use imatch_core::sparsify::{AttemptStats, SamplingMode};
use imatch_core::{Error, Graph};

use crate::{
    ExperimentArgs, FamilyArg, GenerateArgs, OracleArgs, PipelineArgs, RunArgs, SamplingArg,
    VerifyArgs,
};

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ALGORITHM: u8 = 3;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_algorithmic() {
            EXIT_ALGORITHM
        } else {
            EXIT_USAGE
        };
        let mut message = e.to_string();
        if let Error::RetriesExhausted(stats) = &e {
            message = format!(
                "{}\n{}",
                "all sparsification attempts failed",
                attempt_table(stats)
            );
        }
        CliError { code, message }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

type CliResult = Result<ExitCode, CliError>;

fn attempt_table(stats: &[AttemptStats]) -> String {
    let mut s = String::from(AttemptStats::CSV_HEADER);
    for (i, a) in stats.iter().enumerate() {
        let _ = write!(s, "\n{}", a.csv_row(i));
    }
    s
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let file =
        File::open(path).map_err(|e| CliError::usage(format!("{}: {}", path.display(), e)))?;
    Graph::read_edge_list(BufReader::new(file))
        .map_err(|e| CliError::usage(format!("{}: {}", path.display(), e)))
}

fn emit(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("--{} is required for --family {}", flag, family)))
}

pub fn generate(args: GenerateArgs) -> CliResult {
    let spec = match args.family {
        FamilyArg::Projective => GeneratorSpec::ProjectiveIncidence {
            q: required(args.q, "q", "projective")?,
        },
        FamilyArg::Polarity => GeneratorSpec::Polarity {
            q: required(args.q, "q", "polarity")?,
        },
        FamilyArg::RandomRegular => GeneratorSpec::RandomRegular {
            n: required(args.n, "n", "random-regular")?,
            d: required(args.d, "d", "random-regular")?,
            seed: args.seed,
        },
        FamilyArg::Fixture => GeneratorSpec::Fixture {
            name: required(args.name, "name", "fixture")?,
        },
    };
    let g = spec.build()?;
    let (lo, hi, regular) = g.degree_profile();
    let summary = format!(
        "n={} m={} min_degree={} max_degree={} regular={}",
        g.n(),
        g.m(),
        lo,
        hi,
        regular
    );
    match &args.out {
        Some(path) => {
            emit(Some(path), &g.to_edge_list_string())?;
            println!("{}", summary);
        }
        None => {
            emit(None, &g.to_edge_list_string())?;
            eprintln!("{}", summary);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pipeline_config(args: &PipelineArgs) -> PipelineConfig {
    PipelineConfig {
        b: args.b,
        epsilon: args
            .epsilon
            .map_or(EpsilonPolicy::FromB, EpsilonPolicy::Fixed),
        d0: args.d0,
        max_retries: args.max_retries,
        sampling: match args.sampling {
            SamplingArg::Independent => SamplingMode::Independent,
            SamplingArg::Fourwise => SamplingMode::FourWise,
        },
        seed: args.seed,
        verify: args.verify,
        greedy_fallback: args.greedy_fallback,
        extend_maximal: !args.no_extend,
    }
}

/// Certificate block: one `u v` line per edge, then the CSV stats header and
/// row as `#` comments.
pub fn run(args: RunArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let config = pipeline_config(&args.pipeline);
    config.epsilon()?;
    let result = pipeline::induced_matching(&g, &config)?;
    let row = StatsRow::from_result("input", None, config.seed, &result);
    let mut text = String::new();
    for (u, v) in result.matching.edges() {
        let _ = writeln!(text, "{} {}", u, v);
    }
    let _ = writeln!(text, "# {}", experiment::CSV_HEADER);
    let _ = writeln!(text, "# {}", row.to_csv());
    emit(None, &text)?;
    if let Some(path) = &args.out {
        emit(Some(path), &text)?;
    }
    if config.verify && !result.certificate {
        eprintln!("certificate check failed");
        return Ok(ExitCode::from(EXIT_INVALID));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn experiment(args: ExperimentArgs) -> CliResult {
    let (family, params) = match args.family {
        FamilyArg::Projective => (Family::Projective, args.q),
        FamilyArg::Polarity => (Family::Polarity, args.q),
        FamilyArg::RandomRegular => (
            Family::RandomRegular {
                d: required(args.d, "d", "random-regular")?,
            },
            args.n,
        ),
        FamilyArg::Fixture => {
            return Err(CliError::usage(
                "experiments support projective, polarity and random-regular",
            ))
        }
    };
    let config = pipeline_config(&args.pipeline);
    config.epsilon()?;
    let floor = if args.calibrate {
        Some(experiment::calibrate_floor(args.pipeline.seed, &config)?)
    } else {
        args.floor
    };
    let spec = ExperimentSpec {
        family,
        params,
        trials: args.trials,
        seed: args.pipeline.seed,
        config,
        floor,
        timing: args.timing,
    };
    let report = experiment::run_experiment(&spec)?;
    emit(args.out.as_deref(), &report.csv())?;

    let mut out = String::new();
    if let Some(f) = floor {
        let _ = writeln!(out, "floor,{:.6}", f);
    }
    let _ = writeln!(out, "{}", experiment::SUMMARY_HEADER);
    for s in &report.summaries {
        let _ = writeln!(out, "{}", s.to_line());
    }
    if args.out.is_some() {
        print!("{}", out);
    } else {
        eprint!("{}", out);
    }
    Ok(ExitCode::SUCCESS)
}

pub fn oracle(args: OracleArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.n());
    let _ = writeln!(out, "m {}", g.m());
    let skipped = |e: Error| format!("skipped ({})", e);
    let _ = writeln!(
        out,
        "triangles {}",
        oracle::count_triangles_bf(&g).map_or_else(skipped, |t| t.to_string())
    );
    match oracle::max_induced_matching_bf(&g) {
        Ok((k, w)) => {
            let edges: Vec<String> = w
                .edges()
                .iter()
                .map(|(u, v)| format!("{}-{}", u, v))
                .collect();
            let _ = writeln!(out, "max_induced_matching {} [{}]", k, edges.join(" "));
        }
        Err(e) => {
            let _ = writeln!(out, "max_induced_matching {}", skipped(e));
        }
    }
    match oracle::max_independent_set_bf(&g) {
        Ok((k, s)) => {
            let vs: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "max_independent_set {} [{}]", k, vs.join(" "));
        }
        Err(e) => {
            let _ = writeln!(out, "max_independent_set {}", skipped(e));
        }
    }
    let kbb = match oracle::contains_kbb_bf(&g, args.b) {
        Ok(c) => c.to_string(),
        Err(e @ Error::OracleLimit { .. }) => skipped(e),
        Err(e) => return Err(e.into()),
    };
    let _ = writeln!(out, "contains_k{}_{} {}", args.b, args.b, kbb);
    emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

/// Certificate lines are `u v`; blank lines and `#` comments are skipped.
pub fn parse_certificate(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let parsed = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        match parsed {
            Some(e) => edges.push(e),
            None => {
                return Err(CliError::usage(format!(
                    "certificate line {}: expected \"u v\", got {:?}",
                    i + 1,
                    line
                )))
            }
        }
    }
    Ok(edges)
}

pub fn verify(args: VerifyArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.certificate)
        .map_err(|e| CliError::usage(format!("{}: {}", args.certificate.display(), e)))?;
    let edges = parse_certificate(&text)?;
    match g.is_induced_matching(&edges) {
        Ok(true) => {
            println!("valid induced matching of size {}", edges.len());
            Ok(ExitCode::SUCCESS)
        }
        Ok(false) => {
            println!("invalid: not an induced matching");
            Ok(ExitCode::from(EXIT_INVALID))
        }
        Err(e) => {
            println!("invalid: {}", e);
            Ok(ExitCode::from(EXIT_INVALID))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_parsing() {
        assert_eq!(parse_certificate("").ok().unwrap(), vec![]);
        assert_eq!(
            parse_certificate("0 1\n\n# comment\n3 4\n").ok().unwrap(),
            vec![(0, 1), (3, 4)]
        );
        let err = parse_certificate("0 1\n2 x\n").err().unwrap();
        assert_eq!(err.code, EXIT_USAGE);
        assert!(err.message.contains("line 2"), "{}", err.message);
        assert!(parse_certificate("1 2 3\n").is_err());
    }
}
