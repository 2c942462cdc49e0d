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

//! Parameter sweeps over graph families and their CSV records.
//!
//! CSV schema (header always emitted, natural log in the ratio):
//!
//! ```text
//! family,q,n,d,matching_size,gm_vertices,gm_triangles,budget,lemma_attempts,im_size,ratio_ln,seed,wall_ms,status
//! ```
//!
//! `q` is blank for random regular graphs, `ratio_ln` is blank for `d < 2`,
//! `wall_ms` is blank unless timing was requested, and the numeric columns
//! after `d` are blank on failed runs. `status` is `ok`, `invalid` or
//! `error:<kind>`.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::generators::{polarity_graph, projective_incidence_graph, random_regular};
use crate::graph::Graph;
use crate::pipeline::{self, InducedMatchingResult, PipelineConfig};
use crate::seed;

pub const CSV_HEADER: &str = "family,q,n,d,matching_size,gm_vertices,gm_triangles,budget,\
lemma_attempts,im_size,ratio_ln,seed,wall_ms,status";

pub const SUMMARY_HEADER: &str = "summary,family,q,trials,ok,min_ratio,median_ratio,verdict";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Projective,
    Polarity,
    /// Random `d`-regular graphs; sweep parameters are vertex counts.
    RandomRegular {
        d: usize,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Projective => "projective",
            Family::Polarity => "polarity",
            Family::RandomRegular { .. } => "random-regular",
        }
    }

    fn build(&self, param: u64, seed: u64) -> Result<Graph> {
        match *self {
            Family::Projective => projective_incidence_graph(param),
            Family::Polarity => polarity_graph(param),
            Family::RandomRegular { d } => random_regular(param as usize, d, seed),
        }
    }

    fn q_column(&self, param: u64) -> Option<u64> {
        match self {
            Family::RandomRegular { .. } => None,
            _ => Some(param),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentSpec {
    pub family: Family,
    pub params: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    /// Pipeline settings; the seed is replaced per trial.
    pub config: PipelineConfig,
    /// Ratio floor for the summary verdict; none means no verdict.
    pub floor: Option<f64>,
    pub timing: bool,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.params.is_empty() {
            return Err(Error::InvalidParameter("parameter list is empty".into()));
        }
        Ok(())
    }

    /// `derive(master, fnv1a(family), param, trial)`.
    pub fn trial_seed(&self, param: u64, trial: usize) -> u64 {
        seed::derive(&[
            self.seed,
            seed::fnv1a(self.family.name()),
            param,
            trial as u64,
        ])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StatsRow {
    pub family: String,
    pub q: Option<u64>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub matching_size: Option<usize>,
    pub gm_vertices: Option<usize>,
    pub gm_triangles: Option<usize>,
    pub budget: Option<f64>,
    pub lemma_attempts: Option<usize>,
    pub im_size: Option<usize>,
    pub ratio: Option<f64>,
    pub seed: u64,
    pub wall_ms: Option<f64>,
    pub status: String,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn opt_fixed(v: Option<f64>, digits: usize) -> String {
    v.map(|x| format!("{:.*}", digits, x)).unwrap_or_default()
}

impl StatsRow {
    pub fn from_result(
        family: &str,
        q: Option<u64>,
        seed: u64,
        result: &InducedMatchingResult,
    ) -> Self {
        let s = &result.stats;
        StatsRow {
            family: family.to_string(),
            q,
            n: Some(s.n),
            d: Some(s.d),
            matching_size: Some(s.matching_size),
            gm_vertices: Some(s.contracted_vertices),
            gm_triangles: Some(s.contracted_triangles),
            budget: Some(s.triangle_budget),
            lemma_attempts: Some(s.lemma_attempts),
            im_size: Some(result.size),
            ratio: result.ratio(),
            seed,
            wall_ms: None,
            status: if result.certificate { "ok" } else { "invalid" }.to_string(),
        }
    }

    pub fn from_error(
        family: &str,
        q: Option<u64>,
        g: Option<&Graph>,
        seed: u64,
        err: &Error,
    ) -> Self {
        StatsRow {
            family: family.to_string(),
            q,
            n: g.map(Graph::n),
            d: g.map(Graph::max_degree),
            matching_size: None,
            gm_vertices: None,
            gm_triangles: None,
            budget: None,
            lemma_attempts: match err {
                Error::RetriesExhausted(a) => Some(a.len()),
                _ => None,
            },
            im_size: None,
            ratio: None,
            seed,
            wall_ms: None,
            status: format!("error:{}", error_kind(err)),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    pub fn to_csv(&self) -> String {
        [
            self.family.clone(),
            opt(self.q),
            opt(self.n),
            opt(self.d),
            opt(self.matching_size),
            opt(self.gm_vertices),
            opt(self.gm_triangles),
            opt_fixed(self.budget, 3),
            opt(self.lemma_attempts),
            opt(self.im_size),
            opt_fixed(self.ratio, 6),
            self.seed.to_string(),
            opt_fixed(self.wall_ms, 3),
            self.status.clone(),
        ]
        .join(",")
    }
}

pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::TriangleBudgetExceeded { .. } => "triangle-budget",
        Error::RetriesExhausted(_) => "retries-exhausted",
        Error::EmptyMatching => "empty-matching",
        Error::NotPrime(_) => "not-prime",
        Error::RegularParams { .. } | Error::RejectionBudgetExhausted { .. } => "generator",
        _ => "other",
    }
}

/// Per-parameter aggregate of the ok rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub family: String,
    pub param: u64,
    pub trials: usize,
    pub ok: usize,
    pub min_ratio: Option<f64>,
    pub median_ratio: Option<f64>,
    pub pass: Option<bool>,
}

impl Summary {
    pub fn to_line(&self) -> String {
        let verdict = match self.pass {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "",
        };
        format!(
            "summary,{},{},{},{},{},{},{}",
            self.family,
            self.param,
            self.trials,
            self.ok,
            opt_fixed(self.min_ratio, 6),
            opt_fixed(self.median_ratio, 6),
            verdict
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<StatsRow>,
    pub summaries: Vec<Summary>,
}

impl ExperimentReport {
    pub fn csv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", CSV_HEADER);
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.to_csv());
        }
        s
    }

    /// All verdicts PASS; `None` when no floor was set.
    pub fn passed(&self) -> Option<bool> {
        self.summaries
            .iter()
            .map(|s| s.pass)
            .collect::<Option<Vec<bool>>>()
            .map(|v| v.into_iter().all(|b| b))
    }
}

pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(|a, b| a.total_cmp(b));
    let mid = values.len() / 2;
    Some(if values.len().is_multiple_of(2) {
        (values[mid - 1] + values[mid]) / 2.0
    } else {
        values[mid]
    })
}

/// Runs one trial: build, run the pipeline, certify. Failures become rows.
pub fn run_trial(spec: &ExperimentSpec, param: u64, trial: usize) -> StatsRow {
    let family = spec.family.name();
    let q = spec.family.q_column(param);
    let trial_seed = spec.trial_seed(param, trial);
    let start = Instant::now();
    let g = match spec.family.build(param, trial_seed) {
        Ok(g) => g,
        Err(e) => return StatsRow::from_error(family, q, None, trial_seed, &e),
    };
    let config = PipelineConfig {
        seed: trial_seed,
        ..spec.config.clone()
    };
    let mut row = match pipeline::induced_matching(&g, &config) {
        Ok(r) => {
            let mut row = StatsRow::from_result(family, q, trial_seed, &r);
            if !pipeline::verify_certificate(&g, &r) {
                row.status = "invalid".into();
            }
            row
        }
        Err(e) => StatsRow::from_error(family, q, Some(&g), trial_seed, &e),
    };
    if spec.timing {
        row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    row
}

/// Runs every `(param, trial)` in order and summarizes per parameter.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    spec.validate()?;
    let mut rows = Vec::with_capacity(spec.params.len() * spec.trials);
    let mut summaries = Vec::with_capacity(spec.params.len());
    for &param in &spec.params {
        let batch: Vec<StatsRow> = (0..spec.trials)
            .map(|t| run_trial(spec, param, t))
            .collect();
        let mut ratios: Vec<f64> = batch
            .iter()
            .filter(|r| r.is_ok())
            .filter_map(|r| r.ratio)
            .collect();
        let min_ratio = ratios.iter().copied().reduce(f64::min);
        let median_ratio = median(&mut ratios);
        summaries.push(Summary {
            family: spec.family.name().to_string(),
            param,
            trials: spec.trials,
            ok: batch.iter().filter(|r| r.is_ok()).count(),
            min_ratio,
            median_ratio,
            pass: spec.floor.map(|f| min_ratio.is_some_and(|m| m >= f)),
        });
        rows.extend(batch);
    }
    Ok(ExperimentReport { rows, summaries })
}

/// Trials at `q = 3` used to calibrate the scaling floor.
pub const CALIBRATION_TRIALS: usize = 50;

/// Half the median ratio over [`CALIBRATION_TRIALS`] runs on the PG(2, 3)
/// incidence graph.
pub fn calibrate_floor(seed: u64, config: &PipelineConfig) -> Result<f64> {
    let spec = ExperimentSpec {
        family: Family::Projective,
        params: vec![3],
        trials: CALIBRATION_TRIALS,
        seed,
        config: config.clone(),
        floor: None,
        timing: false,
    };
    let report = run_experiment(&spec)?;
    report.summaries[0]
        .median_ratio
        .map(|m| m / 2.0)
        .ok_or_else(|| Error::InvalidParameter("calibration produced no successful runs".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(params: Vec<u64>, trials: usize) -> ExperimentSpec {
        ExperimentSpec {
            family: Family::Projective,
            params,
            trials,
            seed: 1,
            config: PipelineConfig::default(),
            floor: Some(0.0),
            timing: false,
        }
    }

    #[test]
    fn row_and_summary_counts() {
        let report = run_experiment(&spec(vec![2, 3], 4)).unwrap();
        assert_eq!(report.rows.len(), 8);
        assert_eq!(report.summaries.len(), 2);
        assert!(report.rows.iter().all(StatsRow::is_ok));
        assert_eq!(report.passed(), Some(true));
        assert_eq!(report.csv().lines().count(), 9);
        assert_eq!(report.csv().lines().next().unwrap(), CSV_HEADER);
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(run_experiment(&spec(vec![3], 0)).is_err());
        assert!(run_experiment(&spec(vec![], 1)).is_err());
    }

    #[test]
    fn failures_become_rows() {
        let report = run_experiment(&spec(vec![4, 3], 1)).unwrap();
        assert_eq!(report.rows[0].status, "error:not-prime");
        assert!(report.rows[1].is_ok());
        assert_eq!(report.summaries[0].pass, Some(false));
    }

    #[test]
    fn csv_fields_are_plain_decimals() {
        let report = run_experiment(&spec(vec![5], 2)).unwrap();
        for line in report.csv().lines().skip(1) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), CSV_HEADER.split(',').count());
            for f in &fields[1..fields.len() - 1] {
                assert!(f.is_empty() || f.parse::<f64>().is_ok(), "{f}");
                assert!(!f.contains('e'), "{f}");
            }
        }
    }

    #[test]
    fn median_values() {
        assert_eq!(median(&mut []), None);
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), Some(2.5));
    }
}
