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

//! Independent sets in graphs with few triangles via random sparsification.
//!
//! One attempt keeps every vertex with probability `p = d^(a-1)`, `a = ε/3`,
//! deletes one vertex from each surviving triangle and accepts the sample if
//!
//! * the sample size lies in `[np/2, 3np/2]`,
//! * at most `np/4` triangles survived the sampling,
//! * at most `5ndp²` edges remain after triangle deletion.
//!
//! An accepted sample is triangle-free with average degree `O(dp)`, and a
//! minimum-degree greedy independent set of it is returned in the input's
//! labels. Inputs with `d <= d0` skip sampling.

mod fourwise;

use std::collections::BTreeSet;
use std::fmt;

pub use fourwise::{fourwise_sample, BinaryField, FourWiseSampler, MAX_FIELD_DEGREE};

use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle, VertexMap, VertexSet};
use crate::seed;

pub const DEFAULT_D0: usize = 16;
pub const DEFAULT_MAX_RETRIES: usize = 50;

/// Calibrated constant `c` in the guarantee `|I| >= c·n·ln(d̄)/d̄` of
/// [`shearer_independent_set`] on triangle-free graphs with `d̄ >= 2`.
pub const SHEARER_CONSTANT: f64 = 0.9;

/// How an attempt draws its vertex sample.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SamplingMode {
    /// Independent coin per vertex with a 53-bit uniform draw.
    #[default]
    Independent,
    /// Threshold on a random cubic over GF(2^k); `p` is quantized to `2^-k`.
    FourWise,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaOverrides {
    pub d0: Option<usize>,
    pub max_retries: Option<usize>,
    pub sampling: Option<SamplingMode>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaParams {
    pub epsilon: f64,
    pub a: f64,
    pub p: f64,
    /// Maximum degree the parameters were computed for.
    pub d: usize,
    pub d0: usize,
    pub max_retries: usize,
    pub sampling: SamplingMode,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    pub v_lo: f64,
    pub v_hi: f64,
    pub tri_max: f64,
    pub edge_max: f64,
}

impl LemmaParams {
    pub fn new(d: usize, epsilon: f64, overrides: LemmaOverrides) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 3.0) {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        if d < 1 {
            return Err(Error::InvalidParameter(
                "maximum degree must be at least 1".into(),
            ));
        }
        let a = epsilon / 3.0;
        Ok(LemmaParams {
            epsilon,
            a,
            p: (d as f64).powf(a - 1.0),
            d,
            d0: overrides.d0.unwrap_or(DEFAULT_D0),
            max_retries: overrides.max_retries.unwrap_or(DEFAULT_MAX_RETRIES),
            sampling: overrides.sampling.unwrap_or_default(),
        })
    }

    /// Acceptance thresholds for an input on `n` vertices.
    pub fn thresholds(&self, n: usize) -> Thresholds {
        let np = n as f64 * self.p;
        Thresholds {
            v_lo: np / 2.0,
            v_hi: 3.0 * np / 2.0,
            tri_max: np / 4.0,
            edge_max: 5.0 * n as f64 * self.d as f64 * self.p * self.p,
        }
    }

    /// `n·d^(2-ε)`, the most triangles an input may have.
    pub fn triangle_budget(&self, n: usize) -> f64 {
        n as f64 * (self.d as f64).powf(2.0 - self.epsilon)
    }
}

/// Shorthand for [`LemmaParams::new`].
pub fn lemma_params(d: usize, epsilon: f64, overrides: LemmaOverrides) -> Result<LemmaParams> {
    LemmaParams::new(d, epsilon, overrides)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttemptOutcome {
    Passed,
    /// Sampling skipped because `d <= d0`.
    Bypassed,
    TooFewVertices,
    TooManyVertices,
    TooManyTriangles,
    TooManyEdges,
}

impl AttemptOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            AttemptOutcome::Passed => "pass",
            AttemptOutcome::Bypassed => "bypass",
            AttemptOutcome::TooFewVertices => "too-few-vertices",
            AttemptOutcome::TooManyVertices => "too-many-vertices",
            AttemptOutcome::TooManyTriangles => "too-many-triangles",
            AttemptOutcome::TooManyEdges => "too-many-edges",
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, AttemptOutcome::Passed | AttemptOutcome::Bypassed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttemptStats {
    pub sampled: usize,
    /// Triangles in the sampled subgraph, before deletion.
    pub triangles: usize,
    /// Edges left after one vertex of each triangle is deleted.
    pub edges: usize,
    pub outcome: AttemptOutcome,
}

impl AttemptStats {
    pub const CSV_HEADER: &'static str = "attempt,sampled,triangles,edges,outcome";

    pub fn csv_row(&self, attempt: usize) -> String {
        format!(
            "{},{},{},{},{}",
            attempt,
            self.sampled,
            self.triangles,
            self.edges,
            self.outcome.as_str()
        )
    }
}

impl fmt::Display for AttemptStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sampled={} triangles={} edges={} ({})",
            self.sampled,
            self.triangles,
            self.edges,
            self.outcome.as_str()
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndependentSetResult {
    pub set: VertexSet,
    pub attempts: usize,
    pub stats: Vec<AttemptStats>,
    /// Average degree of the triangle-free graph the set was taken from.
    pub average_degree_after: f64,
}

/// Keeps each vertex independently with probability `p`, comparing a 53-bit
/// uniform draw against `p`.
pub fn sample_vertices<R: rand::RngCore>(g: &Graph, p: f64, rng: &mut R) -> VertexSet {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    (0..g.n())
        .filter(|_| ((rng.next_u64() >> 11) as f64) * SCALE < p)
        .collect()
}

/// Deletes one vertex from every triangle. Triangles are visited in
/// lexicographic order; a triangle with no deleted vertex loses the vertex
/// of highest current degree, lowest id on ties.
pub fn break_triangles(g: &Graph) -> (Graph, VertexSet, VertexMap) {
    let triangles = g.enumerate_triangles();
    break_listed_triangles(g, &triangles)
}

fn break_listed_triangles(g: &Graph, triangles: &[Triangle]) -> (Graph, VertexSet, VertexMap) {
    let mut removed = vec![false; g.n()];
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    for &(u, v, w) in triangles {
        if removed[u] || removed[v] || removed[w] {
            continue;
        }
        let x = [u, v, w]
            .into_iter()
            .max_by_key(|&x| (degree[x], std::cmp::Reverse(x)))
            .unwrap();
        removed[x] = true;
        for &y in g.neighbors(x) {
            degree[y] -= 1;
        }
    }
    let removed_set: VertexSet = (0..g.n()).filter(|&v| removed[v]).collect();
    let (h, map) = g.induced_subgraph(&removed_set.complement(g.n()));
    (h, removed_set, map)
}

/// Minimum-degree greedy independent set of a triangle-free graph: take a
/// vertex of least current degree (lowest id on ties), delete its closed
/// neighborhood, repeat.
pub fn shearer_independent_set(g: &Graph) -> Result<VertexSet> {
    if let Some(&t) = g.enumerate_triangles().first() {
        return Err(Error::NotTriangleFree(t));
    }
    Ok(min_degree_greedy(g))
}

pub(crate) fn min_degree_greedy(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut out = Vec::new();
    while let Some((_, v)) = queue.pop_first() {
        out.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if !alive[w] {
                continue;
            }
            alive[w] = false;
            queue.remove(&(degree[w], w));
            for &x in g.neighbors(w) {
                if alive[x] {
                    queue.remove(&(degree[x], x));
                    degree[x] -= 1;
                    queue.insert((degree[x], x));
                }
            }
        }
    }
    out.into()
}

/// Grows an independent set of `g` to a maximal one by running the
/// minimum-degree greedy on the vertices outside its closed neighborhood.
pub fn extend_to_maximal(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut blocked = vec![false; g.n()];
    for v in set.iter() {
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    let free: VertexSet = (0..g.n()).filter(|&v| !blocked[v]).collect();
    let (h, map) = g.induced_subgraph(&free);
    set.iter()
        .chain(map.pull_back(&min_degree_greedy(&h)).iter())
        .collect()
}

/// Lower bound promised by [`shearer_independent_set`] on a triangle-free
/// graph: `max(⌈n/(d̄+1)⌉, c·n·ln(d̄)/d̄)`, the second term only for `d̄ >= 2`.
pub fn shearer_guarantee(n: usize, average_degree: f64) -> f64 {
    let n = n as f64;
    let turan = (n / (average_degree + 1.0)).ceil();
    if average_degree >= 2.0 {
        turan.max(SHEARER_CONSTANT * n * average_degree.ln() / average_degree)
    } else {
        turan
    }
}

/// Finds an independent set of `g`, which must have maximum degree at most
/// `params.d` and at most `n·d^(2-ε)` triangles.
///
/// Attempt `i` draws its sample from `seed::derive(&[seed, i])`; the first
/// accepted attempt wins.
pub fn sparsify_independent_set(
    g: &Graph,
    params: &LemmaParams,
    seed: u64,
) -> Result<IndependentSetResult> {
    if g.max_degree() > params.d {
        return Err(Error::InvalidParameter(format!(
            "graph has maximum degree {} but parameters were computed for d = {}",
            g.max_degree(),
            params.d
        )));
    }
    let n = g.n();
    let triangles = g.enumerate_triangles();
    let budget = params.triangle_budget(n);
    if triangles.len() as f64 > budget {
        return Err(Error::TriangleBudgetExceeded {
            measured: triangles.len(),
            budget,
        });
    }

    if params.d <= params.d0 {
        let (h, _, map) = break_listed_triangles(g, &triangles);
        let set = map.pull_back(&min_degree_greedy(&h));
        return Ok(IndependentSetResult {
            set,
            attempts: 1,
            stats: vec![AttemptStats {
                sampled: n,
                triangles: triangles.len(),
                edges: h.m(),
                outcome: AttemptOutcome::Bypassed,
            }],
            average_degree_after: h.average_degree(),
        });
    }

    let th = params.thresholds(n);
    let mut stats = Vec::with_capacity(params.max_retries);
    for attempt in 0..params.max_retries {
        let mut rng = seed::rng(seed::derive(&[seed, attempt as u64]));
        let sample = match params.sampling {
            SamplingMode::Independent => sample_vertices(g, params.p, &mut rng),
            SamplingMode::FourWise => {
                let sampler = FourWiseSampler::random(n, params.p, &mut rng)?;
                fourwise_sample(g, &sampler)?
            }
        };
        let (sub, sub_map) = g.induced_subgraph(&sample);
        let sub_triangles = sub.enumerate_triangles();
        let (rest, _, rest_map) = break_listed_triangles(&sub, &sub_triangles);

        let k = sample.len() as f64;
        let outcome = if k < th.v_lo {
            AttemptOutcome::TooFewVertices
        } else if k > th.v_hi {
            AttemptOutcome::TooManyVertices
        } else if sub_triangles.len() as f64 > th.tri_max {
            AttemptOutcome::TooManyTriangles
        } else if rest.m() as f64 > th.edge_max {
            AttemptOutcome::TooManyEdges
        } else {
            AttemptOutcome::Passed
        };
        stats.push(AttemptStats {
            sampled: sample.len(),
            triangles: sub_triangles.len(),
            edges: rest.m(),
            outcome,
        });
        if outcome == AttemptOutcome::Passed {
            let set = sub_map.pull_back(&rest_map.pull_back(&min_degree_greedy(&rest)));
            return Ok(IndependentSetResult {
                set,
                attempts: attempt + 1,
                stats,
                average_degree_after: rest.average_degree(),
            });
        }
    }
    Err(Error::RetriesExhausted(stats))
}
