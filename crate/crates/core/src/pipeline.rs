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

//! End-to-end induced matching: color, contract, sparsify, pull back,
//! certify.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{self, Matching};
use crate::sparsify::{self, LemmaOverrides, SamplingMode};

/// Calibrated constant `c` with `size >= c·(n/d)·ln d` on the regular
/// C4-free corpus (PG(2, q) incidence graphs, q <= 13).
pub const PIPELINE_CONSTANT: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EpsilonPolicy {
    Fixed(f64),
    /// `ε = 1/(2B)`.
    FromB,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    /// Side size of the forbidden `K_{B,B}`.
    pub b: usize,
    pub epsilon: EpsilonPolicy,
    pub d0: Option<usize>,
    pub max_retries: Option<usize>,
    pub sampling: SamplingMode,
    pub seed: u64,
    pub verify: bool,
    /// On exhausted retries, fall back to a greedy induced matching instead
    /// of failing.
    pub greedy_fallback: bool,
    /// Grow the independent set of `G_M` to a maximal one before pulling it
    /// back.
    pub extend_maximal: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            b: 2,
            epsilon: EpsilonPolicy::FromB,
            d0: None,
            max_retries: None,
            sampling: SamplingMode::Independent,
            seed: 0,
            verify: true,
            greedy_fallback: false,
            extend_maximal: true,
        }
    }
}

impl PipelineConfig {
    pub fn epsilon(&self) -> Result<f64> {
        if self.b < 2 {
            return Err(Error::InvalidParameter(format!(
                "B = {} must be at least 2",
                self.b
            )));
        }
        let eps = match self.epsilon {
            EpsilonPolicy::Fixed(e) => e,
            EpsilonPolicy::FromB => 1.0 / (2.0 * self.b as f64),
        };
        if !(eps > 0.0 && eps < 3.0) {
            return Err(Error::InvalidEpsilon(eps));
        }
        Ok(eps)
    }

    fn overrides(&self) -> LemmaOverrides {
        LemmaOverrides {
            d0: self.d0,
            max_retries: self.max_retries,
            sampling: Some(self.sampling),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineStats {
    pub n: usize,
    pub d: usize,
    /// Size of the color class used as `M`.
    pub matching_size: usize,
    /// `|M| < ⌈n/4⌉`: the size guarantee does not apply.
    pub matching_below_quarter: bool,
    pub contracted_vertices: usize,
    pub contracted_max_degree: usize,
    pub contracted_triangles: usize,
    pub triangle_budget: f64,
    pub lemma_attempts: usize,
    /// Independent set size found by the sparsification step alone.
    pub lemma_set_size: usize,
    pub used_fallback: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InducedMatchingResult {
    pub matching: Matching,
    pub size: usize,
    /// Verdict of the final induced-matching check; `false` if not run.
    pub certificate: bool,
    pub stats: PipelineStats,
}

impl InducedMatchingResult {
    /// `size / ((n/d)·ln d)`, defined for `d >= 2`.
    pub fn ratio(&self) -> Option<f64> {
        ratio(self.size, self.stats.n, self.stats.d)
    }
}

pub fn ratio(size: usize, n: usize, d: usize) -> Option<f64> {
    (d >= 2 && n > 0).then(|| size as f64 / ((n as f64 / d as f64) * (d as f64).ln()))
}

/// `nM·dM^(2-ε)`.
pub fn triangle_budget(nm: usize, dm: usize, epsilon: f64) -> f64 {
    nm as f64 * (dm as f64).powf(2.0 - epsilon)
}

/// Runs the full pipeline on `g`.
pub fn induced_matching(g: &Graph, config: &PipelineConfig) -> Result<InducedMatchingResult> {
    let epsilon = config.epsilon()?;
    let n = g.n();
    let d = g.max_degree();

    let coloring = matching::misra_gries_edge_color(g);
    let m = matching::extract_matching(&coloring);
    if m.is_empty() {
        return Err(Error::EmptyMatching);
    }
    let contracted = matching::contract_matching(g, &m)?;
    let gm = &contracted.graph;
    let dm = gm.max_degree();
    let triangles = gm.count_triangles();
    let budget = triangle_budget(gm.n(), dm, epsilon);
    if triangles as f64 > budget {
        return Err(Error::TriangleBudgetExceeded {
            measured: triangles,
            budget,
        });
    }

    let mut stats = PipelineStats {
        n,
        d,
        matching_size: m.len(),
        matching_below_quarter: m.len() < n.div_ceil(4),
        contracted_vertices: gm.n(),
        contracted_max_degree: dm,
        contracted_triangles: triangles,
        triangle_budget: budget,
        lemma_attempts: 0,
        lemma_set_size: 0,
        used_fallback: false,
    };

    let params = sparsify::lemma_params(dm.max(1), epsilon, config.overrides())?;
    let edges = match sparsify::sparsify_independent_set(gm, &params, config.seed) {
        Ok(r) => {
            stats.lemma_attempts = r.attempts;
            stats.lemma_set_size = r.set.len();
            let set = if config.extend_maximal {
                sparsify::extend_to_maximal(gm, &r.set)
            } else {
                r.set
            };
            contracted.pull_back(&set)
        }
        Err(Error::RetriesExhausted(attempts)) if config.greedy_fallback => {
            stats.lemma_attempts = attempts.len();
            stats.used_fallback = true;
            greedy_induced_matching(g)
        }
        Err(e) => return Err(e),
    };

    let matching = Matching::new(g, edges)?;
    let certificate = config.verify && g.is_induced_matching(matching.edges())?;
    Ok(InducedMatchingResult {
        size: matching.len(),
        matching,
        certificate,
        stats,
    })
}

/// Recomputes the induced-matching check from scratch.
pub fn verify_certificate(g: &Graph, result: &InducedMatchingResult) -> bool {
    g.is_induced_matching(result.matching.edges())
        .unwrap_or(false)
}

/// Scans edges in lexicographic order, keeping an edge when neither endpoint
/// lies in the closed neighborhood of an already kept edge.
pub fn greedy_induced_matching(g: &Graph) -> Vec<Edge> {
    let mut blocked = vec![false; g.n()];
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if blocked[u] || blocked[v] {
            continue;
        }
        out.push((u, v));
        for x in [u, v] {
            blocked[x] = true;
            for &w in g.neighbors(x) {
                blocked[w] = true;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_fixture;

    #[test]
    fn single_edge() {
        let k2 = named_fixture("complete-2").unwrap();
        let r = induced_matching(&k2, &PipelineConfig::default()).unwrap();
        assert_eq!(r.matching.edges(), &[(0, 1)]);
        assert_eq!(r.size, 1);
        assert!(r.certificate);
        assert_eq!(r.ratio(), None);
    }

    #[test]
    fn edgeless_input_fails() {
        let g = named_fixture("edgeless-4").unwrap();
        assert!(matches!(
            induced_matching(&g, &PipelineConfig::default()),
            Err(Error::EmptyMatching)
        ));
    }

    #[test]
    fn heawood() {
        let h = named_fixture("heawood").unwrap();
        let r = induced_matching(&h, &PipelineConfig::default()).unwrap();
        assert!(r.certificate && verify_certificate(&h, &r));
        assert!(r.size >= 2);
    }

    #[test]
    fn tampered_certificate_rejected() {
        let c6 = named_fixture("cycle-6").unwrap();
        let r = induced_matching(&c6, &PipelineConfig::default()).unwrap();
        assert!(verify_certificate(&c6, &r));
        let mut bad = r.clone();
        bad.matching = Matching::new(&c6, [(0, 1), (3, 4)]).unwrap();
        assert!(verify_certificate(&c6, &bad));
        // (3, 4) shifted to (2, 3) is joined to (0, 1) by the edge (1, 2)
        bad.matching = Matching::new(&c6, [(0, 1), (2, 3)]).unwrap();
        assert!(!verify_certificate(&c6, &bad));
        bad.matching = Matching::default();
        assert!(verify_certificate(&c6, &bad));
    }

    #[test]
    fn extension_never_shrinks() {
        let g = crate::generators::projective_incidence_graph(11).unwrap();
        for seed in 0..5 {
            let literal = PipelineConfig {
                seed,
                extend_maximal: false,
                ..Default::default()
            };
            let extended = PipelineConfig {
                seed,
                ..Default::default()
            };
            let a = induced_matching(&g, &literal).unwrap();
            let b = induced_matching(&g, &extended).unwrap();
            assert_eq!(a.size, a.stats.lemma_set_size);
            assert_eq!(a.stats.lemma_set_size, b.stats.lemma_set_size);
            assert!(b.size >= a.size);
            assert!(a
                .matching
                .edges()
                .iter()
                .all(|e| b.matching.edges().contains(e)));
            assert!(a.certificate && b.certificate);
        }
    }

    #[test]
    fn triangle_budget_examples() {
        assert_eq!(triangle_budget(100, 10, 1.0), 1000.0);
        assert_eq!(triangle_budget(37, 1, 2.0), 37.0);
    }

    #[test]
    fn epsilon_policy() {
        let c = PipelineConfig::default();
        assert_eq!(c.epsilon().unwrap(), 0.25);
        let c = PipelineConfig {
            b: 3,
            ..Default::default()
        };
        assert!((c.epsilon().unwrap() - 1.0 / 6.0).abs() < 1e-15);
        let c = PipelineConfig {
            b: 1,
            ..Default::default()
        };
        assert!(c.epsilon().is_err());
        let c = PipelineConfig {
            epsilon: EpsilonPolicy::Fixed(3.0),
            ..Default::default()
        };
        assert!(matches!(c.epsilon(), Err(Error::InvalidEpsilon(_))));
    }

    #[test]
    fn greedy_fallback_is_induced() {
        for name in ["petersen", "heawood", "complete-5", "cycle-7"] {
            let g = named_fixture(name).unwrap();
            let m = greedy_induced_matching(&g);
            assert!(!m.is_empty());
            assert!(g.is_induced_matching(&m).unwrap(), "{name}");
        }
    }
}
