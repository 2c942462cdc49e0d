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

use std::fmt;

use crate::sparsify::AttemptStats;

/// Errors produced by graph construction, generators and the matching pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("q = {0} is not a prime (only prime fields are supported)")]
    NotPrime(u64),
    #[error("invalid random regular parameters n = {n}, d = {d}: {reason}")]
    RegularParams {
        n: usize,
        d: usize,
        reason: &'static str,
    },
    #[error("random regular sampler gave up after {attempts} attempts")]
    RejectionBudgetExhausted { attempts: usize },
    #[error("unknown fixture {name:?}; supported: {supported}")]
    UnknownFixture {
        name: String,
        supported: &'static str,
    },
    #[error("epsilon = {0} is outside (0, 3)")]
    InvalidEpsilon(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph contains the triangle {0:?}")]
    NotTriangleFree((usize, usize, usize)),
    #[error(
        "triangle budget exceeded: measured {measured} triangles, budget n*d^(2-eps) = {budget:.3}"
    )]
    TriangleBudgetExceeded { measured: usize, budget: f64 },
    #[error("all {} sparsification attempts failed the thresholds: {}", .0.len(), AttemptList(.0))]
    RetriesExhausted(Vec<AttemptStats>),
    #[error("empty matching: the input graph has no edges")]
    EmptyMatching,
    #[error("graph on {n} vertices exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("field of order {order} is too small to label {n} vertices")]
    FieldTooSmall { order: u64, n: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the algorithm itself (budget, retries, empty
    /// matching) as opposed to bad input or usage.
    pub fn is_algorithmic(&self) -> bool {
        matches!(
            self,
            Error::TriangleBudgetExceeded { .. }
                | Error::RetriesExhausted(_)
                | Error::EmptyMatching
        )
    }
}

struct AttemptList<'a>(&'a [AttemptStats]);

impl fmt::Display for AttemptList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "#{} {}", i, a)?;
        }
        Ok(())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
