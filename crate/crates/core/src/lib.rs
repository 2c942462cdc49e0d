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

//! Certified induced matchings in regular graphs that avoid a fixed
//! complete bipartite graph `K_{B,B}`.
//!
//! The pipeline colors the edges of `G` with at most `Δ + 1` colors, keeps the
//! largest color class as a matching `M`, contracts `M` into the graph `G_M`,
//! and looks for a large independent set of `G_M` with a randomized
//! sparsification step followed by a greedy independent set on the
//! triangle-free remainder. Independent sets of `G_M` pull back to induced
//! matchings of `G`, and every result is re-verified against `G`.
//!
//! ```
//! use imatch_core::{generators, pipeline};
//!
//! let g = generators::projective_incidence_graph(5).unwrap();
//! let result = pipeline::induced_matching(&g, &pipeline::PipelineConfig::default()).unwrap();
//! assert!(result.certificate);
//! assert!(pipeline::verify_certificate(&g, &result));
//! ```

pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod pipeline;
pub mod seed;
pub mod sparsify;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Triangle, VertexMap, VertexSet};
pub use matching::{ContractedGraph, EdgeColoring, Matching};
pub use pipeline::{EpsilonPolicy, InducedMatchingResult, PipelineConfig};
pub use sparsify::{FourWiseSampler, IndependentSetResult, LemmaParams, SamplingMode};
