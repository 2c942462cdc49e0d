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

//! Benchmark inputs shared by the criterion benches.

use imatch_core::generators;
use imatch_core::Graph;

/// PG(2, q) incidence graphs for the given primes.
pub fn projective_corpus(qs: &[u64]) -> Vec<(u64, Graph)> {
    qs.iter()
        .map(|&q| {
            (
                q,
                generators::projective_incidence_graph(q).expect("prime q"),
            )
        })
        .collect()
}
