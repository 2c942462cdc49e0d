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

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use imatch_bench::projective_corpus;
use imatch_core::matching::misra_gries_edge_color;
use imatch_core::pipeline::induced_matching;
use imatch_core::PipelineConfig;

const QS: [u64; 4] = [5, 7, 11, 13];

fn triangles(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_triangles");
    for (q, g) in projective_corpus(&QS) {
        group.bench_with_input(BenchmarkId::from_parameter(q), &g, |b, g| {
            b.iter(|| black_box(g.enumerate_triangles()))
        });
    }
    group.finish();
}

fn edge_coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("misra_gries");
    for (q, g) in projective_corpus(&QS) {
        group.bench_with_input(BenchmarkId::from_parameter(q), &g, |b, g| {
            b.iter(|| black_box(misra_gries_edge_color(g)))
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("induced_matching");
    let config = PipelineConfig::default();
    for (q, g) in projective_corpus(&QS) {
        group.bench_with_input(BenchmarkId::from_parameter(q), &g, |b, g| {
            b.iter(|| black_box(induced_matching(g, &config).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, triangles, edge_coloring, pipeline);
criterion_main!(benches);
