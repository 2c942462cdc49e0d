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

//! Fixture values cross-checked against the exhaustive searches.

use imatch_core::generators::{named_fixture, polarity_graph, projective_incidence_graph};
use imatch_core::matching::{extract_matching, misra_gries_edge_color};
use imatch_core::oracle::{
    contains_kbb_bf_with, count_triangles_bf, max_independent_set_bf, max_induced_matching_bf,
    OracleLimit,
};
use imatch_core::pipeline::{induced_matching, PipelineConfig, PIPELINE_CONSTANT};
use imatch_core::sparsify::{lemma_params, sparsify_independent_set, LemmaOverrides};

const WIDE: OracleLimit = OracleLimit {
    induced_matching: 16,
    independent_set: 16,
    triangles: 64,
    kbb: 64,
};

#[test]
fn finite_geometry_graphs_are_c4_free() {
    for q in [2, 3, 5] {
        let g = projective_incidence_graph(q).unwrap();
        assert!(!contains_kbb_bf_with(&g, 2, &WIDE).unwrap(), "PG(2,{q})");
        assert_eq!(g.count_triangles(), 0);
    }
    for q in [2, 3, 5, 7] {
        let g = polarity_graph(q).unwrap();
        assert!(!contains_kbb_bf_with(&g, 2, &WIDE).unwrap(), "ER_{q}");
        let qq = q as usize;
        assert_eq!(g.n(), qq * qq + qq + 1);
        assert_eq!(g.max_degree(), qq + 1);
    }
}

#[test]
fn fixture_triangle_counts() {
    let pet = named_fixture("petersen").unwrap();
    assert_eq!(count_triangles_bf(&pet).unwrap(), 0);
    assert!(pet.enumerate_triangles().is_empty());
    assert_eq!(
        count_triangles_bf(&named_fixture("heawood").unwrap()).unwrap(),
        0
    );
}

#[test]
fn heawood_values() {
    let h = named_fixture("heawood").unwrap();
    assert_eq!(max_independent_set_bf(&h).unwrap().0, 7);
    let (best, witness) = max_induced_matching_bf(&h).unwrap();
    assert!(h.is_induced_matching(witness.edges()).unwrap());

    let r = induced_matching(&h, &PipelineConfig::default()).unwrap();
    assert!(r.certificate);
    assert!(r.size >= 2 && r.size <= best);

    let params = lemma_params(3, 1.0, LemmaOverrides::default()).unwrap();
    let s = sparsify_independent_set(&h, &params, 0).unwrap();
    assert!(s.set.len() >= 4 && s.set.len() <= 7);

    let c = misra_gries_edge_color(&h);
    assert!(extract_matching(&c).len() >= 6);
}

#[test]
fn heawood_fixture_matches_projective_plane_invariants() {
    let a = named_fixture("heawood").unwrap();
    let b = projective_incidence_graph(2).unwrap();
    assert_eq!(
        (a.n(), a.m(), a.degree_profile()),
        (b.n(), b.m(), b.degree_profile())
    );
    assert_eq!(
        max_induced_matching_bf(&a).unwrap().0,
        max_induced_matching_bf(&b).unwrap().0
    );
}

#[test]
fn pipeline_ratio_floor_on_projective_planes() {
    for q in [3, 5, 7, 11, 13] {
        let g = projective_incidence_graph(q).unwrap();
        for seed in 0..5 {
            let r = induced_matching(
                &g,
                &PipelineConfig {
                    seed,
                    ..Default::default()
                },
            )
            .unwrap();
            let ratio = r.ratio().unwrap();
            assert!(
                ratio >= PIPELINE_CONSTANT,
                "q={q} seed={seed} ratio={ratio}"
            );
        }
    }
}
