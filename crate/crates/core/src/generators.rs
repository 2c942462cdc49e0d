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

//! Graph families used as inputs: finite-geometry C4-free graphs, random
//! regular graphs and small named fixtures.
//!
//! Projective points of PG(2, q) are the normalized vectors
//! `(1, y, z)`, then `(0, 1, z)`, then `(0, 0, 1)`, enumerated with `y`
//! outer and `z` inner; point `i` in this order is vertex `i`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::seed;

/// Whole-sample restarts allowed in [`random_regular`].
pub const REJECTION_BUDGET: usize = 1000;

pub const SUPPORTED_FIXTURES: &str = "petersen, heawood, cycle-k, path-k, complete-k, \
     complete-bipartite-a-b, edgeless-k";

/// Description of a graph to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    ProjectiveIncidence { q: u64 },
    Polarity { q: u64 },
    RandomRegular { n: usize, d: usize, seed: u64 },
    Fixture { name: String },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GeneratorSpec::ProjectiveIncidence { q } => projective_incidence_graph(*q),
            GeneratorSpec::Polarity { q } => polarity_graph(*q),
            GeneratorSpec::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
            GeneratorSpec::Fixture { name } => named_fixture(name),
        }
    }
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|i| i * i <= q)
            .all(|i| !q.is_multiple_of(i))
}

fn check_prime(q: u64) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

/// Normalized projective points of PG(2, q) in vertex order.
pub fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::with_capacity((q * q + q + 1) as usize);
    for y in 0..q {
        for z in 0..q {
            pts.push([1, y, z]);
        }
    }
    for z in 0..q {
        pts.push([0, 1, z]);
    }
    pts.push([0, 0, 1]);
    pts
}

fn dot(a: &[u64; 3], b: &[u64; 3], q: u64) -> u64 {
    (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q
}

/// Point-line incidence graph of PG(2, q). Points are vertices
/// `0..N` and lines are `N..2N` with `N = q² + q + 1`; line `j` has the
/// same coordinate vector as point `j` and contains point `i` iff their dot
/// product vanishes mod q.
pub fn projective_incidence_graph(q: u64) -> Result<Graph> {
    check_prime(q)?;
    let pts = projective_points(q);
    let n = pts.len();
    let mut edges = Vec::with_capacity(n * (q as usize + 1));
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if dot(p, l, q) == 0 {
                edges.push((i, n + j));
            }
        }
    }
    Graph::from_edge_list(2 * n, edges)
}

/// Erdős–Rényi polarity graph: projective points, adjacent when orthogonal.
/// The `q + 1` self-orthogonal points have degree `q`, the rest `q + 1`.
pub fn polarity_graph(q: u64) -> Result<Graph> {
    check_prime(q)?;
    let pts = projective_points(q);
    let mut edges = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate().skip(i + 1) {
            if dot(a, b, q) == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(pts.len(), edges)
}

/// Uniform-ish random `d`-regular graph from the pairing model.
///
/// Half-edges are paired one random pair at a time; a pair that would form
/// a loop or a repeated edge is redrawn. When no admissible pair is left
/// the whole sample is discarded and restarted, at most
/// [`REJECTION_BUDGET`] times.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::RegularParams {
            n,
            d,
            reason: "degree must be smaller than the vertex count",
        });
    }
    if (n * d) % 2 == 1 {
        return Err(Error::RegularParams {
            n,
            d,
            reason: "n * d must be even",
        });
    }
    let mut rng = seed::rng(seed);
    for _ in 0..REJECTION_BUDGET {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Graph::from_edge_list(n, edges);
        }
    }
    Err(Error::RejectionBudgetExhausted {
        attempts: REJECTION_BUDGET,
    })
}

fn try_pairing<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<Vec<Edge>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(d); n];
    let mut edges = Vec::with_capacity(n * d / 2);
    let admissible = |adj: &[Vec<usize>], u: usize, v: usize| u != v && !adj[u].contains(&v);
    let mut misses = 0usize;
    while !points.is_empty() {
        let len = points.len();
        let i = rng.random_range(0..len);
        let mut j = rng.random_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        let (u, v) = (points[i], points[j]);
        if admissible(&adj, u, v) {
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u.min(v), u.max(v)));
            let (hi, lo) = (i.max(j), i.min(j));
            points.swap_remove(hi);
            points.swap_remove(lo);
            misses = 0;
            continue;
        }
        misses += 1;
        if misses > 32 + len {
            let stuck =
                !(0..len).any(|a| (a + 1..len).any(|b| admissible(&adj, points[a], points[b])));
            if stuck {
                return None;
            }
            misses = 0;
        }
    }
    Some(edges)
}

/// Small named graphs with fixed labelings:
///
/// * `petersen`: outer cycle `0..5`, spokes `i -- i+5`, inner pentagram
///   `5+i -- 5+(i+2)%5`.
/// * `heawood`: cycle `0..14` plus chords `i -- i+5 (mod 14)` for even `i`.
/// * `cycle-k` (k ≥ 3), `path-k` (k ≥ 1 vertices), `complete-k`,
///   `edgeless-k`: vertices `0..k` in the natural order.
/// * `complete-bipartite-a-b`: left side `0..a`, right side `a..a+b`.
pub fn named_fixture(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownFixture {
        name: name.to_string(),
        supported: SUPPORTED_FIXTURES,
    };
    let edges: (usize, Vec<Edge>) = match name {
        "petersen" => (
            10,
            (0..5)
                .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
                .collect(),
        ),
        "heawood" => (
            14,
            (0..14)
                .flat_map(|i| {
                    let chord = (i % 2 == 0).then_some((i, (i + 5) % 14));
                    std::iter::once((i, (i + 1) % 14)).chain(chord)
                })
                .collect(),
        ),
        _ => {
            let (family, args) = split_fixture(name).ok_or_else(unknown)?;
            match (family, args.as_slice()) {
                ("cycle", &[k]) if k >= 3 => (k, (0..k).map(|i| (i, (i + 1) % k)).collect()),
                ("path", &[k]) if k >= 1 => (k, (1..k).map(|i| (i - 1, i)).collect()),
                ("complete", &[k]) => (
                    k,
                    (0..k)
                        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                        .collect(),
                ),
                ("edgeless", &[k]) => (k, Vec::new()),
                ("complete-bipartite", &[a, b]) => (
                    a + b,
                    (0..a)
                        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                        .collect(),
                ),
                _ => return Err(unknown()),
            }
        }
    };
    Graph::from_edge_list(edges.0, edges.1)
}

fn split_fixture(name: &str) -> Option<(&str, Vec<usize>)> {
    let family = [
        "complete-bipartite",
        "complete",
        "cycle",
        "path",
        "edgeless",
    ]
    .into_iter()
    .find(|f| name.strip_prefix(f).is_some_and(|r| r.starts_with('-')))?;
    let args = name[family.len() + 1..]
        .split('-')
        .map(|s| s.parse().ok())
        .collect::<Option<Vec<usize>>>()?;
    Some((family, args))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Length of the shortest cycle by BFS from every vertex.
    fn girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut parent = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn heawood_from_projective_plane() {
        let g = projective_incidence_graph(2).unwrap();
        assert_eq!((g.n(), g.m()), (14, 21));
        assert_eq!(g.degree_profile(), (3, 3, true));
        assert_eq!(girth(&g), Some(6));
    }

    #[test]
    fn projective_q3() {
        let g = projective_incidence_graph(3).unwrap();
        assert_eq!((g.n(), g.m()), (26, 52));
        assert_eq!(g.degree_profile(), (4, 4, true));
        assert_eq!(girth(&g), Some(6));
        assert!(matches!(
            projective_incidence_graph(4),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn polarity_degrees() {
        let g = polarity_graph(2).unwrap();
        assert_eq!(g.n(), 7);
        let (lo, hi, _) = g.degree_profile();
        assert_eq!((lo, hi), (2, 3));

        let g = polarity_graph(3).unwrap();
        assert_eq!(g.n(), 13);
        let low = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
        let high = (0..g.n()).filter(|&v| g.degree(v) == 4).count();
        assert_eq!((low, high), (4, 9));
        assert!(matches!(polarity_graph(1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn random_regular_examples() {
        let g = random_regular(10, 3, 7).unwrap();
        assert_eq!(g.degree_profile(), (3, 3, true));
        g.validate().unwrap();
        assert_eq!(g, random_regular(10, 3, 7).unwrap());
        assert!(matches!(
            random_regular(5, 3, 0),
            Err(Error::RegularParams { .. })
        ));
        assert!(matches!(
            random_regular(4, 4, 0),
            Err(Error::RegularParams { .. })
        ));
        for s in 0..5 {
            assert_eq!(
                random_regular(4, 3, s).unwrap(),
                named_fixture("complete-4").unwrap()
            );
        }
    }

    #[test]
    fn random_regular_dense_degree() {
        let g = random_regular(200, 20, 1).unwrap();
        assert_eq!(g.degree_profile(), (20, 20, true));
        g.validate().unwrap();
    }

    #[test]
    fn fixtures() {
        let p = named_fixture("petersen").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(p.degree_profile(), (3, 3, true));
        assert_eq!(girth(&p), Some(5));

        let h = named_fixture("heawood").unwrap();
        assert_eq!((h.n(), h.m()), (14, 21));
        assert_eq!(girth(&h), Some(6));

        let c6 = named_fixture("cycle-6").unwrap();
        assert_eq!(c6.degree_profile(), (2, 2, true));
        let k22 = named_fixture("complete-bipartite-2-2").unwrap();
        assert_eq!(
            k22,
            named_fixture("cycle-4")
                .unwrap()
                .clone_relabelled(&[0, 2, 1, 3])
        );
        assert_eq!(named_fixture("path-1").unwrap().n(), 1);
        assert_eq!(named_fixture("edgeless-3").unwrap().m(), 0);

        for bad in [
            "petersen2",
            "cycle-2",
            "complete-x",
            "wheel-5",
            "complete-bipartite-3",
        ] {
            let err = named_fixture(bad).unwrap_err();
            assert!(err.to_string().contains("supported"), "{bad}: {err}");
        }
    }

    impl Graph {
        fn clone_relabelled(&self, perm: &[usize]) -> Graph {
            Graph::from_edge_list(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
        }
    }
}
