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

//! Exhaustive reference implementations for small graphs. These are the
//! ground truth the fast paths are tested against.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::Matching;

/// Vertex-count limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    pub induced_matching: usize,
    pub independent_set: usize,
    pub triangles: usize,
    pub kbb: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit {
            induced_matching: 16,
            independent_set: 16,
            triangles: 64,
            kbb: 20,
        }
    }
}

fn check(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::OracleLimit { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub fn max_induced_matching_bf(g: &Graph) -> Result<(usize, Matching)> {
    max_induced_matching_bf_with(g, &OracleLimit::default())
}

/// Branch and bound over edges: either take the lowest available edge and
/// drop every edge touching its closed neighborhood, or drop the edge.
pub fn max_induced_matching_bf_with(g: &Graph, limit: &OracleLimit) -> Result<(usize, Matching)> {
    check(g, limit.induced_matching.min(16))?;
    let edges: Vec<Edge> = g.edges().collect();
    let nb = neighbor_masks(g);
    let conflicts: Vec<u128> = edges
        .iter()
        .map(|&(u, v)| {
            let closed = nb[u] | nb[v] | 1 << u | 1 << v;
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| closed & (1 << a | 1 << b) != 0)
                .fold(0u128, |m, (j, _)| m | 1 << j)
        })
        .collect();

    fn search(avail: u128, cur: &mut Vec<usize>, best: &mut Vec<usize>, conflicts: &[u128]) {
        if cur.len() + avail.count_ones() as usize <= best.len() {
            return;
        }
        if avail == 0 {
            *best = cur.clone();
            return;
        }
        let i = avail.trailing_zeros() as usize;
        cur.push(i);
        search(avail & !conflicts[i], cur, best, conflicts);
        cur.pop();
        search(avail & !(1 << i), cur, best, conflicts);
    }

    let all = if edges.is_empty() {
        0
    } else {
        u128::MAX >> (128 - edges.len())
    };
    let mut best = Vec::new();
    search(all, &mut Vec::new(), &mut best, &conflicts);
    let witness = Matching::new(g, best.iter().map(|&i| edges[i]))?;
    Ok((witness.len(), witness))
}

pub fn max_independent_set_bf(g: &Graph) -> Result<(usize, VertexSet)> {
    max_independent_set_bf_with(g, &OracleLimit::default())
}

pub fn max_independent_set_bf_with(g: &Graph, limit: &OracleLimit) -> Result<(usize, VertexSet)> {
    check(g, limit.independent_set.min(64))?;
    let nb = neighbor_masks(g);

    fn search(avail: u64, nb: &[u64]) -> u64 {
        if avail == 0 {
            return 0;
        }
        let mut branch = avail.trailing_zeros() as usize;
        let mut branch_deg = 0;
        let mut bits = avail;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let deg = (nb[v] & avail).count_ones();
            if deg <= 1 {
                // a vertex of degree <= 1 is in some maximum independent set
                return 1 << v | search(avail & !(nb[v] | 1 << v), nb);
            }
            if deg > branch_deg {
                branch = v;
                branch_deg = deg;
            }
        }
        let with = 1 << branch | search(avail & !(nb[branch] | 1 << branch), nb);
        let without = search(avail & !(1 << branch), nb);
        if with.count_ones() >= without.count_ones() {
            with
        } else {
            without
        }
    }

    let all = if g.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - g.n())
    };
    let mask = search(all, &nb);
    let set: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    Ok((set.len(), set))
}

pub fn count_triangles_bf(g: &Graph) -> Result<usize> {
    count_triangles_bf_with(g, &OracleLimit::default())
}

/// Tests every vertex triple.
pub fn count_triangles_bf_with(g: &Graph, limit: &OracleLimit) -> Result<usize> {
    check(g, limit.triangles)?;
    let n = g.n();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            count += (v + 1..n)
                .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                .count();
        }
    }
    Ok(count)
}

pub fn contains_kbb_bf(g: &Graph, b: usize) -> Result<bool> {
    contains_kbb_bf_with(g, b, &OracleLimit::default())
}

/// True iff some set of `b` vertices has at least `b` common neighbors.
pub fn contains_kbb_bf_with(g: &Graph, b: usize, limit: &OracleLimit) -> Result<bool> {
    check(g, limit.kbb.min(64))?;
    if b == 0 {
        return Err(Error::InvalidParameter("B must be at least 1".into()));
    }
    let nb = neighbor_masks(g);

    fn search(start: usize, left: usize, common: u64, nb: &[u64], b: usize) -> bool {
        if left == 0 {
            return common.count_ones() as usize >= b;
        }
        if (common.count_ones() as usize) < b {
            return false;
        }
        (start..nb.len()).any(|v| search(v + 1, left - 1, common & nb[v], nb, b))
    }

    Ok(search(0, b, u64::MAX, &nb, b))
}

pub fn is_c4_free_bf(g: &Graph) -> Result<bool> {
    contains_kbb_bf(g, 2).map(|c| !c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_fixture;

    fn fixture(name: &str) -> Graph {
        named_fixture(name).unwrap()
    }

    #[test]
    fn induced_matching_values() {
        assert_eq!(max_induced_matching_bf(&fixture("cycle-6")).unwrap().0, 2);
        assert_eq!(
            max_induced_matching_bf(&fixture("complete-4")).unwrap().0,
            1
        );
        let (k, w) = max_induced_matching_bf(&fixture("petersen")).unwrap();
        assert_eq!(k, 3);
        assert!(fixture("petersen").is_induced_matching(w.edges()).unwrap());
        assert_eq!(
            max_induced_matching_bf(&fixture("edgeless-3")).unwrap().0,
            0
        );
        assert!(matches!(
            max_induced_matching_bf(&fixture("cycle-17")),
            Err(Error::OracleLimit { n: 17, limit: 16 })
        ));
    }

    #[test]
    fn independent_set_values() {
        assert_eq!(max_independent_set_bf(&fixture("cycle-6")).unwrap().0, 3);
        let (k, w) = max_independent_set_bf(&fixture("heawood")).unwrap();
        assert_eq!(k, 7);
        assert!(fixture("heawood").is_independent_set(&w));
        assert_eq!(max_independent_set_bf(&fixture("complete-4")).unwrap().0, 1);
        assert_eq!(max_independent_set_bf(&fixture("petersen")).unwrap().0, 4);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(count_triangles_bf(&fixture("complete-4")).unwrap(), 4);
        assert_eq!(count_triangles_bf(&fixture("complete-5")).unwrap(), 10);
        assert_eq!(count_triangles_bf(&fixture("heawood")).unwrap(), 0);
    }

    #[test]
    fn kbb_search() {
        assert!(contains_kbb_bf(&fixture("complete-bipartite-2-2"), 2).unwrap());
        assert!(!contains_kbb_bf(&fixture("heawood"), 2).unwrap());
        assert!(contains_kbb_bf(&fixture("path-2"), 1).unwrap());
        assert!(!contains_kbb_bf(&fixture("edgeless-4"), 1).unwrap());
        assert!(contains_kbb_bf(&fixture("complete-6"), 3).unwrap());
        assert!(!contains_kbb_bf(&fixture("complete-5"), 3).unwrap());
        assert!(contains_kbb_bf(&fixture("cycle-4"), 0).is_err());
    }

    #[test]
    fn c4_freeness() {
        assert!(is_c4_free_bf(&fixture("petersen")).unwrap());
        assert!(!is_c4_free_bf(&fixture("cycle-4")).unwrap());
        assert!(!is_c4_free_bf(&fixture("complete-4")).unwrap());
    }
}
