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

//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// An undirected edge, stored with `u < v` wherever it is canonical.
pub type Edge = (usize, usize);

/// A triangle `(u, v, w)` with `u < v < w`.
pub type Triangle = (usize, usize, usize);

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs. Duplicate pairs
    /// (in either orientation) are collapsed; self-loops and out-of-range ids
    /// are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        if self.adj.is_empty() {
            0.0
        } else {
            2.0 * self.m as f64 / self.n() as f64
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order, each once with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Returns `(min_degree, max_degree, is_regular)`; `(0, 0, true)` for the
    /// empty graph.
    pub fn degree_profile(&self) -> (usize, usize, bool) {
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.max_degree();
        (min, max, min == max)
    }

    /// Checks the structural invariants: no loops, symmetric, sorted without
    /// duplicates, and a consistent edge count.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {} not strictly sorted", v));
            }
            for &u in list {
                if u == v {
                    return Err(format!("self-loop at {}", v));
                }
                if u >= self.n() || self.adj[u].binary_search(&v).is_err() {
                    return Err(format!("edge ({}, {}) not symmetric", v, u));
                }
            }
            total += list.len();
        }
        if total != 2 * self.m {
            return Err(format!("edge count {} != {}/2", self.m, total));
        }
        Ok(())
    }

    /// Lists every triangle exactly once, sorted lexicographically.
    ///
    /// Each edge is oriented from lower to higher `(degree, id)` rank and
    /// triangles are found by intersecting the forward lists of both
    /// endpoints.
    pub fn enumerate_triangles(&self) -> Vec<Triangle> {
        let n = self.n();
        let rank_key = |v: usize| (self.degree(v), v);
        let forward: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                self.adj[u]
                    .iter()
                    .copied()
                    .filter(|&v| rank_key(v) > rank_key(u))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for u in 0..n {
            for &v in &forward[u] {
                intersect_sorted(&forward[u], &forward[v], |w| {
                    let mut t = [u, v, w];
                    t.sort_unstable();
                    out.push((t[0], t[1], t[2]));
                });
            }
        }
        out.sort_unstable();
        out
    }

    pub fn count_triangles(&self) -> usize {
        self.enumerate_triangles().len()
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|` in increasing
    /// order of the original ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, VertexMap) {
        let map = VertexMap::new(self.n(), set);
        let adj = map
            .old_of_new
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| map.new_of_old[w])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adj, m }, map)
    }

    /// True iff no edge has both endpoints in `set`. Members outside `0..n`
    /// make the set invalid for this graph and yield `false`.
    pub fn is_independent_set(&self, set: &VertexSet) -> bool {
        let n = self.n();
        if set.iter().any(|v| v >= n) {
            return false;
        }
        set.iter()
            .all(|v| self.adj[v].iter().all(|&w| !set.contains(w)))
    }

    /// True iff `edges` is a matching whose vertex set induces exactly those
    /// edges. Errors if some edge is absent from the graph.
    pub fn is_induced_matching(&self, edges: &[Edge]) -> Result<bool> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInGraph(u, v));
            }
        }
        let mut owner = vec![usize::MAX; self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if owner[x] != usize::MAX {
                    return Ok(false);
                }
                owner[x] = i;
            }
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if self.adj[x]
                    .iter()
                    .any(|&w| owner[w] != usize::MAX && owner[w] != i)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Reads the edge-list format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines are skipped.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty()));
        let (hline, header) = match lines.next() {
            Some((i, l)) => (i, l?),
            None => {
                return Err(Error::Parse {
                    line: 1,
                    message: "missing header \"n m\"".into(),
                })
            }
        };
        let (n, m) = parse_pair(&header, hline)?;
        let mut edges = Vec::with_capacity(m);
        for (i, l) in lines {
            let l = l?;
            if edges.len() == m {
                return Err(Error::Parse {
                    line: i,
                    message: format!("more than the {} edges declared in the header", m),
                });
            }
            let e = parse_pair(&l, i)?;
            for x in [e.0, e.1] {
                if x >= n {
                    return Err(Error::Parse {
                        line: i,
                        message: format!("vertex {} out of range for n = {}", x, n),
                    });
                }
            }
            if e.0 == e.1 {
                return Err(Error::Parse {
                    line: i,
                    message: format!("self-loop at vertex {}", e.0),
                });
            }
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {} edges, found {}", m, edges.len()),
            });
        }
        Graph::from_edge_list(n, edges)
    }

    pub fn write_edge_list<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_edge_list_string().as_bytes())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut s = String::with_capacity(8 * (self.m + 1));
        let _ = writeln!(s, "{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", u, v);
        }
        s
    }
}

/// Parses a line holding exactly two non-negative integers.
pub(crate) fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| err(format!("expected two integers, got {:?}", line)))?;
        tok.parse::<usize>()
            .map_err(|_| err(format!("invalid integer {:?}", tok)))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err(format!("trailing tokens in {:?}", line)));
    }
    Ok((a, b))
}

fn intersect_sorted(a: &[usize], b: &[usize], mut f: impl FnMut(usize)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// A sorted set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Complement with respect to `0..n`.
    pub fn complement(&self, n: usize) -> Self {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

/// Bidirectional relabelling between a host graph and one of its induced
/// subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    new_of_old: Vec<Option<usize>>,
    old_of_new: Vec<usize>,
}

impl VertexMap {
    fn new(n: usize, set: &VertexSet) -> Self {
        let mut new_of_old = vec![None; n];
        let old_of_new: Vec<usize> = set.iter().filter(|&v| v < n).collect();
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = Some(i);
        }
        VertexMap {
            new_of_old,
            old_of_new,
        }
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }

    /// Maps a set of subgraph ids back to host ids.
    pub fn pull_back(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.old_of_new[v]).collect()
    }
}
