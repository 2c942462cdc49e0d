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

//! Edge coloring, matchings and matching contraction.

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::seed;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with
/// `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Normalizes and validates `edges` against `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        let mut used = vec![false; g.n()];
        for &(u, v) in &edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!(
                    "edge ({}, {}) is not in the graph",
                    u, v
                )));
            }
            for x in [u, v] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {} is covered twice",
                        x
                    )));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)`, the matched vertices.
    pub fn vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }
}

/// A proper edge coloring. Colors are `0..num_colors`, all of them used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    // parallel to `Graph::edges()` order
    edges: Vec<Edge>,
    colors: Vec<usize>,
    num_colors: usize,
}

impl EdgeColoring {
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok().map(|i| self.colors[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    /// Edges grouped by color.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (e, c) in self.iter() {
            classes[c].push(e);
        }
        classes
    }

    /// Every edge of `g` colored, and no two edges at a vertex share a color.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        if self.edges.len() != g.m() || !g.edges().eq(self.edges.iter().copied()) {
            return false;
        }
        let mut seen = vec![Vec::new(); g.n()];
        for ((u, v), c) in self.iter() {
            if c >= self.num_colors {
                return false;
            }
            for x in [u, v] {
                if seen[x].contains(&c) {
                    return false;
                }
                seen[x].push(c);
            }
        }
        true
    }
}

const NONE: usize = usize::MAX;

/// Misra–Gries state: `at[v][c]` is the neighbor joined to `v` by the edge of
/// color `c`, or `NONE`.
struct MisraGries<'g> {
    g: &'g Graph,
    at: Vec<Vec<usize>>,
}

impl<'g> MisraGries<'g> {
    fn new(g: &'g Graph) -> Self {
        let palette = g.max_degree() + 1;
        MisraGries {
            g,
            at: vec![vec![NONE; palette]; g.n()],
        }
    }

    fn color(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == v)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn lowest_free(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(|&w| w == NONE)
            .expect("a vertex with an uncolored edge has a free color")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u][c] = v;
        self.at[v][c] = u;
    }

    fn unset(&mut self, u: usize, v: usize) -> Option<usize> {
        let c = self.color(u, v)?;
        self.at[u][c] = NONE;
        self.at[v][c] = NONE;
        Some(c)
    }

    // Maximal fan at `u` starting with the uncolored edge to `v`. Each next
    // fan vertex is the lowest-numbered neighbor whose edge color is free on
    // the previous fan vertex.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.neighbors(u).iter().copied().find(|&w| {
                !in_fan.contains(&w) && self.color(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => {
                    fan.push(w);
                    in_fan.push(w);
                }
                None => return fan,
            }
        }
    }

    // Swaps c and d along the maximal path from `u` alternating d, c, d, ...
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (u, d);
        while self.at[cur][col] != NONE {
            let next = self.at[cur][col];
            path.push((cur, next, col));
            cur = next;
            col = if col == d { c } else { d };
        }
        for &(a, b, _) in &path {
            self.unset(a, b);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        let fan = self.fan(u, v);
        let c = self.lowest_free(u);
        let d = self.lowest_free(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        let w = fan
            .iter()
            .position(|&x| self.is_free(x, d))
            .expect("some fan vertex has d free after the path inversion");
        let shifted: Vec<usize> = fan[1..=w]
            .iter()
            .map(|&x| {
                self.unset(u, x)
                    .expect("fan edges past the first are colored")
            })
            .collect();
        for (i, c) in shifted.into_iter().enumerate() {
            self.set(u, fan[i], c);
        }
        self.set(u, fan[w], d);
    }
}

/// Proper edge coloring with at most `Δ + 1` colors (Misra–Gries).
///
/// Edges are processed in lexicographic order; fans extend with the
/// lowest-numbered admissible neighbor and all free-color choices take the
/// lowest color. Unused colors are compacted away, preserving order.
pub fn misra_gries_edge_color(g: &Graph) -> EdgeColoring {
    let mut mg = MisraGries::new(g);
    for (u, v) in g.edges() {
        mg.color_edge(u, v);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let raw: Vec<usize> = edges
        .iter()
        .map(|&(u, v)| mg.color(u, v).expect("every edge colored"))
        .collect();
    let mut used = vec![false; g.max_degree() + 1];
    for &c in &raw {
        used[c] = true;
    }
    let mut relabel = vec![0; used.len()];
    let mut k = 0;
    for (c, &u) in used.iter().enumerate() {
        if u {
            relabel[c] = k;
            k += 1;
        }
    }
    EdgeColoring {
        edges,
        colors: raw.into_iter().map(|c| relabel[c]).collect(),
        num_colors: k,
    }
}

/// Largest color class, ties going to the lowest color.
pub fn extract_matching(coloring: &EdgeColoring) -> Matching {
    let mut best = Vec::new();
    for class in coloring.classes() {
        if class.len() > best.len() {
            best = class;
        }
    }
    best.sort_unstable();
    Matching { edges: best }
}

/// Maximal matching from a seeded random edge order.
pub fn greedy_maximal_matching(g: &Graph, seed: u64) -> Matching {
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.shuffle(&mut seed::rng(seed));
    let mut used = vec![false; g.n()];
    let mut out = Vec::new();
    for (u, v) in edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            out.push((u, v));
        }
    }
    out.sort_unstable();
    Matching { edges: out }
}

/// The graph `G_M` obtained from `G[V(M)]` by contracting every edge of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedGraph {
    pub graph: Graph,
    /// Contracted vertex `i` stands for matching edge `rep[i]`.
    pub rep: Vec<Edge>,
    /// Matched host vertex to contracted vertex.
    pub inv_rep: Vec<Option<usize>>,
}

impl ContractedGraph {
    /// Maps contracted vertices back to their matching edges.
    pub fn pull_back(&self, set: &VertexSet) -> Vec<Edge> {
        set.iter().map(|x| self.rep[x]).collect()
    }
}

/// Contracts the edges of `m`. Vertex `i` of the result is the `i`-th edge
/// of `m`; two of them are adjacent iff some edge of `g` joins their
/// endpoint sets.
pub fn contract_matching(g: &Graph, m: &Matching) -> Result<ContractedGraph> {
    let m = Matching::new(g, m.edges().iter().copied())?;
    let mut inv_rep = vec![None; g.n()];
    for (i, &(u, v)) in m.edges().iter().enumerate() {
        inv_rep[u] = Some(i);
        inv_rep[v] = Some(i);
    }
    let mut edges = Vec::new();
    for (i, &(u, v)) in m.edges().iter().enumerate() {
        for x in [u, v] {
            for &w in g.neighbors(x) {
                if let Some(j) = inv_rep[w] {
                    if j > i {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edge_list(m.len(), edges)?;
    Ok(ContractedGraph {
        graph,
        rep: m.edges,
        inv_rep,
    })
}
