//! Simple graphs and the two-edge-type multigraphs used by the cubic
//! construction.
//!
//! Vertices are dense `0..n` indices. Neighbour lists are kept sorted so that
//! iteration order, serialization and witnesses are deterministic.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// `(Δ, δ, n, m)` for a graph. An empty graph reports zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Fails on loops, duplicates and invalid vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidInput(format!("duplicate edge {u} {v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Sorted open neighbourhood. Panics on an invalid vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    /// `N[v] = {v} ∪ N(v)`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        Ok(out)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.adj.iter().map(Vec::len);
        DegreeStats {
            max_degree: degrees.clone().max().unwrap_or(0),
            min_degree: degrees.min().unwrap_or(0),
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`. The empty graph is
    /// 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|nb| nb.len() == r).then_some(r)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.adj.len();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj }
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> Graph {
        (0..copies).fold(Graph::new(0), |acc, _| acc.disjoint_union(self))
    }

    /// BFS distance in edges; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &y in &self.adj[comp[i]] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices` (sorted, distinct), renumbered in that
    /// order. Position `i` of `vertices` is the new vertex `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Graph { adj }
    }
}

/// Edge type in a [`TypedMultigraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// Colour edge: at most one endpoint may be chosen.
    C,
    /// Domination edge: contributes to the closed d-neighbourhood.
    D,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::C => "c",
            EdgeKind::D => "d",
        })
    }
}

/// Multigraph with c-edges and d-edges. A pair carries at most one edge of
/// each kind; repeated edges of the same kind are merged on insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TypedMultigraph {
    c_adj: Vec<Vec<usize>>,
    d_adj: Vec<Vec<usize>>,
}

impl TypedMultigraph {
    pub fn new(n: usize) -> Self {
        Self {
            c_adj: vec![Vec::new(); n],
            d_adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, EdgeKind)>,
    ) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v, kind) in edges {
            g.add_edge(u, v, kind)?;
        }
        Ok(g)
    }

    /// Promotes a simple graph by making every edge a d-edge.
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            c_adj: vec![Vec::new(); g.vertex_count()],
            d_adj: g.adj.clone(),
        }
    }

    /// Inserts an edge; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize, kind: EdgeKind) -> Result<bool> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        let adj = match kind {
            EdgeKind::C => &mut self.c_adj,
            EdgeKind::D => &mut self.d_adj,
        };
        match adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                adj[u].insert(pos, v);
                let pos = adj[v].binary_search(&u).unwrap_err();
                adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.c_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        (self
            .c_adj
            .iter()
            .chain(&self.d_adj)
            .map(Vec::len)
            .sum::<usize>())
            / 2
    }

    pub fn c_neighbors(&self, v: usize) -> &[usize] {
        &self.c_adj[v]
    }

    pub fn d_neighbors(&self, v: usize) -> &[usize] {
        &self.d_adj[v]
    }

    pub fn has_c_edge(&self, u: usize, v: usize) -> bool {
        self.c_adj[u].binary_search(&v).is_ok()
    }

    pub fn has_d_edge(&self, u: usize, v: usize) -> bool {
        self.d_adj[u].binary_search(&v).is_ok()
    }

    /// Degree counting both kinds, so a c+d pair contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.c_adj[v].len() + self.d_adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn c_edge_count(&self) -> usize {
        self.c_adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `N_d[v] = {v} ∪ {u : uv is a d-edge}`, sorted.
    pub fn closed_d_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut out = self.d_adj[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        Ok(out)
    }

    /// All edges as `(u, v, kind)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, EdgeKind)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in self.c_adj[u].iter().filter(|&&v| v > u) {
                out.push((u, v, EdgeKind::C));
            }
            for &v in self.d_adj[u].iter().filter(|&&v| v > u) {
                out.push((u, v, EdgeKind::D));
            }
        }
        out.sort_unstable();
        out
    }

    /// Underlying simple graph (a c+d pair becomes one edge).
    pub fn underlying_graph(&self) -> Graph {
        let adj = self
            .c_adj
            .iter()
            .zip(&self.d_adj)
            .map(|(c, d)| {
                let mut nb: Vec<usize> = c.iter().chain(d).copied().collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        Graph { adj }
    }

    /// The simple graph of d-edges, when there are no c-edges.
    pub fn as_plain_graph(&self) -> Option<Graph> {
        (self.c_edge_count() == 0).then(|| Graph {
            adj: self.d_adj.clone(),
        })
    }

    /// Components (of the underlying graph) that are a K4 made only of
    /// c-edges.
    pub fn all_c_k4_components(&self) -> Vec<Vec<usize>> {
        self.underlying_graph()
            .components()
            .into_iter()
            .filter(|comp| {
                comp.len() == 4
                    && comp.iter().all(|&x| {
                        comp.iter()
                            .filter(|&&y| y != x)
                            .all(|&y| self.has_c_edge(x, y))
                    })
            })
            .collect()
    }
}
