//! Exact `L_k(G)` and `γ_{×ℓ}(G)` by branch-and-bound, and a brute-force
//! enumeration oracle for cross-checking.
//!
//! Both searches branch on vertices in descending-degree order (ties by
//! index) and track, for every vertex, how many chosen vertices its closed
//! neighbourhood holds. The packing search tries "include" before
//! "exclude", the domination search the reverse; the first optimum found is
//! kept, so witnesses are deterministic.

use crate::error::{Error, Result};
use crate::graph::{Graph, TypedMultigraph};

pub const DEFAULT_MAX_VERTICES: usize = 64;
/// The enumeration oracle scans all `2^n` subsets.
pub const ORACLE_MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

impl std::fmt::Display for SolveResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "optimum: {}", self.optimum)?;
        writeln!(
            f,
            "witness: {}",
            crate::io::format_vertex_set(&self.witness)
        )?;
        writeln!(f, "nodes: {}", self.nodes_explored)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    pub max_vertices: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

fn check_size(g: &Graph, opts: &SolverOptions) -> Result<()> {
    if g.vertex_count() > opts.max_vertices {
        return Err(Error::Resource(format!(
            "exact search is limited to {} vertices (graph has {}); use the greedy, \
             sample-repair or lll constructors instead",
            opts.max_vertices,
            g.vertex_count()
        )));
    }
    Ok(())
}

fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn closed_neighborhoods(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|v| g.closed_neighborhood(v).unwrap())
        .collect()
}

pub fn max_k_limited(g: &Graph, k: usize) -> Result<SolveResult> {
    max_k_limited_with(g, k, &SolverOptions::default())
}

pub fn max_k_limited_with(g: &Graph, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    check_size(g, opts)?;
    let n = g.vertex_count();
    let mut search = PackingSearch {
        order: branching_order(g),
        closed: closed_neighborhoods(g),
        cap: vec![k; n],
        chosen: Vec::new(),
        decided: vec![false; n],
        best: Vec::new(),
        found: false,
        nodes: 0,
        group_mark: vec![false; n],
    };
    search.run(0);
    Ok(SolveResult {
        optimum: search.best.len(),
        witness: sorted(search.best),
        nodes_explored: search.nodes,
    })
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

struct PackingSearch {
    order: Vec<usize>,
    closed: Vec<Vec<usize>>,
    /// Remaining room `k - |N[v] ∩ X|`.
    cap: Vec<usize>,
    chosen: Vec<usize>,
    decided: Vec<bool>,
    best: Vec<usize>,
    found: bool,
    nodes: u64,
    group_mark: Vec<bool>,
}

impl PackingSearch {
    fn selectable(&self, v: usize) -> bool {
        !self.decided[v] && self.closed[v].iter().all(|&w| self.cap[w] > 0)
    }

    /// Upper bound on how many more vertices can join. Undecided selectable
    /// vertices are grouped by a vertex `w` whose closed neighbourhood holds
    /// them all; a group contributes at most `cap[w]`.
    fn extension_bound(&mut self) -> usize {
        let n = self.cap.len();
        let mut bound = 0;
        for w in 0..n {
            let members = self.closed[w]
                .iter()
                .filter(|&&x| !self.group_mark[x] && self.selectable(x))
                .count();
            if members > self.cap[w] {
                for i in 0..self.closed[w].len() {
                    let x = self.closed[w][i];
                    if !self.group_mark[x] && self.selectable(x) {
                        self.group_mark[x] = true;
                    }
                }
                bound += self.cap[w];
            }
        }
        let ungrouped = (0..n)
            .filter(|&x| !self.group_mark[x] && self.selectable(x))
            .count();
        for m in self.group_mark.iter_mut() {
            *m = false;
        }
        bound + ungrouped
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if !self.found || self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            self.found = true;
        }
        let Some(pos) = (depth..self.order.len()).find(|&i| self.selectable(self.order[i])) else {
            return;
        };
        if self.chosen.len() + self.extension_bound() <= self.best.len() {
            return;
        }
        let v = self.order[pos];
        // The vertices skipped over are unselectable and stay so deeper down.
        self.decided[v] = true;
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            self.cap[w] -= 1;
        }
        self.chosen.push(v);
        self.run(pos + 1);
        self.chosen.pop();
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            self.cap[w] += 1;
        }
        self.run(pos + 1);
        self.decided[v] = false;
    }
}

pub fn min_tuple_dominating(g: &Graph, l: usize) -> Result<SolveResult> {
    min_tuple_dominating_with(g, l, &SolverOptions::default())
}

pub fn min_tuple_dominating_with(g: &Graph, l: usize, opts: &SolverOptions) -> Result<SolveResult> {
    if l == 0 {
        return Err(Error::InvalidInput("l must be positive".into()));
    }
    let n = g.vertex_count();
    if n > 0 && l > g.min_degree() + 1 {
        return Err(Error::Infeasible(format!(
            "no {l}-tuple dominating set exists: minimum degree is {}",
            g.min_degree()
        )));
    }
    check_size(g, opts)?;
    let closed = closed_neighborhoods(g);
    let avail = closed.iter().map(Vec::len).collect();
    let order = branching_order(g);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut search = DominationSearch {
        order,
        rank,
        closed,
        need: vec![l; n],
        avail,
        chosen: Vec::new(),
        best: (0..n).collect(),
        nodes: 0,
        mark: vec![false; n],
    };
    search.run(0);
    Ok(SolveResult {
        optimum: search.best.len(),
        witness: sorted(search.best),
        nodes_explored: search.nodes,
    })
}

struct DominationSearch {
    order: Vec<usize>,
    /// Position of each vertex in `order`.
    rank: Vec<usize>,
    closed: Vec<Vec<usize>>,
    /// Chosen vertices still required in `N[v]` (saturating at zero).
    need: Vec<usize>,
    /// Undecided vertices left in `N[v]`.
    avail: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    mark: Vec<bool>,
}

impl DominationSearch {
    /// Lower bound on further vertices: unsatisfied vertices whose undecided
    /// neighbourhoods are pairwise disjoint each need their own.
    fn completion_bound(&mut self, from: usize) -> usize {
        let mut bound = 0;
        let mut touched = Vec::new();
        for v in 0..self.need.len() {
            if self.need[v] == 0 {
                continue;
            }
            let free = self.closed[v]
                .iter()
                .all(|&w| !self.undecided(w, from) || !self.mark[w]);
            if free {
                bound += self.need[v];
                for &w in &self.closed[v] {
                    if self.undecided(w, from) {
                        self.mark[w] = true;
                        touched.push(w);
                    }
                }
            }
        }
        for w in touched {
            self.mark[w] = false;
        }
        bound
    }

    fn undecided(&self, w: usize, from: usize) -> bool {
        self.rank[w] >= from
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if self.need.iter().all(|&x| x == 0) {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if depth == self.order.len() || self.need.iter().zip(&self.avail).any(|(n, a)| n > a) {
            return;
        }
        if self.chosen.len() + self.completion_bound(depth) >= self.best.len() {
            return;
        }
        let v = self.order[depth];
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            self.avail[w] -= 1;
        }
        self.run(depth + 1);

        let mut saturated = Vec::new();
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            if self.need[w] > 0 {
                self.need[w] -= 1;
                saturated.push(w);
            }
        }
        self.chosen.push(v);
        self.run(depth + 1);
        self.chosen.pop();
        for w in saturated {
            self.need[w] += 1;
        }
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            self.avail[w] += 1;
        }
    }
}

/// What the oracle optimizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// Largest k-limited packing.
    Packing { k: usize },
    /// Smallest ℓ-tuple dominating set.
    Domination { l: usize },
}

/// Scans every subset; no pruning. For tests and cross-checks only.
pub fn enumerate_oracle(g: &Graph, objective: Objective) -> Result<usize> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::Resource(format!(
            "enumeration oracle is limited to {ORACLE_MAX_VERTICES} vertices"
        )));
    }
    let masks: Vec<u32> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u32 << v, |acc, &w| acc | (1 << w))
        })
        .collect();
    let subsets = 0..(1u32 << n);
    let best = match objective {
        Objective::Packing { k } => subsets
            .filter(|&s| masks.iter().all(|&m| (s & m).count_ones() as usize <= k))
            .map(u32::count_ones)
            .max(),
        Objective::Domination { l } => subsets
            .filter(|&s| masks.iter().all(|&m| (s & m).count_ones() as usize >= l))
            .map(u32::count_ones)
            .min(),
    };
    best.map(|b| b as usize)
        .ok_or_else(|| Error::Infeasible(format!("no set satisfies {objective:?}")))
}

/// Largest typed 2-limited set by full enumeration.
pub fn enumerate_typed_oracle(tm: &TypedMultigraph) -> Result<usize> {
    let n = tm.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::Resource(format!(
            "enumeration oracle is limited to {ORACLE_MAX_VERTICES} vertices"
        )));
    }
    let d_masks: Vec<u32> = (0..n)
        .map(|v| {
            tm.d_neighbors(v)
                .iter()
                .fold(1u32 << v, |acc, &w| acc | (1 << w))
        })
        .collect();
    let c_pairs: Vec<u32> = tm
        .edges()
        .into_iter()
        .filter(|e| e.2 == crate::graph::EdgeKind::C)
        .map(|(u, v, _)| (1 << u) | (1 << v))
        .collect();
    Ok((0..(1u32 << n))
        .filter(|&s| {
            d_masks.iter().all(|&m| (s & m).count_ones() <= 2)
                && c_pairs.iter().all(|&p| s & p != p)
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize)
}
