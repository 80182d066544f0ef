use std::collections::BTreeSet;

use crate::graph::TypedMultigraph;

/// Mutable typed multigraph in original vertex indices. Removed vertices
/// keep their slot but lose all edges.
#[derive(Clone, Debug)]
pub(crate) struct WorkGraph {
    alive: Vec<bool>,
    c: Vec<Vec<usize>>,
    d: Vec<Vec<usize>>,
}

fn insert_sorted(list: &mut Vec<usize>, x: usize) -> bool {
    match list.binary_search(&x) {
        Ok(_) => false,
        Err(pos) => {
            list.insert(pos, x);
            true
        }
    }
}

fn remove_sorted(list: &mut Vec<usize>, x: usize) {
    if let Ok(pos) = list.binary_search(&x) {
        list.remove(pos);
    }
}

impl WorkGraph {
    pub fn new(tm: &TypedMultigraph) -> Self {
        let n = tm.vertex_count();
        Self {
            alive: vec![true; n],
            c: (0..n).map(|v| tm.c_neighbors(v).to_vec()).collect(),
            d: (0..n).map(|v| tm.d_neighbors(v).to_vec()).collect(),
        }
    }

    pub fn first_alive(&self) -> Option<usize> {
        self.alive.iter().position(|&a| a)
    }

    pub fn c_nbrs(&self, v: usize) -> &[usize] {
        &self.c[v]
    }

    pub fn d_nbrs(&self, v: usize) -> &[usize] {
        &self.d[v]
    }

    pub fn has_c(&self, u: usize, v: usize) -> bool {
        self.c[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.c[v].len() + self.d[v].len()
    }

    /// Distinct neighbours over both edge kinds, sorted.
    pub fn nbrs(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.c[v].iter().chain(&self.d[v]).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in self.nbrs(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn remove(&mut self, vertices: &BTreeSet<usize>) {
        for &x in vertices {
            for y in std::mem::take(&mut self.c[x]) {
                remove_sorted(&mut self.c[y], x);
            }
            for y in std::mem::take(&mut self.d[x]) {
                remove_sorted(&mut self.d[y], x);
            }
            self.alive[x] = false;
        }
    }

    pub fn add_c_edge(&mut self, u: usize, v: usize) -> bool {
        let added = insert_sorted(&mut self.c[u], v);
        insert_sorted(&mut self.c[v], u);
        added
    }
}
