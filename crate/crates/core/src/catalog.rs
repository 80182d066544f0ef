//! Exhaustive catalog of small connected graphs with maximum degree 3.
//!
//! Every connected graph has a vertex whose removal keeps it connected, so
//! the graphs on `n` vertices are the graphs on `n - 1` vertices with one new
//! vertex joined to 1 to 3 vertices of degree below 3. Isomorphic copies are
//! merged through a canonical form computed by partition refinement and
//! individualization.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the catalog will build.
pub const MAX_CATALOG_ORDER: usize = 11;

type Adj = Vec<u16>;

fn adj_of(g: &Graph) -> Adj {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect()
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(adj: &Adj, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn certificate(adj: &Adj, order: &[usize]) -> u128 {
    let mut cert = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            cert = cert << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    cert
}

fn search(adj: &Adj, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let cells = refine(adj, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(_, c)| c.len())
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(adj, &order);
        if best.is_none_or(|b| cert < b) {
            *best = Some(cert);
        }
        return;
    };
    for &v in &cells[t] {
        let mut split = cells[..t].to_vec();
        split.push(vec![v]);
        split.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        split.extend(cells[t + 1..].iter().cloned());
        search(adj, split, best);
    }
}

/// Certificate equal for two graphs of the same order iff they are
/// isomorphic. Orders above 16 are not supported.
pub fn canonical_certificate(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(
        n <= 16,
        "canonical certificate supports at most 16 vertices"
    );
    if n == 0 {
        return 0;
    }
    let adj = adj_of(g);
    // Start from the degree partition, sorted by degree.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut best = None;
    search(&adj, by_degree.into_values().collect(), &mut best);
    best.unwrap_or(0)
}

/// All connected graphs with maximum degree at most 3 on `n` vertices, one
/// per isomorphism class, in a fixed order.
pub fn connected_subcubic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOG_ORDER {
        return Err(Error::Resource(format!(
            "catalog order {n} exceeds the supported maximum {MAX_CATALOG_ORDER}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Graph::new(1)];
    for m in 2..=n {
        let mut seen: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &layer {
            let open: Vec<usize> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
            for mask in 1u32..1 << open.len() {
                if mask.count_ones() > 3 {
                    continue;
                }
                let mut h = Graph::new(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v)?;
                }
                for (i, &v) in open.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        h.add_edge(m - 1, v)?;
                    }
                }
                seen.entry(canonical_certificate(&h)).or_insert(h);
            }
        }
        layer = seen.into_values().collect();
    }
    Ok(layer)
}
