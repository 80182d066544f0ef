//! Proper 3-colouring of graphs with maximum degree 3 and no K4 component.
//!
//! Per component: bipartite components get two colours. Otherwise the
//! colouring is greedy in reverse BFS order from a root, so every vertex but
//! the root still has an uncoloured parent when its turn comes and sees at
//! most two colours. The root is a vertex of degree below 3 when one exists.
//! A cubic component with a bridge is split at the bridge, each side coloured
//! from its bridge endpoint, and one side permuted. A bridgeless cubic
//! component uses a vertex `v` with non-adjacent neighbours `x`, `y` such
//! that removing `x` and `y` leaves it connected: `x` and `y` share a colour,
//! so `v`, coloured last, has a colour free.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Components up to this size fall back to exhaustive search if the
/// constructive colouring ever fails its properness check.
pub const EXHAUSTIVE_FALLBACK_LIMIT: usize = 24;

const UNCOLORED: u8 = u8::MAX;

pub fn brooks_three_coloring(g: &Graph) -> Result<Vec<u8>> {
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let mut color = vec![UNCOLORED; g.vertex_count()];
    for comp in g.components() {
        if comp.len() == 4 && comp.iter().all(|&v| g.degree(v) == 3) {
            return Err(Error::Precondition(format!(
                "component {comp:?} is K4, which needs 4 colours"
            )));
        }
        color_component(g, &comp, &mut color);
        if !proper_on(g, &comp, &color)
            && (comp.len() > EXHAUSTIVE_FALLBACK_LIMIT || !exhaustive(g, &comp, &mut color))
        {
            return Err(Error::Internal(format!(
                "failed to 3-colour component of size {}",
                comp.len()
            )));
        }
    }
    Ok(color)
}

fn proper_on(g: &Graph, comp: &[usize], color: &[u8]) -> bool {
    comp.iter()
        .all(|&v| color[v] < 3 && g.neighbors(v).iter().all(|&w| color[w] != color[v]))
}

fn color_component(g: &Graph, comp: &[usize], color: &mut [u8]) {
    if two_color(g, comp, color) {
        return;
    }
    if let Some(&root) = comp.iter().find(|&&v| g.degree(v) < 3) {
        greedy_from(g, root, &[], color);
        return;
    }
    if let Some((p, q)) = find_bridge(g, comp) {
        greedy_from(g, p, &[q], color);
        greedy_from(g, q, &[p], color);
        if color[p] == color[q] {
            let side = reachable(g, q, &[p]);
            for v in side {
                color[v] = (color[v] + 1) % 3;
            }
        }
        return;
    }
    for &v in comp {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (x, y) = (nb[i], nb[j]);
                if g.has_edge(x, y) {
                    continue;
                }
                if reachable(g, v, &[x, y]).len() + 2 == comp.len() {
                    color[x] = 0;
                    color[y] = 0;
                    greedy_from(g, v, &[x, y], color);
                    return;
                }
            }
        }
    }
}

/// BFS order from `root`, never entering `blocked`.
fn reachable(g: &Graph, root: usize, blocked: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    for &b in blocked {
        seen[b] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    order
}

fn greedy_from(g: &Graph, root: usize, blocked: &[usize], color: &mut [u8]) {
    for v in reachable(g, root, blocked).into_iter().rev() {
        let used: Vec<u8> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (0..3).find(|c| !used.contains(c)).unwrap_or(3);
    }
}

fn two_color(g: &Graph, comp: &[usize], color: &mut [u8]) -> bool {
    let root = comp[0];
    color[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if color[y] == UNCOLORED {
                color[y] = 1 - color[x];
                queue.push_back(y);
            } else if color[y] == color[x] {
                for &v in comp {
                    color[v] = UNCOLORED;
                }
                return false;
            }
        }
    }
    true
}

fn find_bridge(g: &Graph, comp: &[usize]) -> Option<(usize, usize)> {
    for &p in comp {
        for &q in g.neighbors(p).iter().filter(|&&q| q > p) {
            // `pq` is a bridge iff `q` is unreachable from `p` without it.
            let mut seen = vec![false; g.vertex_count()];
            seen[p] = true;
            let mut stack: Vec<usize> =
                g.neighbors(p).iter().copied().filter(|&w| w != q).collect();
            for &w in &stack {
                seen[w] = true;
            }
            let mut hit = false;
            while let Some(x) = stack.pop() {
                if x == q {
                    hit = true;
                    break;
                }
                for &y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if !hit {
                return Some((p, q));
            }
        }
    }
    None
}

fn exhaustive(g: &Graph, comp: &[usize], color: &mut [u8]) -> bool {
    fn go(g: &Graph, comp: &[usize], i: usize, color: &mut [u8]) -> bool {
        let Some(&v) = comp.get(i) else {
            return true;
        };
        for c in 0..3 {
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if go(g, comp, i + 1, color) {
                    return true;
                }
            }
        }
        color[v] = UNCOLORED;
        false
    }
    for &v in comp {
        color[v] = UNCOLORED;
    }
    go(g, comp, 0, color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_named, gen_random_regular, NamedFamily};

    fn assert_proper(g: &Graph, color: &[u8]) {
        for (u, v) in g.edges() {
            assert_ne!(color[u], color[v], "edge {u}-{v}");
        }
        assert!(color.iter().all(|&c| c < 3));
    }

    #[test]
    fn cycles_and_petersen() {
        let c5 = gen_cycle(5).unwrap();
        let col = brooks_three_coloring(&c5).unwrap();
        assert_proper(&c5, &col);
        let c6 = gen_cycle(6).unwrap();
        let col = brooks_three_coloring(&c6).unwrap();
        assert_proper(&c6, &col);
        assert!(col.iter().all(|&c| c < 2));
        let p = gen_named(NamedFamily::Petersen);
        let col = brooks_three_coloring(&p).unwrap();
        assert_proper(&p, &col);
        assert_eq!(col, brooks_three_coloring(&p).unwrap());
    }

    #[test]
    fn rejects_k4_component() {
        let g = gen_named(NamedFamily::K4).disjoint_union(&gen_cycle(3).unwrap());
        assert!(matches!(
            brooks_three_coloring(&g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cubic_with_bridge() {
        // Two K4-minus-an-edge blocks joined through a bridge between
        // subdivided ends: 0-1-2-3 diamond style, both sides cubic.
        let mut edges = vec![];
        for base in [0, 5] {
            let (a, b, c, d, e) = (base, base + 1, base + 2, base + 3, base + 4);
            edges.extend([(a, b), (a, c), (b, c), (b, d), (c, d), (a, e), (d, e)]);
        }
        // Vertex 4 and 9 have degree 2; bridge them.
        edges.push((4, 9));
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(g.regularity(), Some(3));
        assert!(find_bridge(&g, &(0..10).collect::<Vec<_>>()).is_some());
        let col = brooks_three_coloring(&g).unwrap();
        assert_proper(&g, &col);
    }

    #[test]
    fn random_cubic_graphs() {
        for seed in 0..200 {
            let g = gen_random_regular(20, 3, seed).unwrap();
            if g.components().iter().any(|c| c.len() == 4) {
                continue;
            }
            let col = brooks_three_coloring(&g).unwrap();
            assert_proper(&g, &col);
        }
    }
}
