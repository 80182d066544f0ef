//! Rule selection for one component and the shared reduction planner.
//!
//! Every reduction removes a vertex set `R` and commits a set `S ⊆ R` to the
//! answer. The planner checks that `S` is safe whatever the recursion picks
//! in `G - R`: no c-edge inside `S`, no neighbour of `S` outside `R`, and for
//! each `z ∈ R` the count `|N_d[z] ∩ S|` plus the surviving d-neighbours of
//! `z` is at most 2, or exactly 1 plus a pair that gets a new c-edge.

use std::collections::BTreeSet;

use super::work::WorkGraph;
use super::{brooks_three_coloring, ConfigurationA, Rule};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub rule: Rule,
    pub removed: BTreeSet<usize>,
    pub chosen: Vec<usize>,
    pub additions: Vec<Addition>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Addition {
    /// Removed vertex whose d-neighbourhood needs the new c-edge.
    pub owner: usize,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug)]
struct FormedK4 {
    vertices: [usize; 4],
    added: Vec<Addition>,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

pub(crate) fn plan(
    work: &WorkGraph,
    rule: Rule,
    removed: impl IntoIterator<Item = usize>,
    chosen: impl IntoIterator<Item = usize>,
) -> Result<Plan> {
    let removed: BTreeSet<usize> = removed.into_iter().collect();
    let mut chosen: Vec<usize> = chosen.into_iter().collect();
    chosen.sort_unstable();
    chosen.dedup();
    let in_s = |x: usize| chosen.binary_search(&x).is_ok();
    for &s in &chosen {
        if !removed.contains(&s) {
            return Err(internal(format!(
                "{rule}: chosen vertex {s} is not removed"
            )));
        }
        if let Some(y) = work.nbrs(s).into_iter().find(|y| !removed.contains(y)) {
            return Err(internal(format!(
                "{rule}: chosen vertex {s} has surviving neighbour {y}"
            )));
        }
        if let Some(&y) = work.c_nbrs(s).iter().find(|&&y| in_s(y)) {
            return Err(internal(format!(
                "{rule}: chosen vertices {s} and {y} share a c-edge"
            )));
        }
    }
    let mut additions: Vec<Addition> = Vec::new();
    for &z in &removed {
        let fixed = usize::from(in_s(z)) + work.d_nbrs(z).iter().filter(|&&y| in_s(y)).count();
        let outside: Vec<usize> = work
            .d_nbrs(z)
            .iter()
            .copied()
            .filter(|y| !removed.contains(y))
            .collect();
        if fixed + outside.len() <= 2 {
            continue;
        }
        if fixed == 1 && outside.len() == 2 {
            let pair = (outside[0], outside[1]);
            if !work.has_c(pair.0, pair.1) && !additions.iter().any(|a| a.pair == pair) {
                additions.push(Addition { owner: z, pair });
            }
            continue;
        }
        return Err(internal(format!(
            "{rule}: vertex {z} would see {fixed} chosen and {} open d-neighbours",
            outside.len()
        )));
    }
    if 3 * chosen.len() < removed.len() {
        return Err(internal(format!(
            "{rule}: contributes {} for {} removed vertices",
            chosen.len(),
            removed.len()
        )));
    }
    Ok(Plan {
        rule,
        removed,
        chosen,
        additions,
    })
}

/// All-c K4s that would exist after applying `plan`. Only added edges can
/// create one, so each must contain an added edge.
fn formed_k4s(work: &WorkGraph, plan: &Plan) -> Vec<FormedK4> {
    let c_after = |x: usize| -> Vec<usize> {
        let mut out: Vec<usize> = work
            .c_nbrs(x)
            .iter()
            .copied()
            .filter(|y| !plan.removed.contains(y))
            .collect();
        for a in &plan.additions {
            if a.pair.0 == x {
                out.push(a.pair.1);
            } else if a.pair.1 == x {
                out.push(a.pair.0);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    };
    let mut found: BTreeSet<[usize; 4]> = BTreeSet::new();
    for a in &plan.additions {
        let (p, q) = a.pair;
        let cq = c_after(q);
        let common: Vec<usize> = c_after(p).into_iter().filter(|x| cq.contains(x)).collect();
        for (i, &x) in common.iter().enumerate() {
            for &y in &common[i + 1..] {
                if c_after(x).contains(&y) {
                    let mut k = [p, q, x, y];
                    k.sort_unstable();
                    found.insert(k);
                }
            }
        }
    }
    found
        .into_iter()
        .map(|vertices| FormedK4 {
            vertices,
            added: plan
                .additions
                .iter()
                .copied()
                .filter(|a| vertices.contains(&a.pair.0) && vertices.contains(&a.pair.1))
                .collect(),
        })
        .collect()
}

fn require_no_k4(work: &WorkGraph, plan: Plan) -> Result<Plan> {
    match formed_k4s(work, &plan).first() {
        None => Ok(plan),
        Some(k) => Err(internal(format!(
            "{}: added c-edges complete an all-c K4 on {:?}",
            plan.rule, k.vertices
        ))),
    }
}

fn owner_pair(k: &FormedK4, owner: usize) -> Result<(usize, usize)> {
    k.added
        .iter()
        .find(|a| a.owner == owner)
        .map(|a| a.pair)
        .ok_or_else(|| {
            internal(format!(
                "no added edge owned by {owner} in K4 {:?}",
                k.vertices
            ))
        })
}

/// The other neighbours of `x`, in order.
fn others(work: &WorkGraph, x: usize, exclude: &[usize]) -> Vec<usize> {
    work.nbrs(x)
        .into_iter()
        .filter(|y| !exclude.contains(y))
        .collect()
}

fn single(v: Vec<usize>, what: &str) -> Result<usize> {
    match v.as_slice() {
        [x] => Ok(*x),
        _ => Err(internal(format!("expected one {what}, found {v:?}"))),
    }
}

/// Lexicographic search for configuration A inside `comp`.
pub(crate) fn find_configuration_a(work: &WorkGraph, comp: &[usize]) -> Option<ConfigurationA> {
    for &c in comp {
        for &a in work.c_nbrs(c) {
            let common: Vec<usize> = work
                .c_nbrs(c)
                .iter()
                .copied()
                .filter(|&x| x != a && work.has_c(a, x))
                .collect();
            for &d in &common {
                for &b in &common {
                    if b == d || work.has_c(b, d) {
                        continue;
                    }
                    let nd = work.nbrs(d);
                    for u in work.nbrs(b) {
                        if u == a || u == c || !nd.contains(&u) {
                            continue;
                        }
                        if let Some(v) =
                            work.nbrs(u).into_iter().find(|v| ![a, b, c, d].contains(v))
                        {
                            return Some(ConfigurationA { a, b, c, d, u, v });
                        }
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn reduce_component(work: &WorkGraph, comp: &[usize]) -> Result<Plan> {
    let n = comp.len();
    if n <= 3 {
        return plan(work, Rule::BaseCase, comp.iter().copied(), [comp[0]]);
    }
    let all_c = comp.iter().all(|&v| work.d_nbrs(v).is_empty());
    if n == 4 {
        for (i, &x) in comp.iter().enumerate() {
            if let Some(&y) = comp[i + 1..].iter().find(|&&y| !work.has_c(x, y)) {
                return plan(work, Rule::BaseCase, comp.iter().copied(), [x, y]);
            }
        }
        return Err(internal(format!(
            "all-c K4 component {comp:?} reached the base case"
        )));
    }
    if all_c {
        return brooks_step(work, comp);
    }
    if let Some(cfg) = find_configuration_a(work, comp) {
        let p = plan(
            work,
            Rule::ConfigurationA,
            [cfg.a, cfg.b, cfg.c, cfg.d, cfg.u, cfg.v],
            [cfg.b, cfg.d],
        )?;
        return require_no_k4(work, p);
    }
    for &u in comp {
        if let [v] = work.nbrs(u)[..] {
            return require_no_k4(work, plan(work, Rule::Degree1, [u, v], [u])?);
        }
    }
    for &u in comp {
        if let [v, w] = work.nbrs(u)[..] {
            return degree_two(work, comp, u, v, w);
        }
    }
    // Every vertex now has three distinct neighbours: the component is a
    // simple cubic graph and has a d-edge.
    let d_edges: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&u| {
            work.d_nbrs(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
        .collect();
    let common = |u: usize, v: usize| -> Vec<usize> {
        let nv = work.nbrs(v);
        work.nbrs(u)
            .into_iter()
            .filter(|x| nv.contains(x))
            .collect()
    };
    if let Some(&(u, v)) = d_edges.iter().find(|&&(u, v)| common(u, v).len() == 2) {
        let (b, c) = (common(u, v)[0], common(u, v)[1]);
        let a = single(others(work, b, &[u, v]), "third neighbour")?;
        let d = single(others(work, c, &[u, v]), "third neighbour")?;
        let p = plan(work, Rule::DEdgeTwoTriangles, [a, b, c, d, u, v], [u, v])?;
        return require_no_k4(work, p);
    }
    if let Some(&(u, v)) = d_edges.iter().find(|&&(u, v)| common(u, v).len() == 1) {
        let w = common(u, v)[0];
        return one_triangle(work, u, v, w);
    }
    if let Some(&(u, v)) = d_edges.first() {
        return no_triangle(work, comp, u, v);
    }
    Err(internal(format!("no rule applies to component {comp:?}")))
}

fn brooks_step(work: &WorkGraph, comp: &[usize]) -> Result<Plan> {
    let index = |x: usize| comp.binary_search(&x).unwrap();
    let mut edges = Vec::new();
    for (i, &x) in comp.iter().enumerate() {
        edges.extend(
            work.c_nbrs(x)
                .iter()
                .map(|&y| index(y))
                .filter(|&j| j > i)
                .map(|j| (i, j)),
        );
    }
    let g = Graph::from_edges(comp.len(), edges)?;
    let colors = brooks_three_coloring(&g)?;
    let best = (0..3u8)
        .max_by_key(|&c| {
            (
                colors.iter().filter(|&&x| x == c).count(),
                std::cmp::Reverse(c),
            )
        })
        .unwrap_or(0);
    let class = comp
        .iter()
        .zip(&colors)
        .filter(|&(_, &c)| c == best)
        .map(|(&x, _)| x);
    plan(work, Rule::Brooks, comp.iter().copied(), class)
}

fn degree_two(work: &WorkGraph, comp: &[usize], u: usize, v: usize, w: usize) -> Result<Plan> {
    let p = plan(work, Rule::Degree2, [u, v, w], [u])?;
    let k4s = formed_k4s(work, &p);
    let Some(k) = k4s.first() else {
        return Ok(p);
    };
    if comp.len() != 7 || k.added.len() != 2 {
        return Err(internal(format!(
            "degree-2 at {u}: unexpected K4 {:?} in a {}-vertex component",
            k.vertices,
            comp.len()
        )));
    }
    let (a, b) = owner_pair(k, v)?;
    let special = plan(
        work,
        Rule::Degree2SevenVertex,
        comp.iter().copied(),
        [a, b, w],
    )?;
    require_no_k4(work, special)
}

fn one_triangle(work: &WorkGraph, u: usize, v: usize, w: usize) -> Result<Plan> {
    let a = single(others(work, u, &[v, w]), "third neighbour")?;
    let b = single(others(work, v, &[u, w]), "third neighbour")?;
    let c = single(others(work, w, &[u, v]), "third neighbour")?;
    let p = plan(work, Rule::DEdgeOneTriangle, [a, b, c, u, v, w], [u, v])?;
    let k4s = formed_k4s(work, &p);
    let Some(k) = k4s.first() else {
        return Ok(p);
    };
    let (a1, a2) = owner_pair(k, a)?;
    owner_pair(k, b)?;
    let removed = k.vertices.iter().copied().chain([a, b, u, v, w]);
    let special = plan(work, Rule::OneTriangleK4, removed, [a1, a2, b])?;
    require_no_k4(work, special)
}

fn no_triangle(work: &WorkGraph, comp: &[usize], u: usize, v: usize) -> Result<Plan> {
    let [a, b] = others(work, u, &[v])[..] else {
        return Err(internal(format!("vertex {u} is not cubic")));
    };
    let [c, d] = others(work, v, &[u])[..] else {
        return Err(internal(format!("vertex {v} is not cubic")));
    };
    let roots = [a, b, c, d];
    let p = plan(work, Rule::DEdgeNoTriangle, [a, b, c, d, u, v], [u, v])?;
    let k4s = formed_k4s(work, &p);
    if k4s.is_empty() {
        return Ok(p);
    }
    let owners = |k: &FormedK4| -> Vec<usize> {
        roots
            .iter()
            .copied()
            .filter(|r| k.added.iter().any(|x| x.owner == *r))
            .collect()
    };
    if let Some(k) = k4s.iter().find(|k| k.added.len() == 2) {
        let [x, y] = owners(k)[..] else {
            return Err(internal(format!(
                "K4 {:?} has unexpected owners",
                k.vertices
            )));
        };
        let (x1, x2) = owner_pair(k, x)?;
        let removed = k.vertices.iter().copied().chain([x, y, u, v]);
        let special = plan(work, Rule::NoTriangleTwoEdgeK4, removed, [x1, x2, y])?;
        return require_no_k4(work, special);
    }
    if let Some(k) = k4s.iter().find(|k| k.added.len() == 3) {
        let own = owners(k);
        let u_side: Vec<usize> = own.iter().copied().filter(|r| [a, b].contains(r)).collect();
        let v_side: Vec<usize> = own.iter().copied().filter(|r| [c, d].contains(r)).collect();
        let (x, y, opposite) = match (u_side.as_slice(), v_side.as_slice()) {
            ([x, y], _) => (*x, *y, v),
            (_, [x, y]) => (*x, *y, u),
            _ => {
                return Err(internal(format!(
                    "K4 {:?} has unexpected owners",
                    k.vertices
                )))
            }
        };
        let (x1, x2) = owner_pair(k, x)?;
        let removed = k.vertices.iter().copied().chain(roots).chain([u, v]);
        let special = plan(
            work,
            Rule::NoTriangleThreeEdgeK4,
            removed,
            [x1, x2, y, opposite],
        )?;
        return require_no_k4(work, special);
    }
    let k = &k4s[0];
    if comp.len() != 10 || k.added.len() != 4 {
        return Err(internal(format!(
            "d-edge {u}-{v}: unexpected K4 {:?} in a {}-vertex component",
            k.vertices,
            comp.len()
        )));
    }
    let touches = |x: usize| {
        k.added
            .iter()
            .filter(|e| e.pair.0 == x || e.pair.1 == x)
            .count()
    };
    if k.vertices.iter().all(|&x| touches(x) == 2) {
        let special = plan(
            work,
            Rule::NoTriangleFourEdgeK4,
            comp.iter().copied(),
            roots,
        )?;
        return require_no_k4(work, special);
    }
    // The added edges form a triangle with a pendant edge `ps`. Taking all
    // four roots would give the apex `p` three chosen neighbours, so the
    // root owning `ps` is swapped for `s`.
    let s = *k
        .vertices
        .iter()
        .find(|&&x| touches(x) == 1)
        .ok_or_else(|| internal(format!("K4 {:?}: no pendant vertex", k.vertices)))?;
    let ps_owner = k
        .added
        .iter()
        .find(|e| e.pair.0 == s || e.pair.1 == s)
        .map(|e| e.owner)
        .unwrap_or(s);
    let chosen = roots.iter().copied().filter(|&r| r != ps_owner).chain([s]);
    let special = plan(
        work,
        Rule::NoTriangleFourEdgeK4Swap,
        comp.iter().copied(),
        chosen,
    )?;
    require_no_k4(work, special)
}
