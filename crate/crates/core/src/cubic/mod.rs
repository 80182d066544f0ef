//! Constructive 2-limited packings for typed multigraphs of maximum degree 3.
//!
//! The construction peels the graph one component at a time, always working
//! on the component of the lowest surviving vertex. Each step removes a set
//! of vertices, commits some of them to the answer, and may add c-edges
//! between survivors so the rest of the answer cannot overload a removed
//! vertex. Every step commits at least a third of what it removes, which
//! yields `3|X| >= n`.

mod brooks;
mod rules;
mod work;

use std::collections::BTreeSet;
use std::fmt;

pub use brooks::{brooks_three_coloring, EXHAUSTIVE_FALLBACK_LIMIT};

use crate::error::{Error, Result};
use crate::graph::TypedMultigraph;
use crate::verify::verify_typed_two_limited;
use work::WorkGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    BaseCase,
    Brooks,
    ConfigurationA,
    Degree1,
    Degree2,
    Degree2SevenVertex,
    DEdgeTwoTriangles,
    DEdgeOneTriangle,
    OneTriangleK4,
    DEdgeNoTriangle,
    NoTriangleTwoEdgeK4,
    NoTriangleThreeEdgeK4,
    NoTriangleFourEdgeK4,
    NoTriangleFourEdgeK4Swap,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::BaseCase => "base-case",
            Rule::Brooks => "brooks",
            Rule::ConfigurationA => "configuration-A",
            Rule::Degree1 => "degree-1",
            Rule::Degree2 => "degree-2",
            Rule::Degree2SevenVertex => "degree-2/seven-vertex-k4",
            Rule::DEdgeTwoTriangles => "d-edge-two-triangles",
            Rule::DEdgeOneTriangle => "d-edge-one-triangle",
            Rule::OneTriangleK4 => "d-edge-one-triangle/k4",
            Rule::DEdgeNoTriangle => "d-edge-no-triangle",
            Rule::NoTriangleTwoEdgeK4 => "d-edge-no-triangle/two-edge-k4",
            Rule::NoTriangleThreeEdgeK4 => "d-edge-no-triangle/three-edge-k4",
            Rule::NoTriangleFourEdgeK4 => "d-edge-no-triangle/four-edge-k4",
            Rule::NoTriangleFourEdgeK4Swap => "d-edge-no-triangle/four-edge-k4-swap",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One applied reduction, in original vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub removed: Vec<usize>,
    pub chosen: Vec<usize>,
    pub added_c_edges: Vec<(usize, usize)>,
}

fn write_list(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = String>) -> fmt::Result {
    let items: Vec<String> = items.collect();
    if items.is_empty() {
        f.write_str("-")
    } else {
        f.write_str(&items.join(","))
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} removed=", self.rule)?;
        write_list(f, self.removed.iter().map(|v| v.to_string()))?;
        f.write_str(" added=")?;
        write_list(
            f,
            self.added_c_edges.iter().map(|(u, v)| format!("{u}-{v}")),
        )?;
        f.write_str(" chosen=")?;
        write_list(f, self.chosen.iter().map(|v| v.to_string()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn rules(&self) -> impl Iterator<Item = Rule> + '_ {
        self.steps.iter().map(|s| s.rule)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Six vertices where `ca, cd, cb, ad, ab` are c-edges, `bd` is not, and
/// `du, bu, uv` are edges of either kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigurationA {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub u: usize,
    pub v: usize,
}

pub fn find_configuration_a(tm: &TypedMultigraph) -> Option<ConfigurationA> {
    let work = WorkGraph::new(tm);
    let all: Vec<usize> = (0..tm.vertex_count()).collect();
    rules::find_configuration_a(&work, &all)
}

fn check_preconditions(tm: &TypedMultigraph) -> Result<()> {
    if let Some(v) = (0..tm.vertex_count()).find(|&v| tm.degree(v) > 3) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} (maximum 3)",
            tm.degree(v)
        )));
    }
    if let Some(comp) = tm.all_c_k4_components().first() {
        return Err(Error::Precondition(format!(
            "component {comp:?} is a K4 of c-edges and has no 2-limited set of size 2"
        )));
    }
    Ok(())
}

/// Returns a 2-limited set of size at least `n / 3` with the steps that
/// produced it.
pub fn construct_two_limited(tm: &TypedMultigraph) -> Result<(Vec<usize>, ReductionTrace)> {
    check_preconditions(tm)?;
    let mut work = WorkGraph::new(tm);
    let mut chosen = Vec::new();
    let mut trace = ReductionTrace::default();
    while let Some(start) = work.first_alive() {
        let comp = work.component_of(start);
        let plan = rules::reduce_component(&work, &comp)?;
        work.remove(&plan.removed);
        let mut added = Vec::new();
        for a in &plan.additions {
            work.add_c_edge(a.pair.0, a.pair.1);
            added.push(a.pair);
        }
        let touched: BTreeSet<usize> = added.iter().flat_map(|&(p, q)| [p, q]).collect();
        if let Some(&x) = touched.iter().find(|&&x| work.degree(x) > 3) {
            return Err(Error::Internal(format!(
                "{}: vertex {x} exceeds degree 3",
                plan.rule
            )));
        }
        chosen.extend(plan.chosen.iter().copied());
        trace.steps.push(ReductionStep {
            rule: plan.rule,
            removed: plan.removed.into_iter().collect(),
            chosen: plan.chosen,
            added_c_edges: added,
        });
    }
    chosen.sort_unstable();
    let report = verify_typed_two_limited(tm, &chosen)?;
    if !report.valid {
        return Err(Error::Internal(format!(
            "constructed set fails verification:\n{report}"
        )));
    }
    if 3 * chosen.len() < tm.vertex_count() {
        return Err(Error::Internal(format!(
            "constructed set has {} vertices, below a third of {}",
            chosen.len(),
            tm.vertex_count()
        )));
    }
    Ok((chosen, trace))
}
