//! Certificate checks for limited packings and tuple dominating sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, TypedMultigraph};

/// A candidate k-limited packing. Vertices are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Packing {
    pub k: usize,
    vertices: Vec<usize>,
}

impl Packing {
    pub fn new(k: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        Self {
            k,
            vertices: normalize(vertices),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn verify(&self, g: &Graph) -> Result<VerificationReport> {
        verify_k_limited(g, &self.vertices, self.k)
    }
}

fn normalize(vertices: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = vertices.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// A violated constraint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// The closed (d-)neighbourhood of `vertex` holds `count` chosen
    /// vertices against `limit` (above it for packings, below it for
    /// domination).
    Vertex {
        vertex: usize,
        count: usize,
        limit: usize,
    },
    /// Both endpoints of a c-edge were chosen.
    CEdge { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Vertex {
                vertex,
                count,
                limit,
            } => write!(f, "violation: vertex {vertex} count {count} limit {limit}"),
            Violation::CEdge { u, v } => write!(f, "violation: cedge {u} {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        Self {
            valid: violations.is_empty(),
            violations,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid: {}", self.valid)?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Membership mask for `set`, checked against `n`.
fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        mask[v] = true;
    }
    Ok(mask)
}

fn closed_count(g: &Graph, mask: &[bool], v: usize) -> usize {
    usize::from(mask[v]) + g.neighbors(v).iter().filter(|&&w| mask[w]).count()
}

/// Checks `|N[v] ∩ X| ≤ k` for every vertex.
pub fn verify_k_limited(g: &Graph, x: &[usize], k: usize) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let mask = membership(g.vertex_count(), x)?;
    let violations = g
        .vertices()
        .filter_map(|v| {
            let count = closed_count(g, &mask, v);
            (count > k).then_some(Violation::Vertex {
                vertex: v,
                count,
                limit: k,
            })
        })
        .collect();
    Ok(VerificationReport::from_violations(violations))
}

/// Checks the typed 2-limited conditions: at most one endpoint of every
/// c-edge, and `|N_d[v] ∩ X| ≤ 2` for every vertex. c-edges do not count
/// towards `N_d`.
pub fn verify_typed_two_limited(tm: &TypedMultigraph, x: &[usize]) -> Result<VerificationReport> {
    let n = tm.vertex_count();
    let mask = membership(n, x)?;
    let mut violations = Vec::new();
    for v in 0..n {
        let count = usize::from(mask[v]) + tm.d_neighbors(v).iter().filter(|&&w| mask[w]).count();
        if count > 2 {
            violations.push(Violation::Vertex {
                vertex: v,
                count,
                limit: 2,
            });
        }
        if mask[v] {
            for &w in tm.c_neighbors(v) {
                if w > v && mask[w] {
                    violations.push(Violation::CEdge { u: v, v: w });
                }
            }
        }
    }
    Ok(VerificationReport::from_violations(violations))
}

/// Checks `|N[v] ∩ D| ≥ ℓ` for every vertex.
pub fn verify_tuple_dominating(g: &Graph, d: &[usize], l: usize) -> Result<VerificationReport> {
    if l == 0 {
        return Err(Error::InvalidInput("l must be positive".into()));
    }
    let mask = membership(g.vertex_count(), d)?;
    let violations = g
        .vertices()
        .filter_map(|v| {
            let count = closed_count(g, &mask, v);
            (count < l).then_some(Violation::Vertex {
                vertex: v,
                count,
                limit: l,
            })
        })
        .collect();
    Ok(VerificationReport::from_violations(violations))
}

/// `V \ X` for an `r`-regular graph. `X` is a k-limited packing exactly when
/// the complement is an `(r + 1 - k)`-tuple dominating set.
pub fn dual_complement(g: &Graph, x: &[usize], k: usize) -> Result<Vec<usize>> {
    let r = g
        .regularity()
        .ok_or_else(|| Error::Precondition("duality requires a regular graph".into()))?;
    if k == 0 || k > r + 1 {
        return Err(Error::Precondition(format!(
            "k = {k} outside 1..={} for a {r}-regular graph",
            r + 1
        )));
    }
    let mask = membership(g.vertex_count(), x)?;
    Ok(g.vertices().filter(|&v| !mask[v]).collect())
}

/// Dual parameter `r + 1 - k` for an `r`-regular graph.
pub fn dual_parameter(r: usize, k: usize) -> usize {
    r + 1 - k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_named, gen_random_regular, NamedFamily};
    use crate::graph::EdgeKind;
    use proptest::prelude::*;

    #[test]
    fn k_limited_examples() {
        let c6 = gen_cycle(6).unwrap();
        // Every closed neighbourhood of C6 meets {0,1,3,4} at most twice.
        for v in 0..6 {
            let n = c6.closed_neighborhood(v).unwrap();
            assert!(n.iter().filter(|w| [0, 1, 3, 4].contains(w)).count() <= 2);
        }
        assert!(verify_k_limited(&c6, &[0, 1, 3, 4], 2).unwrap().valid);
        assert!(verify_k_limited(&c6, &[], 1).unwrap().valid);

        let k4 = gen_named(NamedFamily::K4);
        let r = verify_k_limited(&k4, &[0, 1, 2], 2).unwrap();
        assert!(!r.valid);
        assert_eq!(
            r.violations,
            (0..4)
                .map(|v| Violation::Vertex {
                    vertex: v,
                    count: 3,
                    limit: 2
                })
                .collect::<Vec<_>>()
        );
        assert!(verify_k_limited(&k4, &[4], 2).is_err());
    }

    #[test]
    fn typed_examples() {
        let c = TypedMultigraph::from_edges(2, [(0, 1, EdgeKind::C)]).unwrap();
        let r = verify_typed_two_limited(&c, &[0, 1]).unwrap();
        assert_eq!(r.violations, vec![Violation::CEdge { u: 0, v: 1 }]);

        let d = TypedMultigraph::from_edges(2, [(0, 1, EdgeKind::D)]).unwrap();
        assert!(verify_typed_two_limited(&d, &[0, 1]).unwrap().valid);

        let k4 = TypedMultigraph::from_graph(&gen_named(NamedFamily::K4));
        assert!(verify_typed_two_limited(&k4, &[0, 1]).unwrap().valid);
        assert!(!verify_typed_two_limited(&k4, &[0, 1, 2]).unwrap().valid);
        assert!(verify_typed_two_limited(&k4, &[9]).is_err());
    }

    #[test]
    fn c_edges_do_not_count_toward_d_neighbourhood() {
        // Star centre 0 joined by c-edges to 1, 2, 3.
        let tm = TypedMultigraph::from_edges(
            4,
            [
                (0, 1, EdgeKind::C),
                (0, 2, EdgeKind::C),
                (0, 3, EdgeKind::C),
            ],
        )
        .unwrap();
        assert!(verify_typed_two_limited(&tm, &[1, 2, 3]).unwrap().valid);
    }

    #[test]
    fn tuple_dominating_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert!(verify_tuple_dominating(&c4, &[0, 2], 1).unwrap().valid);
        let petersen = gen_named(NamedFamily::Petersen);
        let all: Vec<usize> = petersen.vertices().collect();
        for l in 1..=4 {
            assert!(verify_tuple_dominating(&petersen, &all, l).unwrap().valid);
        }
        let r = verify_tuple_dominating(&Graph::new(1), &[], 1).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation::Vertex {
                vertex: 0,
                count: 0,
                limit: 1
            }]
        );
    }

    #[test]
    fn dual_complement_examples() {
        let c4 = gen_cycle(4).unwrap();
        let d = dual_complement(&c4, &[0, 1], 2).unwrap();
        assert_eq!(d, vec![2, 3]);
        assert!(verify_k_limited(&c4, &[0, 1], 2).unwrap().valid);
        assert!(verify_tuple_dominating(&c4, &d, 1).unwrap().valid);

        let k4 = gen_named(NamedFamily::K4);
        for k in 1..=4 {
            let d = dual_complement(&k4, &[], k).unwrap();
            assert_eq!(d, vec![0, 1, 2, 3]);
            assert!(verify_tuple_dominating(&k4, &d, 4 - k).map_or(k == 4, |r| r.valid));
        }
        let star = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        assert!(matches!(
            dual_complement(&star, &[], 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            dual_complement(&c4, &[], 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn report_text_format() {
        let k4 = gen_named(NamedFamily::K4);
        let r = verify_k_limited(&k4, &[0, 1, 2], 2).unwrap();
        assert!(r.to_string().starts_with(
            "valid: false\nviolation: vertex 0 count 3 limit 2\nviolation: vertex 1 count 3 limit 2\n"
        ));
        let c = TypedMultigraph::from_edges(2, [(0, 1, EdgeKind::C)]).unwrap();
        assert_eq!(
            verify_typed_two_limited(&c, &[0, 1]).unwrap().to_string(),
            "valid: false\nviolation: cedge 0 1\n"
        );
    }

    proptest! {
        #[test]
        fn duality_on_random_subsets(seed in any::<u64>(), mask in any::<u16>(), k in 1usize..=4) {
            let g = gen_random_regular(12, 3, seed).unwrap();
            let x: Vec<usize> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
            let d = dual_complement(&g, &x, k).unwrap();
            let packing_ok = verify_k_limited(&g, &x, k).unwrap().valid;
            // ℓ = 0 is vacuous; the k = r + 1 case has every set dominating at level 0.
            let l = dual_parameter(3, k);
            let dominating_ok = l == 0 || verify_tuple_dominating(&g, &d, l).unwrap().valid;
            prop_assert_eq!(packing_ok, dominating_ok);
        }

        #[test]
        fn valid_at_k_implies_valid_at_k_plus_one(seed in any::<u64>(), mask in any::<u16>(), k in 1usize..4) {
            let g = gen_random_regular(14, 3, seed).unwrap();
            let x: Vec<usize> = (0..14).filter(|i| mask >> i & 1 == 1).collect();
            if verify_k_limited(&g, &x, k).unwrap().valid {
                prop_assert!(verify_k_limited(&g, &x, k + 1).unwrap().valid);
            }
        }

        #[test]
        fn violation_counts_exceed_limit(seed in any::<u64>(), mask in any::<u16>(), k in 1usize..4) {
            let g = gen_random_regular(10, 3, seed).unwrap();
            let x: Vec<usize> = (0..10).filter(|i| mask >> i & 1 == 1).collect();
            let r = verify_k_limited(&g, &x, k).unwrap();
            prop_assert_eq!(r.valid, r.violations.is_empty());
            for v in r.violations {
                let Violation::Vertex { count, limit, .. } = v else { unreachable!() };
                prop_assert!(count > limit);
            }
        }
    }
}
