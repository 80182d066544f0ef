//! Graph families: cycles, the named extremal graphs, seeded random regular
//! graphs, projective orthogonality graphs over GF(q), and random typed
//! multigraphs of maximum degree 3.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{GaloisField, ProjectivePoint};
use crate::graph::{EdgeKind, Graph, TypedMultigraph};

/// Projective graphs larger than this are refused.
pub const MAX_PROJECTIVE_VERTICES: u64 = 100_000;

const REGULAR_ATTEMPTS: usize = 1000;

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    /// 6-cycle plus its three long chords (K3,3).
    H6,
    Petersen,
    K4,
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h6" => Ok(NamedFamily::H6),
            "petersen" => Ok(NamedFamily::Petersen),
            "k4" => Ok(NamedFamily::K4),
            other => Err(Error::InvalidInput(format!(
                "unknown family `{other}` (expected h6, petersen or k4)"
            ))),
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedFamily::H6 => "h6",
            NamedFamily::Petersen => "petersen",
            NamedFamily::K4 => "k4",
        })
    }
}

pub fn gen_named(family: NamedFamily) -> Graph {
    let edges: Vec<(usize, usize)> = match family {
        NamedFamily::H6 => (0..6)
            .map(|i| (i, (i + 1) % 6))
            .chain((0..3).map(|i| (i, i + 3)))
            .collect(),
        NamedFamily::Petersen => (0..5)
            .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)])
            .collect(),
        NamedFamily::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap();
    Graph::from_edges(n, edges).expect("named families are simple")
}

/// Seeded simple `r`-regular graph on `n` vertices.
///
/// Points (r per vertex) are paired at random, rejecting any pair that would
/// form a loop or a repeated edge; when no admissible pair is left the
/// attempt restarts. Gives up after a fixed number of attempts.
pub fn gen_random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if (n * r) % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "n*r must be even (n = {n}, r = {r})"
        )));
    }
    if r >= n && !(n == 0 || r == 0) {
        return Err(Error::InvalidInput(format!(
            "need r < n (n = {n}, r = {r})"
        )));
    }
    let mut rng = rng_from_seed(seed);
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        points.shuffle(&mut rng);
        let mut g = Graph::new(n);
        while !points.is_empty() {
            let len = points.len();
            let mut paired = false;
            for _ in 0..32 {
                let i = rng.random_range(0..len);
                let j = rng.random_range(0..len);
                let (u, v) = (points[i], points[j]);
                if i != j && u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v)?;
                    let (hi, lo) = (i.max(j), i.min(j));
                    points.swap_remove(hi);
                    points.swap_remove(lo);
                    paired = true;
                    break;
                }
            }
            if paired {
                continue;
            }
            let admissible: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| points[i] != points[j] && !g.has_edge(points[i], points[j]))
                .collect();
            if admissible.is_empty() {
                continue 'attempt;
            }
            let (i, j) = admissible[rng.random_range(0..admissible.len())];
            g.add_edge(points[i], points[j])?;
            points.swap_remove(j);
            points.swap_remove(i);
        }
        return Ok(g);
    }
    Err(Error::Resource(format!(
        "no simple {r}-regular graph on {n} vertices after {REGULAR_ATTEMPTS} attempts"
    )))
}

/// Orthogonality graph on the points of projective `(k+1)`-space over GF(q):
/// distinct points are adjacent when their inner product vanishes.
/// Self-orthogonal points get no loop.
pub fn gen_projective(q: u32, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let field = GaloisField::new(q)?;
    let dim = k + 2;
    let n = projective_vertex_count(q, k)
        .filter(|&n| n <= MAX_PROJECTIVE_VERTICES)
        .ok_or_else(|| {
            Error::Resource(format!(
                "G(q={q}, k={k}) exceeds {MAX_PROJECTIVE_VERTICES} vertices"
            ))
        })?;
    let points = ProjectivePoint::enumerate(&field, dim);
    debug_assert_eq!(points.len() as u64, n);
    let mut g = Graph::new(points.len());
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate().skip(i + 1) {
            if field.dot(a.coords(), b.coords()) == 0 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// `(q^(k+2) - 1) / (q - 1)`, or `None` on overflow.
pub fn projective_vertex_count(q: u32, k: usize) -> Option<u64> {
    let q = q as u64;
    let top = q.checked_pow(u32::try_from(k + 2).ok()?)?;
    Some((top - 1) / (q - 1))
}

/// `(q^(k+1) - 1) / (q - 1)`: the number of points orthogonal to a given one,
/// counting the point itself when it is isotropic.
pub fn projective_degree(q: u32, k: usize) -> Option<u64> {
    projective_vertex_count(q, k - 1)
}

/// Random typed multigraph with every degree at most 3 and no component
/// that is a K4 of c-edges. A few c-edge gadgets (triangles, 4-cycles and
/// K4 minus an edge) are planted before random edges fill in, so the
/// reductions that hinge on c-edge structure get exercised.
pub fn random_typed_subcubic(n: usize, c_prob: f64, seed: u64) -> TypedMultigraph {
    let mut rng = rng_from_seed(seed);
    let mut tm = TypedMultigraph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let gadgets = rng.random_range(0..=n / 10);
    let mut free = order.into_iter();
    for _ in 0..gadgets {
        let vs: Vec<usize> = free.by_ref().take(4).collect();
        if vs.len() < 4 {
            break;
        }
        let pairs: &[(usize, usize)] = match rng.random_range(0..3) {
            0 => &[(0, 1), (1, 2), (0, 2)],
            1 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            _ => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
        };
        for &(a, b) in pairs {
            tm.add_edge(vs[a], vs[b], EdgeKind::C).unwrap();
        }
    }
    let tries = 2 * n;
    for _ in 0..tries {
        if n < 2 {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || tm.degree(u) >= 3 || tm.degree(v) >= 3 {
            continue;
        }
        let kind = if rng.random_bool(c_prob) {
            EdgeKind::C
        } else {
            EdgeKind::D
        };
        tm.add_edge(u, v, kind).unwrap();
    }
    break_all_c_k4(&mut tm);
    tm
}

/// Labels each edge of `g` as a c-edge with probability `c_prob`, then
/// breaks any all-c K4 component.
pub fn label_randomly(g: &Graph, c_prob: f64, seed: u64) -> TypedMultigraph {
    let mut rng = rng_from_seed(seed);
    let mut tm = TypedMultigraph::new(g.vertex_count());
    for (u, v) in g.edges() {
        let kind = if rng.random_bool(c_prob) {
            EdgeKind::C
        } else {
            EdgeKind::D
        };
        tm.add_edge(u, v, kind).unwrap();
    }
    break_all_c_k4(&mut tm);
    tm
}

/// Turns the lexicographically first edge of every all-c K4 component into
/// a d-edge.
fn break_all_c_k4(tm: &mut TypedMultigraph) {
    for comp in tm.all_c_k4_components() {
        let edges: Vec<_> = tm
            .edges()
            .into_iter()
            .filter(|(u, v, _)| comp.contains(u) && comp.contains(v))
            .collect();
        let mut rebuilt = TypedMultigraph::new(tm.vertex_count());
        let (a, b, _) = edges[0];
        for (u, v, kind) in tm.edges() {
            let kind = if (u, v) == (a, b) { EdgeKind::D } else { kind };
            rebuilt.add_edge(u, v, kind).unwrap();
        }
        *tm = rebuilt;
    }
}
