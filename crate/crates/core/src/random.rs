//! Randomized k-limited packings.
//!
//! [`sample_and_repair`] keeps each vertex independently and then trims
//! overfull closed neighbourhoods. [`lll_resample`] is a Moser-Tardos style
//! resampler for the events `B_v = {|N[v] ∩ X| >= k + 1}`: while some event
//! holds, the closed neighbourhood of the lowest such `v` is redrawn. It is
//! an algorithmic stand-in for the Local Lemma existence argument, not a
//! transcription of it.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::generators::rng_from_seed;
use crate::graph::Graph;
use crate::io::format_vertex_set;
use crate::verify::Packing;

pub const DEFAULT_CLAMP: f64 = 0.5;
pub const DEFAULT_MAX_ROUNDS: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LllParameters {
    pub epsilon1: f64,
    pub epsilon2: f64,
    pub p: f64,
    /// Set when `epsilon1` or `p` had to be forced into range.
    pub clamped: bool,
}

/// `ε₁ = √(5 / ln ln Δ)`, `ε₂ = 3 / √(kΔ)`, `p = (1 - ε₁)(k + 1)/(Δ + 1)`.
///
/// When `ε₁` is undefined (`Δ <= e`) or at least 1, it is replaced by
/// `clamp`; `p` is capped at 1. Either adjustment sets `clamped`.
pub fn lll_parameters(max_degree: usize, k: usize, clamp: f64) -> Result<LllParameters> {
    if max_degree < 2 || k == 0 {
        return Err(Error::InvalidInput(format!(
            "need maximum degree >= 2 and k >= 1, got {max_degree} and {k}"
        )));
    }
    if !(clamp > 0.0 && clamp < 1.0) {
        return Err(Error::InvalidInput(format!(
            "clamp {clamp} is not in (0, 1)"
        )));
    }
    let d = max_degree as f64;
    let lnln = d.ln().ln();
    let raw = (5.0 / lnln).sqrt();
    let mut clamped = false;
    let epsilon1 = if lnln > 0.0 && raw < 1.0 {
        raw
    } else {
        clamped = true;
        clamp
    };
    let mut p = (1.0 - epsilon1) * (k as f64 + 1.0) / (d + 1.0);
    if p > 1.0 {
        p = 1.0;
        clamped = true;
    }
    Ok(LllParameters {
        epsilon1,
        epsilon2: 3.0 / (k as f64 * d).sqrt(),
        p,
        clamped,
    })
}

/// Parameters used when none are given: those of `max(Δ, 2)` with the
/// default clamp.
pub fn auto_lll_parameters(g: &Graph, k: usize) -> Result<LllParameters> {
    lll_parameters(g.max_degree().max(2), k, DEFAULT_CLAMP)
}

/// The sampling rate maximizing `np - n C(Δ+1, k+1) p^{k+1}`, the expected
/// size after removing one vertex per excess member:
/// `(C(Δ, k)(Δ + 1))^{-1/k}`, or 1 when `k > Δ`.
pub fn auto_sampling_rate(max_degree: usize, k: usize) -> f64 {
    if k > max_degree {
        return 1.0;
    }
    let d = max_degree as u64;
    let ln_c = match binomial(d, k as u64) {
        Some(c) => (c as f64).ln(),
        None => (0..k as u64)
            .map(|i| ((d - i) as f64).ln() - ((i + 1) as f64).ln())
            .sum(),
    };
    (-(ln_c + ((d + 1) as f64).ln()) / k as f64).exp().min(1.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomRunReport {
    pub packing: Packing,
    /// Resampling rounds (always 0 for sample-and-repair).
    pub rounds: u64,
    /// Vertices dropped by the repair pass.
    pub repairs: usize,
    pub seed: u64,
    pub p: f64,
    pub clamped: bool,
    /// False when the resampler hit its round limit; the packing then comes
    /// from repairing the last sample.
    pub converged: bool,
    /// Whether `|X| >= (1 - ε₂) n p` (resampler only).
    pub size_target_met: Option<bool>,
}

impl fmt::Display for RandomRunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size: {}", self.packing.len())?;
        writeln!(f, "rounds: {}", self.rounds)?;
        writeln!(f, "repairs: {}", self.repairs)?;
        writeln!(f, "clamped: {}", self.clamped)?;
        writeln!(f, "converged: {}", self.converged)?;
        writeln!(f, "p: {:.12}", self.p)?;
        writeln!(f, "seed: {}", self.seed)?;
        if let Some(met) = self.size_target_met {
            writeln!(f, "size-target-met: {met}")?;
        }
        writeln!(f, "witness: {}", format_vertex_set(self.packing.vertices()))
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "probability {p} is not in [0, 1]"
        )))
    }
}

/// Drops, for each vertex in index order, the largest-index members of its
/// overfull closed neighbourhood. Returns the number removed.
fn repair(g: &Graph, k: usize, member: &mut [bool]) -> usize {
    let mut removed = 0;
    for v in g.vertices() {
        let mut inside: Vec<usize> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .filter(|&w| member[w])
            .collect();
        if inside.len() > k {
            inside.sort_unstable();
            for &w in &inside[k..] {
                member[w] = false;
                removed += 1;
            }
        }
    }
    removed
}

fn collect(member: &[bool]) -> Vec<usize> {
    member
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m)
        .map(|(v, _)| v)
        .collect()
}

/// Samples each vertex with probability `p` (auto: [`auto_sampling_rate`])
/// and repairs the result.
pub fn sample_and_repair(
    g: &Graph,
    k: usize,
    p: Option<f64>,
    seed: u64,
) -> Result<RandomRunReport> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let p = p.unwrap_or_else(|| auto_sampling_rate(g.max_degree(), k));
    check_probability(p)?;
    let mut rng = rng_from_seed(seed);
    let mut member: Vec<bool> = g.vertices().map(|_| rng.random_bool(p)).collect();
    let repairs = repair(g, k, &mut member);
    Ok(RandomRunReport {
        packing: Packing::new(k, collect(&member)),
        rounds: 0,
        repairs,
        seed,
        p,
        clamped: false,
        converged: true,
        size_target_met: None,
    })
}

/// Incremental state of the resampler, exposed so its locality can be
/// tested one round at a time.
pub struct Resampler<'g> {
    g: &'g Graph,
    k: usize,
    p: f64,
    rng: ChaCha8Rng,
    member: Vec<bool>,
    load: Vec<usize>,
    bad: BTreeSet<usize>,
    rounds: u64,
}

impl<'g> Resampler<'g> {
    pub fn new(g: &'g Graph, k: usize, p: f64, seed: u64) -> Result<Self> {
        check_probability(p)?;
        let mut rng = rng_from_seed(seed);
        let member: Vec<bool> = g.vertices().map(|_| rng.random_bool(p)).collect();
        let load: Vec<usize> = g
            .vertices()
            .map(|v| usize::from(member[v]) + g.neighbors(v).iter().filter(|&&w| member[w]).count())
            .collect();
        let bad = g.vertices().filter(|&v| load[v] > k).collect();
        Ok(Self {
            g,
            k,
            p,
            rng,
            member,
            load,
            bad,
            rounds: 0,
        })
    }

    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    pub fn members(&self) -> Vec<usize> {
        collect(&self.member)
    }

    /// `|N[v] ∩ X|` for the current sample.
    pub fn load(&self, v: usize) -> usize {
        self.load[v]
    }

    pub fn is_bad(&self, v: usize) -> bool {
        self.bad.contains(&v)
    }

    pub fn bad_events(&self) -> impl Iterator<Item = usize> + '_ {
        self.bad.iter().copied()
    }

    fn set(&mut self, w: usize, value: bool) {
        if self.member[w] == value {
            return;
        }
        self.member[w] = value;
        for x in std::iter::once(w).chain(self.g.neighbors(w).iter().copied()) {
            if value {
                self.load[x] += 1;
            } else {
                self.load[x] -= 1;
            }
            if self.load[x] > self.k {
                self.bad.insert(x);
            } else {
                self.bad.remove(&x);
            }
        }
    }

    /// Redraws `N[v]` for the lowest bad `v` and returns it, or `None` when
    /// no event holds.
    pub fn step(&mut self) -> Option<usize> {
        let v = *self.bad.iter().next()?;
        let mut hood: Vec<usize> = std::iter::once(v)
            .chain(self.g.neighbors(v).iter().copied())
            .collect();
        hood.sort_unstable();
        for w in hood {
            let value = self.rng.random_bool(self.p);
            self.set(w, value);
        }
        self.rounds += 1;
        Some(v)
    }
}

pub fn lll_resample(
    g: &Graph,
    k: usize,
    params: Option<&LllParameters>,
    seed: u64,
    max_rounds: u64,
) -> Result<RandomRunReport> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if max_rounds == 0 {
        return Err(Error::InvalidInput("max_rounds must be at least 1".into()));
    }
    let params = match params {
        Some(p) => *p,
        None => auto_lll_parameters(g, k)?,
    };
    let mut state = Resampler::new(g, k, params.p, seed)?;
    while state.rounds < max_rounds && state.step().is_some() {}
    let converged = state.bad.is_empty();
    let mut member = state.member;
    let repairs = if converged {
        0
    } else {
        repair(g, k, &mut member)
    };
    let vertices = collect(&member);
    let target = (1.0 - params.epsilon2) * g.vertex_count() as f64 * params.p;
    Ok(RandomRunReport {
        size_target_met: Some(vertices.len() as f64 >= target),
        packing: Packing::new(k, vertices),
        rounds: state.rounds,
        repairs,
        seed,
        p: params.p,
        clamped: params.clamped,
        converged,
    })
}
