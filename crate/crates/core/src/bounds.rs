//! Closed-form bounds on `L_k` (and on double domination) from the graph
//! parameters alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Lower bound on `L_k`.
    Lower,
    /// Upper bound on `L_k`.
    Upper,
    /// The exact value of `L_k`.
    Exact,
    /// A weaker known lower bound, listed for comparison only.
    Reference,
    /// Upper bound on the 2-tuple domination number.
    DominationUpper,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
            BoundKind::Reference => "reference",
            BoundKind::DominationUpper => "domination-upper",
        })
    }
}

/// Non-negative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        let g = gcd(num, den).max(1);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: f64,
    pub exact: Option<Ratio>,
    /// Set when the value says nothing beyond the trivial bound `n`.
    pub not_useful: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundSheet {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub k: usize,
    /// The dual tuple-domination parameter `r + 1 - k` on `r`-regular inputs.
    pub l: Option<usize>,
    pub entries: Vec<Bound>,
}

impl BoundSheet {
    pub fn get(&self, name: &str) -> Option<&Bound> {
        self.entries.iter().find(|b| b.name == name)
    }

    /// Every value that lower-bounds `L_k`, including an exact value.
    pub fn lower_bounds(&self) -> impl Iterator<Item = &Bound> {
        self.entries.iter().filter(|b| {
            matches!(
                b.kind,
                BoundKind::Lower | BoundKind::Exact | BoundKind::Reference
            )
        })
    }

    /// The double-counting upper bound `kn / (δ + 1)`.
    pub fn upper_bound(&self) -> f64 {
        self.get("double-counting")
            .map_or(f64::INFINITY, |b| b.value)
    }
}

impl fmt::Display for BoundSheet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "maxdeg: {}", self.max_degree)?;
        writeln!(f, "mindeg: {}", self.min_degree)?;
        writeln!(f, "k: {}", self.k)?;
        if let Some(l) = self.l {
            writeln!(f, "l: {l}")?;
        }
        for b in &self.entries {
            write!(f, "{} {} {:.12}", b.kind, b.name, b.value)?;
            if let Some(r) = b.exact {
                write!(f, " = {r}")?;
            }
            if b.not_useful {
                f.write_str(" not-useful")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Exact binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

fn ln_binomial(n: u64, k: u64) -> f64 {
    match binomial(n, k) {
        Some(c) => (c as f64).ln(),
        None => (0..k)
            .map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln())
            .sum(),
    }
}

/// `n k / ((k+1) (C(Δ,k)(Δ+1))^{1/k})`, for `1 <= k <= Δ`.
pub fn random_sampling_bound(n: usize, max_degree: usize, k: usize) -> f64 {
    let (d, kf) = (max_degree as u64, k as f64);
    let ln_base = ln_binomial(d, k as u64) + ((d + 1) as f64).ln();
    n as f64 * kf / (kf + 1.0) * (-ln_base / kf).exp()
}

/// `n k / (e Δ^{1 + 1/k})`.
pub fn power_bound(n: usize, max_degree: usize, k: usize) -> f64 {
    let kf = k as f64;
    n as f64 * kf / (std::f64::consts::E * (max_degree as f64).powf(1.0 + 1.0 / kf))
}

fn rational(name: &'static str, kind: BoundKind, num: u128, den: u128) -> Bound {
    let r = Ratio::new(num, den);
    Bound {
        name,
        kind,
        value: r.to_f64(),
        exact: Some(r),
        not_useful: false,
    }
}

fn real(name: &'static str, kind: BoundKind, value: f64) -> Bound {
    Bound {
        name,
        kind,
        value,
        exact: None,
        not_useful: false,
    }
}

pub fn bound_sheet(n: usize, max_degree: usize, min_degree: usize, k: usize) -> Result<BoundSheet> {
    let average = (max_degree == min_degree).then_some(max_degree as f64);
    bound_sheet_with_average(n, max_degree, min_degree, k, average)
}

/// Bound sheet for a concrete graph, using its true average degree.
pub fn bound_sheet_for(g: &Graph, k: usize) -> Result<BoundSheet> {
    let s = g.degree_stats();
    let average = (s.vertex_count > 0).then(|| 2.0 * s.edge_count as f64 / s.vertex_count as f64);
    bound_sheet_with_average(s.vertex_count, s.max_degree, s.min_degree, k, average)
}

pub fn bound_sheet_with_average(
    n: usize,
    max_degree: usize,
    min_degree: usize,
    k: usize,
    average_degree: Option<f64>,
) -> Result<BoundSheet> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if min_degree > max_degree {
        return Err(Error::InvalidInput(format!(
            "minimum degree {min_degree} exceeds maximum degree {max_degree}"
        )));
    }
    let (nn, dd) = (n as u128, max_degree as u128);
    let regular = max_degree == min_degree;
    let mut entries = Vec::new();
    if k == 1 {
        entries.push(rational(
            "greedy-distance",
            BoundKind::Lower,
            nn,
            dd * dd + 1,
        ));
    }
    if k <= max_degree {
        let sampled = random_sampling_bound(n, max_degree, k);
        entries.push(real("random-sampling", BoundKind::Lower, sampled));
        // (k+1) C(Δ+1, k+1) = (Δ+1) C(Δ, k), so this form coincides.
        entries.push(real("binomial-form", BoundKind::Lower, sampled));
        entries.push(real(
            "power-form",
            BoundKind::Lower,
            power_bound(n, max_degree, k),
        ));
    } else {
        entries.push(rational("all-vertices", BoundKind::Exact, nn, 1));
    }
    if max_degree <= 3 && k == 2 {
        entries.push(rational("subcubic-third", BoundKind::Lower, nn, 3));
        entries.push(rational("subcubic-quarter", BoundKind::Reference, nn, 4));
    }
    if regular && max_degree == 3 && k == 3 {
        entries.push(rational(
            "cubic-domination-dual",
            BoundKind::Lower,
            9 * nn,
            14,
        ));
    }
    entries.push(rational(
        "double-counting",
        BoundKind::Upper,
        k as u128 * nn,
        min_degree as u128 + 1,
    ));
    if regular && max_degree == 3 {
        entries.push(rational(
            "double-domination-cubic",
            BoundKind::DominationUpper,
            2 * nn,
            3,
        ));
    }
    if min_degree >= 1 {
        let delta = min_degree as f64;
        let mut push = |name, d: f64| {
            let value = ((1.0 + d).ln() + delta.ln() + 1.0) * n as f64 / delta;
            let mut b = real(name, BoundKind::DominationUpper, value);
            b.not_useful = value >= n as f64;
            entries.push(b);
        };
        if let Some(d) = average_degree {
            push("double-domination-average", d);
        }
        push("double-domination-minimum", delta);
    }
    let l = (regular && k <= max_degree + 1).then(|| max_degree + 1 - k);
    Ok(BoundSheet {
        n,
        max_degree,
        min_degree,
        k,
        l,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn value(s: &BoundSheet, name: &str) -> f64 {
        s.get(name)
            .unwrap_or_else(|| panic!("missing {name}"))
            .value
    }

    #[test]
    fn cubic_k2_values() {
        let s = bound_sheet(60, 3, 3, 2).unwrap();
        let expect = 60.0 / (3.0 * 3f64.sqrt());
        assert!((value(&s, "random-sampling") - expect).abs() < 1e-9);
        assert!(
            (value(&s, "power-form") - 120.0 / (std::f64::consts::E * 3f64.powf(1.5))).abs() < 1e-9
        );
        assert!((value(&s, "power-form") / 60.0 - 0.1416).abs() < 1e-4);
        assert_eq!(
            s.get("double-counting").unwrap().exact,
            Some(Ratio::new(30, 1))
        );
        assert_eq!(value(&s, "subcubic-third"), 20.0);
        assert_eq!(s.l, Some(2));
    }

    #[test]
    fn greedy_for_k1() {
        let s = bound_sheet(100, 3, 3, 1).unwrap();
        assert_eq!(
            s.get("greedy-distance").unwrap().exact,
            Some(Ratio::new(10, 1))
        );
        assert!(bound_sheet(100, 3, 3, 2)
            .unwrap()
            .get("greedy-distance")
            .is_none());
    }

    #[test]
    fn exact_when_k_exceeds_degree() {
        let s = bound_sheet(12, 2, 2, 3).unwrap();
        assert_eq!(value(&s, "all-vertices"), 12.0);
        assert!(s.get("random-sampling").is_none());
    }

    #[test]
    fn double_domination_flags() {
        let s = bound_sheet(30, 3, 3, 2).unwrap();
        assert!(s.get("double-domination-average").unwrap().not_useful);
        assert!(s.get("double-domination-minimum").unwrap().not_useful);
        assert_eq!(value(&s, "double-domination-cubic"), 20.0);
        let dense = bound_sheet(1000, 100, 100, 2).unwrap();
        assert!(!dense.get("double-domination-minimum").unwrap().not_useful);
    }

    #[test]
    fn cubic_k3_dual() {
        let s = bound_sheet(14, 3, 3, 3).unwrap();
        assert_eq!(value(&s, "cubic-domination-dual"), 9.0);
        assert_eq!(s.l, Some(1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bound_sheet(5, 3, 3, 0).is_err());
        assert!(bound_sheet(5, 2, 3, 1).is_err());
    }

    #[test]
    fn binomials_are_exact() {
        assert_eq!(binomial(10, 3), Some(120));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(
            binomial(100, 50),
            Some(100_891_344_545_564_193_334_812_497_256)
        );
        assert_eq!(binomial(1000, 500), None);
        assert!((ln_binomial(1000, 500) - 689.4672).abs() < 1e-3);
    }

    #[test]
    fn display_lines() {
        let text = bound_sheet(10, 3, 3, 1).unwrap().to_string();
        assert!(text.contains("lower greedy-distance 1.000000000000 = 1/1"));
        assert!(text
            .lines()
            .any(|l| l.starts_with("upper double-counting 2.5")));
    }

    proptest! {
        #[test]
        fn regular_ordering(r in 1usize..60, k in 1usize..60, n in 1usize..10_000) {
            prop_assume!(k <= r);
            let s = bound_sheet(n, r, r, k).unwrap();
            let sampled = value(&s, "random-sampling");
            prop_assert!(sampled + 1e-9 >= value(&s, "power-form"));
            prop_assert!(s.upper_bound() + 1e-9 >= sampled);
            for b in s.lower_bounds() {
                prop_assert!(b.value <= s.upper_bound() + 1e-9, "{} {}", b.name, b.value);
            }
        }
    }
}
