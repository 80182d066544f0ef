//! Small finite fields GF(q) and points of projective space over them.
//!
//! Prime `q` uses modular arithmetic. The prime powers 4, 8 and 9 use
//! tables built from the irreducible polynomials x²+x+1, x³+x+1 (over
//! GF(2)) and x²+1 (over GF(3)). An element of GF(p^m) is encoded as the
//! base-p number whose digits are its polynomial coefficients, lowest degree
//! first.

use crate::error::{Error, Result};

/// Prime powers with built-in tables.
pub const SUPPORTED_PRIME_POWERS: [u32; 3] = [4, 8, 9];

/// Largest prime accepted for `q`.
pub const MAX_PRIME: u32 = 1 << 15;

/// Element of a [`GaloisField`], as its encoded value in `0..q`.
pub type FieldElement = u32;

#[derive(Clone, Debug)]
pub struct GaloisField {
    q: u32,
    kind: FieldKind,
}

#[derive(Clone, Debug)]
enum FieldKind {
    Prime,
    Table { add: Vec<u32>, mul: Vec<u32> },
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q) && q <= MAX_PRIME {
            return Ok(Self {
                q,
                kind: FieldKind::Prime,
            });
        }
        let (p, modulus): (u32, &[u32]) = match q {
            // Monic modulus coefficients, lowest degree first.
            4 => (2, &[1, 1, 1]),
            8 => (2, &[1, 1, 0, 1]),
            9 => (3, &[1, 0, 1]),
            _ => {
                return Err(Error::InvalidInput(format!(
                "unsupported field size q = {q}; use a prime up to {MAX_PRIME} or one of 4, 8, 9"
            )))
            }
        };
        Ok(Self::extension(p, modulus))
    }

    fn extension(p: u32, modulus: &[u32]) -> Self {
        let m = modulus.len() - 1;
        let q = p.pow(m as u32);
        let digits = |mut x: u32| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[u32]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);
        let mut add = vec![0; (q * q) as usize];
        let mut mul = vec![0; (q * q) as usize];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                // Schoolbook product, then reduce by the monic modulus.
                let mut prod = vec![0u32; 2 * m - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (m..prod.len()).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, &mc) in modulus.iter().enumerate() {
                            let idx = deg - m + i;
                            prod[idx] = (prod[idx] + (p - c) * mc) % p;
                        }
                    }
                }
                let idx = (a * q + b) as usize;
                add[idx] = encode(&sum);
                mul[idx] = encode(&prod[..m]);
            }
        }
        Self {
            q,
            kind: FieldKind::Table { add, mul },
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.kind {
            FieldKind::Prime => (a + b) % self.q,
            FieldKind::Table { add, .. } => add[(a * self.q + b) as usize],
        }
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.kind {
            FieldKind::Prime => ((a as u64 * b as u64) % self.q as u64) as u32,
            FieldKind::Table { mul, .. } => mul[(a * self.q + b) as usize],
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != 0).then(|| (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap())
    }

    /// Standard bilinear form `Σ uᵢ wᵢ`.
    pub fn dot(&self, u: &[FieldElement], w: &[FieldElement]) -> FieldElement {
        u.iter()
            .zip(w)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

/// Canonical representative of a point of projective space: the first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    pub fn normalize(field: &GaloisField, v: &[FieldElement]) -> Result<Self> {
        let lead = v.iter().copied().find(|&x| x != 0).ok_or_else(|| {
            Error::InvalidInput("the zero vector is not a projective point".into())
        })?;
        let s = field.inv(lead).unwrap();
        Ok(Self {
            coords: v.iter().map(|&x| field.mul(s, x)).collect(),
        })
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// All points of the projective space of dimension `dim - 1`, i.e. the
    /// normalized vectors of `GF(q)^dim`, in lexicographic order.
    pub fn enumerate(field: &GaloisField, dim: usize) -> Vec<Self> {
        let q = field.order();
        let mut out = Vec::new();
        // The leading 1 sits at position `lead`; zeros before, anything after.
        for lead in 0..dim {
            let tail = dim - lead - 1;
            let count = (q as u64).pow(tail as u32);
            for idx in 0..count {
                let mut coords = vec![0; dim];
                coords[lead] = 1;
                let mut x = idx;
                for pos in (lead + 1..dim).rev() {
                    coords[pos] = (x % q as u64) as u32;
                    x /= q as u64;
                }
                out.push(Self { coords });
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_for_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                assert!((0..q).any(|b| f.add(a, b) == 0));
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        for q in [0, 1, 6, 10, 16, 25] {
            assert!(GaloisField::new(q).is_err(), "q={q}");
        }
    }

    #[test]
    fn point_counts_match_projective_space() {
        for q in [2u32, 3, 4, 5] {
            let f = GaloisField::new(q).unwrap();
            for dim in 1..=4u32 {
                let pts = ProjectivePoint::enumerate(&f, dim as usize);
                assert_eq!(pts.len() as u32, (q.pow(dim) - 1) / (q - 1));
            }
        }
    }

    #[test]
    fn normalization_identifies_scalar_multiples() {
        let f = GaloisField::new(5).unwrap();
        let a = ProjectivePoint::normalize(&f, &[0, 2, 4]).unwrap();
        let b = ProjectivePoint::normalize(&f, &[0, 3, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords(), &[0, 1, 2]);
        assert!(ProjectivePoint::normalize(&f, &[0, 0]).is_err());
    }
}
