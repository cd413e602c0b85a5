//! Small finite fields carried as explicit tables.
//!
//! An element of `GF(p^k)` is coded by the base-`p` digits of its
//! coefficients in a fixed irreducible polynomial basis, so `0` is zero and
//! `1` is one.

use crate::algebra::FiniteRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// The bundled fields and the monic irreducible polynomials defining them
/// (low coefficients first, leading 1 omitted).
const BUNDLED: &[(&str, u32, &[u32])] = &[
    ("GF2", 2, &[]),
    ("GF3", 3, &[]),
    ("GF4", 2, &[1, 1]),
    ("GF8", 2, &[1, 1, 0]),
    ("GF9", 3, &[1, 0]),
];

impl FiniteField {
    pub fn bundled_names() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(n, _, _)| *n)
    }

    pub fn by_name(name: &str) -> Result<Self> {
        let (_, p, poly) = BUNDLED
            .iter()
            .find(|(n, _, _)| n.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownField(name.to_string()))?;
        Ok(Self::build(*p, poly))
    }

    pub fn with_order(q: usize) -> Result<Self> {
        Self::by_name(&format!("GF{q}"))
    }

    /// An empty polynomial gives the prime field.
    fn build(p: u32, poly: &[u32]) -> Self {
        let k = poly.len().max(1);
        let q = (p as usize).pow(k as u32);
        let digits = |x: usize| -> Vec<u32> {
            let mut x = x;
            (0..k)
                .map(|_| {
                    let d = (x % p as usize) as u32;
                    x /= p as usize;
                    d
                })
                .collect()
        };
        let code = |v: &[u32]| v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = code(&sum) as u8;
                if k == 1 {
                    mul[a * q + b] = ((a * b) % p as usize) as u8;
                    continue;
                }
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k = -(poly[0] + poly[1] x + …)
                for top in (k..2 * k - 1).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (i, &pc) in poly.iter().enumerate() {
                        let idx = top - k + i;
                        prod[idx] = (prod[idx] + (p - pc % p) % p * c) % p;
                    }
                }
                mul[a * q + b] = code(&prod[..k]) as u8;
            }
        }
        Self { p, degree: k as u32, order: q, add, mul }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> String {
        format!("GF{}", self.order)
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| FiniteRing::mul(self, acc, a))
    }

    /// The subfield of order `q`, if any: the roots of `x^q - x`.
    pub fn subfield(&self, q: usize) -> Result<Vec<usize>> {
        let mut k = 0;
        let mut s = 1;
        while s < q {
            s *= self.p as usize;
            k += 1;
        }
        if s != q || k == 0 || !self.degree.is_multiple_of(k) {
            return Err(Error::NotASubfield(format!("GF{q} in {}", self.name())));
        }
        Ok((0..self.order).filter(|&x| self.pow(x, q) == x).collect())
    }

    /// Whether `set` contains 0 and 1 and is closed under the operations and
    /// inverses.
    pub fn is_subfield(&self, set: &[usize]) -> bool {
        let has = |x: usize| set.contains(&x);
        if !has(0) || !has(1) {
            return false;
        }
        set.iter().all(|&a| {
            set.iter().all(|&b| has(FiniteRing::add(self, a, b)) && has(FiniteRing::mul(self, a, b)))
                && (a == 0 || set.iter().any(|&b| FiniteRing::mul(self, a, b) == 1))
        })
    }
}

impl FiniteRing for FiniteField {
    fn size(&self) -> usize {
        self.order
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    fn one(&self) -> Option<usize> {
        Some(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_field;

    #[test]
    fn bundled_fields_satisfy_axioms() {
        for name in FiniteField::bundled_names() {
            let f = FiniteField::by_name(name).unwrap();
            assert!(is_field(&f), "{name}");
            let q = f.order();
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn subfields() {
        let f4 = FiniteField::by_name("GF4").unwrap();
        let gf2 = f4.subfield(2).unwrap();
        assert_eq!(gf2, vec![0, 1]);
        assert!(f4.is_subfield(&gf2));
        assert!(!f4.is_subfield(&[0, 2]));
        assert!(f4.subfield(8).is_err());
        let f9 = FiniteField::by_name("GF9").unwrap();
        assert_eq!(f9.subfield(3).unwrap(), vec![0, 1, 2]);
        let f8 = FiniteField::by_name("GF8").unwrap();
        assert!(f8.subfield(4).is_err());
        assert!(FiniteField::by_name("GF5").is_err());
    }
}
