//! Boolean powers `P^B` of a finite group by a finite Boolean ring.
//!
//! An element is a function from the atoms of `B` to `P`. Its normal form
//! lists each nonidentity value `g` once, with the (nonzero, pairwise
//! disjoint) set of atoms where it is taken, sorted by `g`. All arithmetic
//! goes through atom-wise evaluation.

mod filtered;
mod materialize;

use serde::Serialize;

use crate::boolean::FiniteBooleanRing;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use filtered::{filtered_power, verify_ring_ideal_correspondence, FilteredPower, FilteredPowerSpec, RingCorrespondenceReport};
pub use materialize::{CorrespondenceReport, MaterializedPower, QuotientIso};

/// A Boolean power element in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BPElement {
    atoms: usize,
    base_order: usize,
    terms: Vec<(usize, u32)>,
}

impl BPElement {
    /// `(g, support mask)` pairs, sorted by `g`.
    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value at each atom.
    pub fn evaluate(&self) -> Vec<usize> {
        let mut values = vec![0; self.atoms];
        for &(g, support) in &self.terms {
            for (a, v) in values.iter_mut().enumerate() {
                if support >> a & 1 == 1 {
                    *v = g;
                }
            }
        }
        values
    }

    /// Support of the element: atoms with a nonidentity value.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, &(_, s)| acc | s)
    }
}

/// `P^B` as a calculus on normal forms.
#[derive(Debug, Clone, Copy)]
pub struct BooleanPowerGroup<'a> {
    pub base: &'a FiniteGroup,
    pub ring: FiniteBooleanRing,
}

impl<'a> BooleanPowerGroup<'a> {
    pub fn new(base: &'a FiniteGroup, ring: FiniteBooleanRing) -> Self {
        Self { base, ring }
    }

    pub fn identity(&self) -> BPElement {
        BPElement { atoms: self.ring.atom_count(), base_order: self.base.order(), terms: Vec::new() }
    }

    /// `g_A`: value `g` on `A`, identity elsewhere.
    pub fn single(&self, g: usize, support: u32) -> Result<BPElement> {
        self.normalize(&[(g, support)])
    }

    /// Regroups an atom-value list by value.
    pub fn from_values(&self, values: &[usize]) -> BPElement {
        debug_assert_eq!(values.len(), self.ring.atom_count());
        let mut terms: Vec<(usize, u32)> = Vec::new();
        for (a, &v) in values.iter().enumerate() {
            if v == 0 {
                continue;
            }
            match terms.iter_mut().find(|(g, _)| *g == v) {
                Some((_, s)) => *s |= 1 << a,
                None => terms.push((v, 1 << a)),
            }
        }
        terms.sort_unstable();
        BPElement { atoms: self.ring.atom_count(), base_order: self.base.order(), terms }
    }

    /// Normal form of the product `(g₁)_{A₁} ⋯ (gₙ)_{Aₙ}` of arbitrary terms,
    /// overlaps allowed: each atom gets the product, in list order, of the
    /// `gᵢ` whose support contains it.
    pub fn normalize(&self, raw: &[(usize, u32)]) -> Result<BPElement> {
        let mut values = vec![0usize; self.ring.atom_count()];
        for &(g, support) in raw {
            if g >= self.base.order() {
                return Err(Error::Invalid(format!("element {g} not in the base group")));
            }
            if !self.ring.contains(support) {
                return Err(Error::Invalid(format!("support {support:#b} not in the ring")));
            }
            for (a, v) in values.iter_mut().enumerate() {
                if support >> a & 1 == 1 {
                    *v = self.base.mul(*v, g);
                }
            }
        }
        Ok(self.from_values(&values))
    }

    fn check(&self, x: &BPElement) -> Result<()> {
        if x.atoms != self.ring.atom_count() || x.base_order != self.base.order() {
            return Err(Error::Mismatch(format!(
                "element of a power with {} atoms over order {}, expected {} atoms over order {}",
                x.atoms,
                x.base_order,
                self.ring.atom_count(),
                self.base.order()
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, x: &BPElement, y: &BPElement) -> Result<BPElement> {
        self.check(x)?;
        self.check(y)?;
        let vx = x.evaluate();
        let vy = y.evaluate();
        let values: Vec<usize> = vx.iter().zip(&vy).map(|(&a, &b)| self.base.mul(a, b)).collect();
        Ok(self.from_values(&values))
    }

    pub fn inverse(&self, x: &BPElement) -> Result<BPElement> {
        self.check(x)?;
        let values: Vec<usize> = x.evaluate().iter().map(|&a| self.base.inv(a)).collect();
        Ok(self.from_values(&values))
    }

    /// `|P|^atoms`, when it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.base.order() as u128).checked_pow(self.ring.atom_count() as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Caps::default()).unwrap()
    }

    #[test]
    fn normal_forms() {
        let p = s3();
        let b = FiniteBooleanRing::new(3).unwrap();
        let bp = BooleanPowerGroup::new(&p, b);
        assert!(bp.normalize(&[]).unwrap().is_identity());
        let g = 2;
        let gi = p.inv(g);
        assert!(bp.normalize(&[(g, 0b11), (gi, 0b11)]).unwrap().is_identity());
        // (g, {0,1}) (h, {1,2}): atom 0 → g, atom 1 → gh, atom 2 → h
        let (g, h) = (1, 2);
        let x = bp.normalize(&[(g, 0b011), (h, 0b110)]).unwrap();
        assert_eq!(x.evaluate(), vec![g, p.mul(g, h), h]);
        let mut expected = vec![(g, 0b001), (p.mul(g, h), 0b010), (h, 0b100)];
        expected.sort();
        assert_eq!(x.terms(), expected.as_slice());
    }

    #[test]
    fn multiply_and_mismatch() {
        let p = s3();
        let bp = BooleanPowerGroup::new(&p, FiniteBooleanRing::new(2).unwrap());
        let x = bp.single(1, 0b01).unwrap();
        assert_eq!(bp.multiply(&x, &bp.identity()).unwrap(), x);
        assert!(bp.multiply(&x, &x).unwrap().is_identity());
        let other = BooleanPowerGroup::new(&p, FiniteBooleanRing::new(3).unwrap());
        assert!(matches!(bp.multiply(&x, &other.identity()), Err(Error::Mismatch(_))));
        assert!(bp.normalize(&[(9, 1)]).is_err());
        assert!(bp.normalize(&[(1, 0b100)]).is_err());
    }
}
