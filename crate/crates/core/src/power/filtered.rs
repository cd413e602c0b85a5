use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::algebra::FiniteRing;
use crate::boolean::{AugmentedBooleanAlgebra, BooleanIdeal, FiniteBooleanRing};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FiniteField;

/// A field, an augmented Boolean algebra over the atoms, and for each of its
/// labels the subfield `τ(C)` (as a list of field elements).
#[derive(Debug, Clone)]
pub struct FilteredPowerSpec {
    pub field: FiniteField,
    pub algebra: AugmentedBooleanAlgebra,
    pub tau: Vec<Vec<usize>>,
}

/// Functions `f` from the atoms to `F` with `f(C) ⊆ τ(C)` for every closed
/// set `C`, as a ring. Each atom ranges over the intersection of the `τ(C)`
/// with `C` containing it, so elements are coded in mixed radix over those
/// per-atom value lists, atom 0 least significant.
#[derive(Debug, Clone)]
pub struct FilteredPower {
    field: FiniteField,
    allowed: Vec<Vec<usize>>,
    // position of each field element in `allowed[a]`, usize::MAX if absent
    position: Vec<Vec<usize>>,
    size: usize,
}

impl FilteredPower {
    /// The full power `F^n`.
    pub fn full(field: &FiniteField, atoms: usize, caps: &Caps) -> Result<Self> {
        Self::from_allowed(field, vec![(0..field.order()).collect(); atoms], caps)
    }

    fn from_allowed(field: &FiniteField, allowed: Vec<Vec<usize>>, caps: &Caps) -> Result<Self> {
        let full = (field.order() as u128).checked_pow(allowed.len() as u32).unwrap_or(u128::MAX);
        if full > caps.ring_size as u128 {
            return Err(Error::CapExceeded { what: "filtered power", size: full.min(usize::MAX as u128) as usize, cap: caps.ring_size });
        }
        let position = allowed
            .iter()
            .map(|vals| {
                let mut pos = vec![usize::MAX; field.order()];
                for (i, &v) in vals.iter().enumerate() {
                    pos[v] = i;
                }
                pos
            })
            .collect();
        let size = allowed.iter().map(Vec::len).product();
        Ok(Self { field: field.clone(), allowed, position, size })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn atom_count(&self) -> usize {
        self.allowed.len()
    }

    /// Values allowed at each atom.
    pub fn allowed(&self) -> &[Vec<usize>] {
        &self.allowed
    }

    pub fn values(&self, id: usize) -> Vec<usize> {
        let mut id = id;
        self.allowed
            .iter()
            .map(|vals| {
                let v = vals[id % vals.len()];
                id /= vals.len();
                v
            })
            .collect()
    }

    /// Inverse of [`values`](Self::values); `None` if some value is not
    /// allowed at its atom.
    pub fn id_of(&self, values: &[usize]) -> Option<usize> {
        let mut id = 0;
        for a in (0..self.allowed.len()).rev() {
            let pos = *self.position[a].get(values[a])?;
            if pos == usize::MAX {
                return None;
            }
            id = id * self.allowed[a].len() + pos;
        }
        Some(id)
    }

    fn pointwise(&self, a: usize, b: usize, op: impl Fn(usize, usize) -> usize) -> usize {
        let va = self.values(a);
        let vb = self.values(b);
        let out: Vec<usize> = va.iter().zip(&vb).map(|(&x, &y)| op(x, y)).collect();
        self.id_of(&out).expect("subfields are closed")
    }
}

impl FiniteRing for FilteredPower {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.pointwise(a, b, |x, y| self.field.add(x, y))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.pointwise(a, b, |x, y| self.field.mul(x, y))
    }

    fn one(&self) -> Option<usize> {
        self.id_of(&vec![1; self.allowed.len()])
    }
}

pub fn filtered_power(spec: &FilteredPowerSpec, caps: &Caps) -> Result<FilteredPower> {
    let f = &spec.field;
    let alg = &spec.algebra;
    if spec.tau.len() != alg.ideals.len() {
        return Err(Error::Mismatch(format!("{} labels but {} subfields", alg.ideals.len(), spec.tau.len())));
    }
    let mut tau: Vec<BTreeSet<usize>> = Vec::with_capacity(spec.tau.len());
    for (i, set) in spec.tau.iter().enumerate() {
        if set.iter().any(|&x| x >= f.order()) || !f.is_subfield(set) {
            return Err(Error::NotASubfield(format!("τ({}) in {}", alg.ideals[i].0, f.name())));
        }
        tau.push(set.iter().copied().collect());
    }
    for i in 0..tau.len() {
        for j in 0..tau.len() {
            let (ci, cj) = (alg.closed_set(i), alg.closed_set(j));
            if ci & !cj == 0 && !tau[i].is_subset(&tau[j]) {
                return Err(Error::Invalid(format!(
                    "τ is not order-preserving: {} ⊆ {} but τ({}) ⊄ τ({})",
                    alg.ideals[i].0, alg.ideals[j].0, alg.ideals[i].0, alg.ideals[j].0
                )));
            }
        }
    }
    let allowed = (0..alg.ring.atom_count())
        .map(|a| {
            (0..f.order())
                .filter(|x| (0..tau.len()).all(|i| alg.closed_set(i) >> a & 1 == 0 || tau[i].contains(x)))
                .collect()
        })
        .collect();
    FilteredPower::from_allowed(f, allowed, caps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingCorrespondenceReport {
    pub ring_size: usize,
    pub ring_ideal_count: usize,
    pub boolean_ideal_count: usize,
    /// Every ring ideal of `F^B` is `F^S` for an ideal `S` of `B`, and
    /// conversely.
    pub holds: bool,
    /// Ring ideals not of that form, as element lists.
    pub unmatched: Vec<Vec<usize>>,
}

/// Enumerates the ideals of `F^B` (sums of principal ideals) and compares
/// them with the `F^S`.
pub fn verify_ring_ideal_correspondence(field: &FiniteField, atoms: usize, caps: &Caps) -> Result<RingCorrespondenceReport> {
    let ring = FilteredPower::full(field, atoms, caps)?;
    let b = FiniteBooleanRing::with_atoms(atoms);
    let n = ring.size();
    let sum = |x: &FixedBitSet, y: &FixedBitSet| {
        let mut s = FixedBitSet::with_capacity(n);
        for i in x.ones() {
            for j in y.ones() {
                s.insert(ring.add(i, j));
            }
        }
        s
    };
    let mut ideals: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<FixedBitSet> = Vec::new();
    let mut principal: Vec<FixedBitSet> = Vec::new();
    for a in 0..n {
        let mut s = FixedBitSet::with_capacity(n);
        for r in 0..n {
            s.insert(ring.mul(a, r));
        }
        if ideals.insert(s.ones().collect()) {
            principal.push(s.clone());
            frontier.push(s);
        }
    }
    while let Some(i) = frontier.pop() {
        for p in &principal {
            let s = sum(&i, p);
            if ideals.insert(s.ones().collect()) {
                frontier.push(s);
            }
        }
    }
    let boolean_ideals: BTreeSet<Vec<usize>> = BooleanIdeal::all(&b)
        .iter()
        .map(|s| {
            (0..n)
                .filter(|&id| ring.values(id).iter().enumerate().all(|(a, &v)| v == 0 || s.bound() >> a & 1 == 1))
                .collect()
        })
        .collect();
    let unmatched: Vec<Vec<usize>> = ideals.difference(&boolean_ideals).cloned().collect();
    Ok(RingCorrespondenceReport {
        ring_size: n,
        ring_ideal_count: ideals.len(),
        boolean_ideal_count: boolean_ideals.len(),
        holds: unmatched.is_empty() && boolean_ideals.is_subset(&ideals),
        unmatched,
    })
}
