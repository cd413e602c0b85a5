//! Finite Boolean rings as power sets of an atom set.
//!
//! An element is a bitmask over the atoms; `+` is symmetric difference and
//! `·` is intersection. Every ideal of a finite Boolean ring is principal,
//! so an ideal is stored as the largest element it contains.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 20;

/// Largest number of refinement steps accepted by [`refine_chain`].
pub const MAX_REFINE_STEPS: usize = 10;

/// The ring of all subsets of `atom_count` atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteBooleanRing {
    atoms: usize,
}

impl FiniteBooleanRing {
    pub fn new(atoms: usize) -> Result<Self> {
        if !(1..=MAX_ATOMS).contains(&atoms) {
            return Err(Error::AtomsOutOfRange(atoms));
        }
        Ok(Self { atoms })
    }

    /// Allows the zero ring (no atoms), which only arises as a quotient.
    pub(crate) fn with_atoms(atoms: usize) -> Self {
        assert!(atoms <= MAX_ATOMS);
        Self { atoms }
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn size(&self) -> usize {
        1 << self.atoms
    }

    pub fn zero(&self) -> u32 {
        0
    }

    /// The full atom set, which is the multiplicative identity.
    pub fn one(&self) -> u32 {
        ((1u64 << self.atoms) - 1) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        a & b
    }

    pub fn contains(&self, a: u32) -> bool {
        a & !self.one() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.atoms)
    }

    /// Singleton masks.
    pub fn atoms(&self) -> impl Iterator<Item = u32> {
        (0..self.atoms).map(|i| 1 << i)
    }

    pub fn mask(&self, atoms: &[usize]) -> Result<u32> {
        atoms.iter().try_fold(0u32, |acc, &a| {
            if a < self.atoms {
                Ok(acc | 1 << a)
            } else {
                Err(Error::Invalid(format!("atom {a} out of range 0..{}", self.atoms)))
            }
        })
    }
}

/// An ideal, stored by its largest element: the ideal is every subset of
/// `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BooleanIdeal {
    atoms: usize,
    bound: u32,
}

impl BooleanIdeal {
    pub fn zero(ring: &FiniteBooleanRing) -> Self {
        Self { atoms: ring.atoms, bound: 0 }
    }

    pub fn whole(ring: &FiniteBooleanRing) -> Self {
        Self { atoms: ring.atoms, bound: ring.one() }
    }

    /// The ideal generated by the given subsets (lists of atom indices).
    pub fn generated(ring: &FiniteBooleanRing, generators: &[Vec<usize>]) -> Result<Self> {
        let bound = generators.iter().try_fold(0, |acc, g| Ok::<_, Error>(acc | ring.mask(g)?))?;
        Ok(Self { atoms: ring.atoms, bound })
    }

    pub fn principal(ring: &FiniteBooleanRing, bound: u32) -> Result<Self> {
        if !ring.contains(bound) {
            return Err(Error::Invalid(format!("{bound:#b} is not an element")));
        }
        Ok(Self { atoms: ring.atoms, bound })
    }

    /// Checks closure under `+` and under `·` by arbitrary ring elements.
    pub fn from_elements(ring: &FiniteBooleanRing, elements: &[u32]) -> Result<Self> {
        if elements.iter().any(|&x| !ring.contains(x)) {
            return Err(Error::NotAnIdeal("element outside the ring".into()));
        }
        let set: std::collections::HashSet<u32> = elements.iter().copied().collect();
        if !set.contains(&0) {
            return Err(Error::NotAnIdeal("missing 0".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&ring.add(a, b)) {
                    return Err(Error::NotAnIdeal(format!("{a:#b} + {b:#b} missing")));
                }
            }
            for r in ring.elements() {
                if !set.contains(&ring.mul(a, r)) {
                    return Err(Error::NotAnIdeal(format!("{a:#b} · {r:#b} missing")));
                }
            }
        }
        let bound = set.iter().fold(0, |acc, &x| acc | x);
        Ok(Self { atoms: ring.atoms, bound })
    }

    /// Every ideal of the ring, one per subset of atoms, in mask order.
    pub fn all(ring: &FiniteBooleanRing) -> Vec<Self> {
        ring.elements().map(|bound| Self { atoms: ring.atoms, bound }).collect()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn contains(&self, x: u32) -> bool {
        x & !self.bound == 0
    }

    pub fn size(&self) -> usize {
        1 << self.bound.count_ones()
    }

    /// The explicit element set, ascending.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        // enumerate submasks of bound
        let mut s = self.bound;
        loop {
            out.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & self.bound;
        }
        out.reverse();
        out
    }

    pub fn is_maximal(&self) -> bool {
        self.bound.count_ones() as usize + 1 == self.atoms
    }
}

/// `B/S` with its atoms the atoms of `B` outside `S`, and the projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanQuotient {
    pub ring: FiniteBooleanRing,
    /// `surviving[i]` is the atom of `B` that becomes atom `i` of `B/S`.
    pub surviving: Vec<usize>,
}

impl BooleanQuotient {
    pub fn atom_count(&self) -> usize {
        self.ring.atom_count()
    }

    /// `A ↦ A + S`, as an element of the quotient ring.
    pub fn project(&self, a: u32) -> u32 {
        self.surviving.iter().enumerate().fold(0, |acc, (i, &atom)| acc | ((a >> atom) & 1) << i)
    }
}

pub fn quotient_ring(ring: &FiniteBooleanRing, ideal: &BooleanIdeal) -> Result<BooleanQuotient> {
    if ideal.atoms != ring.atoms {
        return Err(Error::NotAnIdeal("ideal belongs to a different ring".into()));
    }
    let surviving: Vec<usize> = (0..ring.atoms).filter(|&a| ideal.bound >> a & 1 == 0).collect();
    Ok(BooleanQuotient { ring: FiniteBooleanRing::with_atoms(surviving.len()), surviving })
}

/// Maximal ideals, one per atom: the sets missing that atom.
pub fn stone_points(ring: &FiniteBooleanRing) -> Vec<BooleanIdeal> {
    ring.atoms().map(|a| BooleanIdeal { atoms: ring.atoms, bound: ring.one() & !a }).collect()
}

/// A ring embedding given by where each source atom goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingEmbedding {
    pub source: FiniteBooleanRing,
    pub target: FiniteBooleanRing,
    pub atom_images: Vec<u32>,
}

impl RingEmbedding {
    pub fn apply(&self, a: u32) -> u32 {
        (0..self.source.atoms).filter(|&i| a >> i & 1 == 1).fold(0, |acc, i| acc | self.atom_images[i])
    }

    /// Checks `+`, `·`, the identity and injectivity over all pairs.
    pub fn verify(&self) -> bool {
        let s = &self.source;
        let t = &self.target;
        if self.apply(s.one()) != t.one() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for a in s.elements() {
            if !seen.insert(self.apply(a)) {
                return false;
            }
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b))
                    || self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether the directed system stands in for the atomless ring with or
/// without identity. Finite levels are identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitKind {
    WithIdentity,
    WithoutIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementChain {
    pub rings: Vec<FiniteBooleanRing>,
    pub embeddings: Vec<RingEmbedding>,
    pub limit: LimitKind,
}

/// `B₀ ↪ B₁ ↪ …` where each step splits every atom in two: atom `i` goes to
/// atoms `2i` and `2i + 1`.
pub fn refine_chain(start_atoms: usize, steps: usize, limit: LimitKind) -> Result<RefinementChain> {
    if steps > MAX_REFINE_STEPS {
        return Err(Error::CapExceeded { what: "refinement steps", size: steps, cap: MAX_REFINE_STEPS });
    }
    let top = start_atoms.checked_shl(steps as u32).unwrap_or(usize::MAX);
    if top > MAX_ATOMS || (steps > 0 && top >> steps != start_atoms) {
        return Err(Error::CapExceeded { what: "refined atom count", size: top, cap: MAX_ATOMS });
    }
    let mut rings = vec![FiniteBooleanRing::new(start_atoms)?];
    let mut embeddings = Vec::new();
    for _ in 0..steps {
        let source = *rings.last().unwrap();
        let target = FiniteBooleanRing::new(source.atoms * 2)?;
        let atom_images = (0..source.atoms).map(|i| 0b11 << (2 * i)).collect();
        embeddings.push(RingEmbedding { source, target, atom_images });
        rings.push(target);
    }
    Ok(RefinementChain { rings, embeddings, limit })
}

/// A Boolean ring with named ideals `I_C`, one per closed set `C` of the
/// Stone space. The closed set of `I_C` is the set of points containing
/// it, i.e. the atoms outside its bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedBooleanAlgebra {
    pub ring: FiniteBooleanRing,
    pub ideals: Vec<(String, BooleanIdeal)>,
}

impl AugmentedBooleanAlgebra {
    pub fn new(ring: FiniteBooleanRing, ideals: Vec<(String, BooleanIdeal)>) -> Result<Self> {
        if ideals.iter().any(|(_, i)| i.atoms != ring.atoms) {
            return Err(Error::NotAnIdeal("ideal belongs to a different ring".into()));
        }
        Ok(Self { ring, ideals })
    }

    /// Builds the algebra from closed sets given as point (atom) lists.
    pub fn from_closed_sets(ring: FiniteBooleanRing, sets: &[(String, Vec<usize>)]) -> Result<Self> {
        let ideals = sets
            .iter()
            .map(|(label, points)| {
                let closed = ring.mask(points)?;
                Ok((label.clone(), BooleanIdeal { atoms: ring.atoms, bound: ring.one() & !closed }))
            })
            .collect::<Result<_>>()?;
        Self::new(ring, ideals)
    }

    /// Atom mask of the closed set labelled by entry `i`.
    pub fn closed_set(&self, i: usize) -> u32 {
        self.ring.one() & !self.ideals[i].1.bound
    }

    /// Whether the closed sets are closed under union and intersection.
    pub fn is_lattice(&self) -> bool {
        let sets: Vec<u32> = (0..self.ideals.len()).map(|i| self.closed_set(i)).collect();
        sets.iter().all(|a| sets.iter().all(|b| sets.contains(&(a | b)) && sets.contains(&(a & b))))
    }
}
