use fixedbitset::FixedBitSet;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism between two finite groups, stored as an id map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    target_order: usize,
    map: Vec<u32>,
}

impl GroupHom {
    /// Checks `map(xy) = map(x)map(y)` for all pairs.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries, source has order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} out of range")));
        }
        if map[0] != 0 {
            return Err(Error::InvalidHom("identity not preserved".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::InvalidHom(format!("fails on pair ({x}, {y})")));
                }
            }
        }
        Ok(Self::new_unchecked(target.order(), map))
    }

    pub(crate) fn new_unchecked(target_order: usize, map: Vec<usize>) -> Self {
        Self { target_order, map: map.into_iter().map(|x| x as u32).collect() }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self::new_unchecked(group.order(), group.elements().collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn source_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(self.target_order, other.source_order());
        GroupHom {
            target_order: other.target_order,
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.target_order);
        self.map.iter().for_each(|&x| hit.insert(x as usize));
        hit.count_ones(..) == self.target_order
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.target_order);
        self.map.iter().all(|&x| !hit.put(x as usize))
    }

    pub fn kernel(&self, source: &FiniteGroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(source.order());
        for (x, &y) in self.map.iter().enumerate() {
            if y == 0 {
                members.insert(x);
            }
        }
        source.subgroup_from_members(members)
    }

    pub fn image(&self, source: &Subgroup, target: &FiniteGroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(target.order());
        for x in source.elements() {
            members.insert(self.apply(x));
        }
        target.subgroup_from_members(members)
    }
}
