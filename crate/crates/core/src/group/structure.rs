use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupHom, Subgroup};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending series starting at the whole group, stopped once it
/// stabilizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
}

impl Series {
    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series has at least one term")
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

impl FiniteGroup {
    pub fn series(&self, kind: SeriesKind) -> Series {
        let whole = self.whole();
        let mut terms = vec![whole.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = match kind {
                SeriesKind::Derived => self.commutator(last, last),
                SeriesKind::LowerCentral => self.commutator(&whole, last),
            };
            if next == *last {
                break;
            }
            terms.push(next);
        }
        Series { kind, terms }
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = self.whole();
        self.commutator(&whole, &whole)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    pub fn is_soluble(&self) -> bool {
        self.series(SeriesKind::Derived).last().is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).last().is_trivial()
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            if set.iter().all(|&s| self.mul(g, s) == self.mul(s, g)) {
                members.insert(g);
            }
        }
        self.subgroup_from_members(members)
    }

    pub fn center(&self) -> Subgroup {
        let gens: Vec<usize> = self.generators().iter().map(|&g| g as usize).collect();
        self.centralizer(&gens)
    }

    /// Orbits of conjugation, ordered by least element; each class is sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generators().to_vec();
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen.put(x) {
                continue;
            }
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                for &g in &gens {
                    let z = self.conj(y, g as usize);
                    if !seen.put(z) {
                        class.push(z);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let mut class: Vec<usize> = self.elements().map(|g| self.conj(x, g)).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// The smallest normal subgroup containing `g`.
    pub fn normal_closure(&self, g: usize) -> Subgroup {
        self.generate(self.class_of(g))
    }

    /// The smallest normal subgroup containing `h`.
    pub fn normal_closure_of(&self, h: &Subgroup) -> Subgroup {
        let mut current = h.clone();
        loop {
            let mut grew = false;
            for x in current.generators() {
                for &g in self.generators() {
                    let y = self.conj(x, g as usize);
                    if !current.contains(y) {
                        current = self.extend(&current, y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return current;
            }
        }
    }

    /// Largest normal subgroup of `self` inside `h`: the intersection of all
    /// conjugates of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut members = h.members().clone();
        for g in self.elements() {
            let mut conj = FixedBitSet::with_capacity(self.order());
            for x in members.ones() {
                let y = self.conj(x, g);
                if h.contains(y) {
                    conj.insert(x);
                }
            }
            // conj now holds x in core-so-far with g⁻¹xg ∈ h, i.e. the
            // intersection with h^{g⁻¹}
            members = conj;
            if members.count_ones(..) == 1 {
                break;
            }
        }
        self.subgroup_from_members(members)
    }

    /// The quotient by a normal subgroup, with cosets numbered by their least
    /// element, and the projection onto it.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for k in n.elements() {
                coset[self.mul(x, k)] = id;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset[self.mul(a, b)]);
            }
        }
        let quotient = FiniteGroup::from_raw(m, table, None);
        let hom = GroupHom::new_unchecked(m, coset.into_iter().map(|c| c as usize).collect());
        Ok((quotient, hom))
    }

    /// `h` as a group in its own right, numbered by position in the sorted
    /// element list, together with the inclusion map.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, GroupHom) {
        let elems: Vec<usize> = h.elements().collect();
        let mut pos = vec![u32::MAX; self.order()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i as u32;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                table.push(pos[self.mul(a, b)]);
            }
        }
        let group = FiniteGroup::from_raw(m, table, None);
        (group, GroupHom::new_unchecked(self.order(), elems))
    }
}
