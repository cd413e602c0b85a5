use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup of some [`FiniteGroup`], stored as its sorted element ids.
///
/// The parent is not referenced; operations take the parent group as an
/// argument. Equality, ordering and hashing look only at the element set,
/// ordering first by size and then lexicographically.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<u32>,
    members: FixedBitSet,
    generators: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.elements.iter().map(|&x| x as usize)
    }

    pub fn element_ids(&self) -> &[u32] {
        &self.elements
    }

    /// Generators this subgroup was closed from.
    pub fn generators(&self) -> Vec<usize> {
        self.generators.iter().map(|&x| x as usize).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub(crate) fn members(&self) -> &FixedBitSet {
        &self.members
    }

    fn from_parts(members: FixedBitSet, generators: Vec<u32>) -> Self {
        let elements = members.ones().map(|x| x as u32).collect();
        Self { elements, members, generators }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.elements.cmp(&other.elements))
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        Subgroup::from_parts(members, Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup::from_parts(members, self.generators().to_vec())
    }

    /// The subgroup generated by `gens`. Only generators that enlarge the
    /// subgroup are kept.
    pub fn generate<I: IntoIterator<Item = usize>>(&self, gens: I) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for g in gens {
            if !current.contains(g) {
                current = self.extend(&current, g);
            }
        }
        current
    }

    /// `⟨h, g⟩` for a subgroup `h`.
    pub fn extend(&self, h: &Subgroup, g: usize) -> Subgroup {
        if h.contains(g) {
            return h.clone();
        }
        let mut gens = h.generators.clone();
        gens.push(g as u32);
        let mut members = h.members.clone();
        let mut queue: Vec<u32> = Vec::new();
        for &x in &h.elements {
            let y = self.mul(x as usize, g);
            if !members.put(y) {
                queue.push(y as u32);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i] as usize;
            for &s in &gens {
                let y = self.mul(x, s as usize);
                if !members.put(y) {
                    queue.push(y as u32);
                }
            }
            i += 1;
        }
        Subgroup::from_parts(members, gens)
    }

    /// The join `⟨a, b⟩`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let (big, small) = if a.order() >= b.order() { (a, b) } else { (b, a) };
        let mut current = big.clone();
        for g in small.generators() {
            current = self.extend(&current, g);
        }
        // generators may be empty for subgroups built from raw sets
        for g in small.elements() {
            if !current.contains(g) {
                current = self.extend(&current, g);
            }
        }
        current
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut members = a.members.clone();
        members.intersect_with(&b.members);
        self.subgroup_from_members(members)
    }

    /// Validates that `elements` form a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut members = FixedBitSet::with_capacity(self.order());
        for &x in elements {
            if x >= self.order() {
                return Err(Error::InvalidSubgroup(format!("id {x} out of range")));
            }
            members.insert(x);
        }
        if !members.contains(0) {
            return Err(Error::InvalidSubgroup("missing identity".into()));
        }
        for a in members.ones() {
            if !members.contains(self.inv(a)) {
                return Err(Error::InvalidSubgroup(format!("inverse of {a} missing")));
            }
            for b in members.ones() {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::InvalidSubgroup(format!("{a}*{b} not in set")));
                }
            }
        }
        let sub = self.subgroup_from_members(members);
        debug_assert_eq!(self.order() % sub.order(), 0);
        Ok(sub)
    }

    /// Wraps a member set already known to be a subgroup, choosing
    /// generators greedily.
    pub(crate) fn subgroup_from_members(&self, members: FixedBitSet) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for x in members.ones() {
            if !current.contains(x) {
                current = self.extend(&current, x);
            }
        }
        debug_assert_eq!(current.members, members);
        current
    }

    /// `h^g = g⁻¹ h g`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in h.elements() {
            members.insert(self.conj(x, g));
        }
        let gens = h.generators.iter().map(|&x| self.conj(x as usize, g) as u32).collect();
        Subgroup::from_parts(members, gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hgens = if h.generators.is_empty() && !h.is_trivial() {
            h.elements.clone()
        } else {
            h.generators.clone()
        };
        self.generators()
            .iter()
            .all(|&g| hgens.iter().all(|&x| h.contains(self.conj(x as usize, g as usize))))
    }

    /// `[a, b]`, generated by all commutators of pairs.
    pub fn commutator(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for x in a.elements() {
            for y in b.elements() {
                let c = self.comm(x, y);
                if !current.contains(c) {
                    current = self.extend(&current, c);
                }
            }
        }
        current
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;

    #[test]
    fn generate_and_validate() {
        let g = s3();
        let whole = g.generate(g.elements());
        assert_eq!(whole.order(), 6);
        assert!(g.subgroup(&[0, 1]).is_ok() || g.subgroup(&[0, 2]).is_ok());
        assert!(g.subgroup(&[1]).is_err());
        let a3 = g.commutator(&whole, &whole);
        assert_eq!(a3.order(), 3);
        assert!(g.is_normal(&a3));
        let t = g.generate([1]);
        assert_eq!(t.order(), 2);
        assert!(!g.is_normal(&t));
        assert_eq!(g.join(&t, &a3).order(), 6);
        assert!(g.intersection(&t, &a3).is_trivial());
    }
}
