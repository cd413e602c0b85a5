use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{BPElement, BooleanPowerGroup};
use crate::boolean::{quotient_ring, BooleanIdeal, FiniteBooleanRing};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom, Subgroup};

/// `P^B` as a Cayley table. The element with atom values `(v₀, v₁, …)` has
/// id `Σ vₐ·|P|^a`, which makes it the direct power `P^m` coordinatewise.
#[derive(Debug, Clone)]
pub struct MaterializedPower {
    pub group: FiniteGroup,
    pub ring: FiniteBooleanRing,
    base_order: usize,
}

impl MaterializedPower {
    pub fn new(base: &FiniteGroup, ring: FiniteBooleanRing, caps: &Caps) -> Result<Self> {
        let group = FiniteGroup::direct_power(base, ring.atom_count(), caps)?;
        Ok(Self { group, ring, base_order: base.order() })
    }

    pub fn id_of(&self, x: &BPElement) -> usize {
        x.evaluate().iter().rev().fold(0, |acc, &v| acc * self.base_order + v)
    }

    pub fn values(&self, id: usize) -> Vec<usize> {
        let mut id = id;
        (0..self.ring.atom_count())
            .map(|_| {
                let v = id % self.base_order;
                id /= self.base_order;
                v
            })
            .collect()
    }

    pub fn element(&self, power: &BooleanPowerGroup<'_>, id: usize) -> BPElement {
        power.from_values(&self.values(id))
    }

    /// `P^S`: elements supported inside the ideal.
    pub fn ideal_subgroup(&self, ideal: &BooleanIdeal) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for id in self.group.elements() {
            let vals = self.values(id);
            if vals.iter().enumerate().all(|(a, &v)| v == 0 || ideal.bound() >> a & 1 == 1) {
                members.insert(id);
            }
        }
        self.group.subgroup_from_members(members)
    }

    /// Compares the normal subgroups of `P^B` with the subgroups `P^S`.
    pub fn verify_ideal_correspondence(&self, base: &FiniteGroup) -> CorrespondenceReport {
        let normals = self.group.enumerate_normal_subgroups();
        let ideals = BooleanIdeal::all(&self.ring);
        let ideal_groups: Vec<(u32, Subgroup)> =
            ideals.iter().map(|s| (s.bound(), self.ideal_subgroup(s))).collect();
        let mut matched = Vec::new();
        let mut non_ideal = Vec::new();
        for n in &normals {
            match ideal_groups.iter().find(|(_, g)| g == n) {
                Some((bound, _)) => matched.push(MatchedNormal { order: n.order(), ideal_bound: *bound }),
                None => non_ideal.push(n.element_ids().iter().map(|&x| x as usize).collect()),
            }
        }
        let all_normal = ideal_groups.iter().all(|(_, g)| self.group.is_normal(g));
        let simple_nonabelian = !base.is_abelian() && base.enumerate_normal_subgroups().len() == 2;
        CorrespondenceReport {
            normal_count: normals.len(),
            ideal_count: ideals.len(),
            holds: non_ideal.is_empty() && all_normal && matched.len() == ideals.len(),
            base_simple_nonabelian: simple_nonabelian,
            matched,
            non_ideal,
        }
    }

    /// `P^B / P^S ≅ P^m` with `m` the atom count of `B/S`, the isomorphism
    /// read off by restricting each coset to the atoms outside `S`.
    pub fn quotient_iso(&self, base: &FiniteGroup, ideal: &BooleanIdeal, caps: &Caps) -> Result<QuotientIso> {
        let kernel = self.ideal_subgroup(ideal);
        let (quotient, projection) = self.group.quotient(&kernel)?;
        let surviving = quotient_ring(&self.ring, ideal)?.surviving;
        let m = surviving.len();
        let target = FiniteGroup::direct_power(base, m, caps)?;
        let mut map = vec![usize::MAX; quotient.order()];
        for id in self.group.elements() {
            let c = projection.apply(id);
            if map[c] != usize::MAX {
                continue;
            }
            let vals = self.values(id);
            map[c] = surviving.iter().rev().fold(0, |acc, &a| acc * base.order() + vals[a]);
        }
        let iso = GroupHom::new(&quotient, &target, map)?;
        if !(iso.is_injective() && iso.is_surjective()) {
            return Err(Error::InvalidHom("atom restriction is not bijective".into()));
        }
        // well-defined on cosets: every element of a coset restricts alike
        for id in self.group.elements() {
            let vals = self.values(id);
            let r = surviving.iter().rev().fold(0, |acc, &a| acc * base.order() + vals[a]);
            if iso.apply(projection.apply(id)) != r {
                return Err(Error::InvalidHom("atom restriction is not constant on cosets".into()));
            }
        }
        Ok(QuotientIso { quotient, projection, target, iso, m })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedNormal {
    pub order: usize,
    pub ideal_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub normal_count: usize,
    pub ideal_count: usize,
    /// Every normal subgroup is some `P^S`, and every `P^S` is normal.
    pub holds: bool,
    pub base_simple_nonabelian: bool,
    pub matched: Vec<MatchedNormal>,
    /// Normal subgroups not of the form `P^S`, as element lists.
    pub non_ideal: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct QuotientIso {
    pub quotient: FiniteGroup,
    pub projection: GroupHom,
    pub target: FiniteGroup,
    pub iso: GroupHom,
    pub m: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_atom_is_base() {
        let caps = Caps::default();
        let p = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &caps).unwrap();
        let mp = MaterializedPower::new(&p, FiniteBooleanRing::new(1).unwrap(), &caps).unwrap();
        assert_eq!(mp.group, p);
    }

    #[test]
    fn elementary_abelian_power() {
        let caps = Caps::default();
        let z2 = FiniteGroup::cyclic(2);
        let mp = MaterializedPower::new(&z2, FiniteBooleanRing::new(3).unwrap(), &caps).unwrap();
        assert_eq!(mp.group.order(), 8);
        assert!(mp.group.is_abelian());
        assert!(mp.group.elements().all(|x| mp.group.mul(x, x) == 0));
    }

    #[test]
    fn bp_calculus_matches_table() {
        let caps = Caps::default();
        let p = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &caps).unwrap();
        let ring = FiniteBooleanRing::new(2).unwrap();
        let bp = BooleanPowerGroup::new(&p, ring);
        let mp = MaterializedPower::new(&p, ring, &caps).unwrap();
        for x in mp.group.elements() {
            let ex = mp.element(&bp, x);
            assert_eq!(mp.id_of(&ex), x);
            for y in mp.group.elements() {
                let ey = mp.element(&bp, y);
                assert_eq!(mp.id_of(&bp.multiply(&ex, &ey).unwrap()), mp.group.mul(x, y));
            }
        }
    }

    #[test]
    fn z4_correspondence_fails() {
        let caps = Caps::default();
        let z4 = FiniteGroup::cyclic(4);
        let mp = MaterializedPower::new(&z4, FiniteBooleanRing::new(2).unwrap(), &caps).unwrap();
        let r = mp.verify_ideal_correspondence(&z4);
        assert!(!r.holds);
        assert!(!r.base_simple_nonabelian);
        assert_eq!(r.ideal_count, 4);
        // the diagonal {(x, x)} is normal but not P^S
        let diagonal: Vec<usize> = (0..4).map(|x| x + 4 * x).collect();
        let mut d = diagonal.clone();
        d.sort();
        assert!(r.non_ideal.contains(&d));
    }

    #[test]
    fn trivial_and_whole_ideals() {
        let caps = Caps::default();
        let p = FiniteGroup::cyclic(3);
        let ring = FiniteBooleanRing::new(2).unwrap();
        let mp = MaterializedPower::new(&p, ring, &caps).unwrap();
        assert!(mp.ideal_subgroup(&BooleanIdeal::zero(&ring)).is_trivial());
        assert_eq!(mp.ideal_subgroup(&BooleanIdeal::whole(&ring)).order(), 9);
        let q = mp.quotient_iso(&p, &BooleanIdeal::zero(&ring), &caps).unwrap();
        assert_eq!(q.m, 2);
        let q = mp.quotient_iso(&p, &BooleanIdeal::whole(&ring), &caps).unwrap();
        assert_eq!(q.m, 0);
        assert_eq!(q.quotient.order(), 1);
    }
}
