use std::collections::HashSet;

use super::{FiniteGroup, Subgroup};
use crate::caps::Caps;
use crate::error::{Error, Result};

impl FiniteGroup {
    /// Distinct cyclic subgroups, each with the least id generating it, in
    /// order of that generator.
    pub fn cyclic_subgroups(&self) -> Vec<(usize, Subgroup)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in self.elements() {
            let c = self.generate([x]);
            if seen.insert(c.element_ids().to_vec()) {
                out.push((x, c));
            }
        }
        out
    }

    /// Every subgroup, by cyclic extension: start from the cyclic subgroups
    /// and repeatedly adjoin one cyclic generator. Sorted by size, then by
    /// element list.
    pub fn enumerate_subgroups(&self, caps: &Caps) -> Result<Vec<Subgroup>> {
        if self.order() > caps.subgroup_order {
            return Err(Error::CapExceeded {
                what: "subgroup enumeration order",
                size: self.order(),
                cap: caps.subgroup_order,
            });
        }
        let cyclic = self.cyclic_subgroups();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut frontier = Vec::new();
        for (_, c) in &cyclic {
            if seen.insert(c.clone()) {
                frontier.push(c.clone());
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for &(g, _) in &cyclic {
                    if h.contains(g) {
                        continue;
                    }
                    let j = self.extend(h, g);
                    if !seen.contains(&j) {
                        if seen.len() >= caps.subgroup_count {
                            return Err(Error::CapExceeded {
                                what: "subgroup count",
                                size: seen.len() + 1,
                                cap: caps.subgroup_count,
                            });
                        }
                        seen.insert(j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Subgroup> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }

    /// Every normal subgroup, as the join-closure of the normal closures of
    /// the conjugacy classes. Sorted like [`FiniteGroup::enumerate_subgroups`].
    pub fn enumerate_normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![self.trivial_subgroup()];
        let mut seen: HashSet<Subgroup> = found.iter().cloned().collect();
        let mut minimal = Vec::new();
        for class in self.conjugacy_classes() {
            let n = self.generate(class);
            if seen.insert(n.clone()) {
                found.push(n.clone());
                minimal.push(n);
            }
        }
        // Every normal subgroup is a join of class closures, so joining the
        // current list with the class closures until nothing new appears
        // reaches all of them.
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &minimal {
                    if b.is_subgroup_of(a) {
                        continue;
                    }
                    let j = self.join(a, b);
                    if seen.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Subgroup> = seen.into_iter().collect();
        all.sort();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    fn brute_force_subgroups(g: &FiniteGroup) -> usize {
        // closure of every subset of elements, feasible for tiny groups
        let n = g.order();
        let mut seen = HashSet::new();
        for mask in 0u32..(1 << n) {
            let h = g.generate((0..n).filter(|&i| mask >> i & 1 == 1));
            seen.insert(h);
        }
        seen.len()
    }

    #[test]
    fn small_lattices() {
        let caps = Caps::default();
        let z2 = FiniteGroup::from_permutations(2, &[vec![1, 0]], &caps).unwrap();
        assert_eq!(z2.enumerate_subgroups(&caps).unwrap().len(), 2);
        let g = s3();
        let subs = g.enumerate_subgroups(&caps).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(brute_force_subgroups(&g), 6);
        assert!(subs.iter().all(|h| 6 % h.order() == 0));
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], &caps).unwrap();
        assert_eq!(v4.enumerate_subgroups(&caps).unwrap().len(), 5);
        assert_eq!(brute_force_subgroups(&v4), 5);
        assert_eq!(v4.enumerate_normal_subgroups().len(), 5);
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = s3();
        let orders: Vec<usize> = g.enumerate_normal_subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps { subgroup_order: 4, ..Caps::default() };
        assert!(matches!(s3().enumerate_subgroups(&caps), Err(Error::CapExceeded { .. })));
        let caps = Caps { subgroup_count: 3, ..Caps::default() };
        assert!(matches!(s3().enumerate_subgroups(&caps), Err(Error::CapExceeded { .. })));
    }
}
