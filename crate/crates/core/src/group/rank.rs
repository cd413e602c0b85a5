use std::collections::HashSet;

use super::{FiniteGroup, Subgroup};
use crate::caps::Caps;
use crate::error::Result;

impl FiniteGroup {
    /// Least number of elements generating `h`, by trying k = 1, 2, … .
    ///
    /// Candidates are the cyclic subgroups of `h`; the first generator only
    /// ranges over cyclic subgroups up to conjugacy in `h`.
    pub fn min_generators(&self, h: &Subgroup) -> usize {
        if h.is_trivial() {
            return 0;
        }
        let mut seen = HashSet::new();
        let mut candidates = Vec::new();
        for x in h.elements() {
            let c = self.generate([x]);
            if seen.insert(c.clone()) {
                candidates.push((x, c));
            }
        }
        let mut first = Vec::new();
        let mut covered: HashSet<Subgroup> = HashSet::new();
        for (x, c) in &candidates {
            if covered.contains(c) {
                continue;
            }
            first.push(*x);
            for y in h.elements() {
                covered.insert(self.conjugate(c, y));
            }
        }
        let gens: Vec<usize> = candidates.iter().map(|(x, _)| *x).collect();
        let mut k = 1;
        loop {
            for &x in &first {
                let start = self.generate([x]);
                if self.search_generators(h, &start, &gens, 0, k - 1) {
                    return k;
                }
            }
            k += 1;
        }
    }

    fn search_generators(&self, target: &Subgroup, current: &Subgroup, gens: &[usize], from: usize, left: usize) -> bool {
        if current.order() == target.order() {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in from..gens.len() {
            if current.contains(gens[i]) {
                continue;
            }
            let next = self.extend(current, gens[i]);
            if self.search_generators(target, &next, gens, i + 1, left - 1) {
                return true;
            }
        }
        false
    }

    /// Largest minimal generating set size over all subgroups.
    pub fn prufer_rank(&self, caps: &Caps) -> Result<usize> {
        let subs = self.enumerate_subgroups(caps)?;
        Ok(subs.iter().map(|h| self.min_generators(h)).max().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    #[test]
    fn ranks() {
        let caps = Caps::default();
        let z6 = FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 4, 5, 0]], &caps).unwrap();
        assert_eq!(z6.prufer_rank(&caps).unwrap(), 1);
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], &caps).unwrap();
        assert_eq!(v4.prufer_rank(&caps).unwrap(), 2);
        assert_eq!(s3().prufer_rank(&caps).unwrap(), 2);
        assert_eq!(FiniteGroup::trivial().prufer_rank(&caps).unwrap(), 0);
    }
}
