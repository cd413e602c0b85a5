use serde::Serialize;

use super::FiniteGroup;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// For one class representative `g`: the element of `⟨g⟩^G` needing the
/// most conjugates of `g^±1`, and how many.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadWitness {
    pub element: usize,
    pub worst: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugateSpread {
    /// Least positive m covering every normal closure.
    pub m: usize,
    pub witnesses: Vec<SpreadWitness>,
}

impl FiniteGroup {
    /// Breadth-first distances from the identity in the Cayley graph of
    /// `⟨g⟩^G` with respect to the conjugates of `g` and `g⁻¹`. Entries for
    /// elements outside the closure are `usize::MAX`.
    pub fn conjugate_distances(&self, g: usize) -> Vec<usize> {
        let mut steps = self.class_of(g);
        steps.extend(self.class_of(self.inv(g)));
        steps.sort_unstable();
        steps.dedup();
        let mut depth = vec![usize::MAX; self.order()];
        depth[0] = 0;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &c in &steps {
                let y = self.mul(x, c);
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    queue.push(y);
                }
            }
            i += 1;
        }
        depth
    }

    /// The conjugate spread, one witness per nontrivial conjugacy class.
    pub fn conjugate_spread(&self, caps: &Caps) -> Result<ConjugateSpread> {
        if self.order() > caps.spread_order {
            return Err(Error::CapExceeded { what: "spread order", size: self.order(), cap: caps.spread_order });
        }
        let mut witnesses = Vec::new();
        for class in self.conjugacy_classes().into_iter().skip(1) {
            let g = class[0];
            let depth = self.conjugate_distances(g);
            let (worst, d) = depth
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != usize::MAX)
                .fold((0, 0), |best, (x, &d)| if d > best.1 { (x, d) } else { best });
            witnesses.push(SpreadWitness { element: g, worst, depth: d });
        }
        let m = witnesses.iter().map(|w| w.depth).max().unwrap_or(0).max(1);
        Ok(ConjugateSpread { m, witnesses })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    #[test]
    fn spread_of_s3() {
        let s = s3().conjugate_spread(&Caps::default()).unwrap();
        assert_eq!(s.m, 2);
        assert_eq!(s.witnesses.len(), 2);
    }

    #[test]
    fn exponent_two() {
        let caps = Caps::default();
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], &caps).unwrap();
        assert_eq!(v4.conjugate_spread(&caps).unwrap().m, 1);
        assert_eq!(FiniteGroup::trivial().conjugate_spread(&caps).unwrap().m, 1);
    }
}
