use std::collections::HashSet;

use super::{FiniteGroup, GroupHom, Subgroup};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A normal subgroup and whether every automorphism fixes it setwise.
#[derive(Debug, Clone)]
pub struct CharacteristicMark {
    pub subgroup: Subgroup,
    pub characteristic: bool,
}

#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    pub automorphisms: Vec<GroupHom>,
    pub inner_count: usize,
    pub normal_subgroups: Vec<CharacteristicMark>,
}

impl AutomorphismReport {
    pub fn all_inner(&self) -> bool {
        self.inner_count == self.automorphisms.len()
    }

    pub fn characteristic_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.normal_subgroups.iter().filter(|m| m.characteristic).map(|m| &m.subgroup)
    }
}

struct Search<'a> {
    group: &'a FiniteGroup,
    gens: Vec<usize>,
    /// Breadth-first words: for each prefix length j, the elements of
    /// ⟨gens[..j]⟩ with (parent, generator) pairs in discovery order.
    words: Vec<Vec<(usize, usize, usize)>>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    found: Vec<GroupHom>,
    cap: usize,
}

impl Search<'_> {
    /// Extends the map over ⟨gens[..=j]⟩ and checks every edge.
    fn consistent(&self, j: usize) -> Option<Vec<usize>> {
        let g = self.group;
        let mut map = vec![usize::MAX; g.order()];
        map[0] = 0;
        for &(x, parent, gi) in &self.words[j + 1] {
            map[x] = g.mul(map[parent], self.images[gi]);
        }
        let mut hit = HashSet::from([0]);
        for &(x, _, _) in &self.words[j + 1] {
            if !hit.insert(map[x]) {
                return None;
            }
        }
        for &(x, _, _) in self.words[j + 1].iter().chain([(0, 0, 0)].iter()) {
            for gi in 0..=j {
                let y = g.mul(x, self.gens[gi]);
                if map[y] != g.mul(map[x], self.images[gi]) {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self, j: usize) -> Result<()> {
        if j == self.gens.len() {
            return Ok(());
        }
        for c in self.candidates[j].clone() {
            self.images[j] = c;
            if let Some(map) = self.consistent(j) {
                if j + 1 == self.gens.len() {
                    if self.found.len() >= self.cap {
                        return Err(Error::CapExceeded {
                            what: "automorphism count",
                            size: self.found.len() + 1,
                            cap: self.cap,
                        });
                    }
                    self.found.push(GroupHom::new_unchecked(self.group.order(), map));
                } else {
                    self.run(j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl FiniteGroup {
    /// A short generating set chosen greedily, each step adjoining the
    /// element that enlarges the subgroup most.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        while current.order() < self.order() {
            let best = self
                .elements()
                .filter(|&x| !current.contains(x))
                .max_by_key(|&x| (self.extend(&current, x).order(), std::cmp::Reverse(x)))
                .expect("proper subgroup has an outside element");
            current = self.extend(&current, best);
            gens.push(best);
        }
        gens
    }

    /// All automorphisms, by backtracking over images of a generating set
    /// with matching element orders, plus characteristic-subgroup marks on
    /// the normal subgroups.
    pub fn automorphism_group(&self, caps: &Caps) -> Result<AutomorphismReport> {
        if self.order() > caps.automorphism_order {
            return Err(Error::CapExceeded {
                what: "automorphism order",
                size: self.order(),
                cap: caps.automorphism_order,
            });
        }
        let gens = self.greedy_generators();
        let mut words = vec![Vec::new()];
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        let mut order: Vec<usize> = vec![0];
        let mut layer = Vec::new();
        for j in 0..gens.len() {
            // extend the closure of gens[..=j], recording new elements
            let mut i = 0;
            let mut queue = order.clone();
            while i < queue.len() {
                let x = queue[i];
                for (gi, &g) in gens[..=j].iter().enumerate() {
                    let y = self.mul(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        queue.push(y);
                        layer.push((y, x, gi));
                    }
                }
                i += 1;
            }
            order = queue;
            words.push(layer.clone());
        }
        let candidates = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                self.elements().filter(|&x| self.element_order(x) == o).collect()
            })
            .collect();
        let mut search = Search {
            group: self,
            images: vec![0; gens.len()],
            gens,
            words,
            candidates,
            found: Vec::new(),
            cap: caps.automorphism_count,
        };
        if search.gens.is_empty() {
            search.found.push(GroupHom::identity(self));
        } else {
            search.run(0)?;
        }
        let automorphisms = search.found;

        let inner: HashSet<Vec<usize>> = self
            .elements()
            .map(|g| self.elements().map(|x| self.conj(x, g)).collect())
            .collect();
        let normal_subgroups = self
            .enumerate_normal_subgroups()
            .into_iter()
            .map(|n| {
                let characteristic =
                    automorphisms.iter().all(|a| n.elements().all(|x| n.contains(a.apply(x))));
                CharacteristicMark { subgroup: n, characteristic }
            })
            .collect();
        Ok(AutomorphismReport { inner_count: inner.len(), automorphisms, normal_subgroups })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    #[test]
    fn small_automorphism_groups() {
        let caps = Caps::default();
        let z2 = FiniteGroup::from_permutations(2, &[vec![1, 0]], &caps).unwrap();
        assert_eq!(z2.automorphism_group(&caps).unwrap().automorphisms.len(), 1);

        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], &caps).unwrap();
        let r = v4.automorphism_group(&caps).unwrap();
        assert_eq!(r.automorphisms.len(), 6);
        let chars: Vec<usize> = r.characteristic_subgroups().map(Subgroup::order).collect();
        assert_eq!(chars, vec![1, 4]);

        let r = s3().automorphism_group(&caps).unwrap();
        assert_eq!(r.automorphisms.len(), 6);
        assert!(r.all_inner());

        let trivial = FiniteGroup::trivial().automorphism_group(&caps).unwrap();
        assert_eq!(trivial.automorphisms.len(), 1);
    }

    #[test]
    fn automorphisms_are_homs() {
        let caps = Caps::default();
        let g = s3();
        for a in g.automorphism_group(&caps).unwrap().automorphisms {
            assert!(GroupHom::new(&g, &g, a.map()).is_ok());
            assert!(a.is_injective());
        }
    }
}
