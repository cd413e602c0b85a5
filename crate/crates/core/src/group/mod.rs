//! Finite groups given by a full multiplication table.
//!
//! Element ids run over `0..order` with `0` the identity. Every algorithm in
//! the crate works on ids, so a group built from permutations and a group
//! read from a table file are handled the same way.

mod automorphism;
mod hom;
mod lattice;
mod perm;
mod products;
mod rank;
mod spread;
mod structure;
mod subgroup;
mod sylow;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::caps::Caps;
use crate::error::{Error, Result};

pub use automorphism::{AutomorphismReport, CharacteristicMark};
pub(crate) use products::checked_power;
pub(crate) use sylow::{is_prime, prime_power_exponent};
pub use hom::GroupHom;
pub use perm::{Perm, PermPresentation};
pub use spread::{ConjugateSpread, SpreadWitness};
pub use structure::{Series, SeriesKind};
pub use subgroup::Subgroup;

/// A finite group stored as its complete Cayley table.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    perms: Option<PermPresentation>,
    generators: OnceLock<Vec<u32>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        Self {
            order: self.order,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            perms: self.perms.clone(),
            generators: self.generators.clone(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// The group with one element.
    pub fn trivial() -> Self {
        Self::from_raw(1, vec![0], None)
    }

    /// Builds a group from its full table, validating the Latin square
    /// property, the identity at id 0 and associativity.
    pub fn from_table(rows: &[Vec<usize>], caps: &Caps) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > caps.order {
            return Err(Error::CapExceeded { what: "group order", size: n, cap: caps.order });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("row {i} contains id {x} >= {n}")));
                }
                table.push(x as u32);
            }
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(Error::InvalidTable(format!("id 0 is not the identity at {x}")));
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTable(format!("row {i} repeats id {v}")));
                }
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTable(format!("column {j} repeats id {v}")));
                }
            }
        }
        let group = Self::from_raw(n, table, None);
        group.check_associative(caps)?;
        Ok(group)
    }

    /// Builds the permutation group generated by `generators` acting on
    /// `0..degree`. Elements are numbered in breadth-first discovery order
    /// starting from the identity.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], caps: &Caps) -> Result<Self> {
        let gens = generators
            .iter()
            .enumerate()
            .map(|(index, images)| {
                Perm::from_images(images).ok_or(Error::NotAPermutation { index, degree }).and_then(|p| {
                    if p.degree() == degree {
                        Ok(p)
                    } else {
                        Err(Error::NotAPermutation { index, degree })
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::from([(identity, 0)]);
        // right[x * k + i] = x * gens[i]
        let mut right: Vec<u32> = Vec::new();
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut next = 0;
        while next < elements.len() {
            for (i, g) in gens.iter().enumerate() {
                let y = elements[next].then(g);
                let id = match index.get(&y) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= caps.order {
                            return Err(Error::CapExceeded {
                                what: "group order",
                                size: id + 1,
                                cap: caps.order,
                            });
                        }
                        index.insert(y.clone(), id as u32);
                        elements.push(y);
                        parent.push((next as u32, i as u32));
                        id as u32
                    }
                };
                right.push(id);
            }
            next += 1;
        }

        let n = elements.len();
        let k = gens.len();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            table[x * n] = x as u32;
            for y in 1..n {
                let (p, g) = parent[y];
                let xp = table[x * n + p as usize] as usize;
                table[x * n + y] = right[xp * k + g as usize];
            }
        }
        let presentation = PermPresentation::new(degree, gens, elements);
        Ok(Self::from_raw(n, table, Some(presentation)))
    }

    /// Builds a group from a list of distinct permutations already closed
    /// under composition, keeping the given numbering. `perms[0]` must be the
    /// identity.
    pub fn from_closed_permutations(perms: Vec<Perm>) -> Result<Self> {
        let n = perms.len();
        if n == 0 || !perms[0].is_identity() {
            return Err(Error::InvalidTable("first permutation must be the identity".into()));
        }
        let index: HashMap<&Perm, u32> = perms.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        if index.len() != n {
            return Err(Error::InvalidTable("repeated permutation".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for x in &perms {
            for y in &perms {
                let z = x.then(y);
                let id = index
                    .get(&z)
                    .ok_or_else(|| Error::InvalidTable("permutations are not closed".into()))?;
                table.push(*id);
            }
        }
        let degree = perms[0].degree();
        let presentation = PermPresentation::new(degree, Vec::new(), perms);
        Ok(Self::from_raw(n, table, Some(presentation)))
    }

    pub(crate) fn from_raw(order: usize, table: Vec<u32>, perms: Option<PermPresentation>) -> Self {
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            inverse[x] = row.iter().position(|&v| v == 0).expect("row contains identity") as u32;
        }
        Self { order, table, inverse, perms, generators: OnceLock::new() }
    }

    fn check_associative(&self, caps: &Caps) -> Result<()> {
        let n = self.order;
        let witnesses: Vec<usize> = if n <= caps.exhaustive_associativity {
            (0..n).collect()
        } else {
            // Light's test: associativity at every element of a generating
            // set implies associativity everywhere.
            self.magma_generators()
        };
        for &b in &witnesses {
            for a in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Elements whose left-associated words reach every element. Does not
    /// assume associativity.
    fn magma_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[0] = true;
        for x in 0..n {
            if reached[x] {
                continue;
            }
            gens.push(x);
            let mut queue: Vec<usize> = (0..n).filter(|&y| reached[y]).collect();
            let mut i = 0;
            while i < queue.len() {
                let y = queue[i];
                for &g in &gens {
                    let z = self.mul(y, g);
                    if !reached[z] {
                        reached[z] = true;
                        queue.push(z);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^g = g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Table rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn permutations(&self) -> Option<&PermPresentation> {
        self.perms.as_ref()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..].iter().all(|&b| self.mul(a as usize, b as usize) == self.mul(b as usize, a as usize))
        })
    }

    /// A generating set chosen greedily in id order.
    pub fn generators(&self) -> &[u32] {
        self.generators.get_or_init(|| {
            let whole = self.generate((0..self.order).collect::<Vec<_>>());
            whole.generators().iter().map(|&g| g as u32).collect()
        })
    }

    /// Applies a relabelling of ids. `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return Err(Error::Invalid("relabelling must fix the identity".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid("relabelling is not a bijection".into()));
            }
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)] as u32;
            }
        }
        Ok(Self::from_raw(n, table, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Caps::default()).unwrap()
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_table(&[vec![0]], &Caps::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
        let p = g.permutations().unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(p.element(x).then(p.element(y)), *p.element(g.mul(x, y)));
            }
        }
    }

    #[test]
    fn rejects_missing_id() {
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
        assert!(matches!(FiniteGroup::from_table(&rows, &Caps::default()), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn rejects_non_associative() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&rows, &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
        let caps = Caps { exhaustive_associativity: 1, ..Caps::default() };
        let err = FiniteGroup::from_table(&rows, &caps).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn rejects_bad_generator() {
        let err = FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], &Caps::default()).unwrap_err();
        assert_eq!(err, Error::NotAPermutation { index: 0, degree: 3 });
    }

    #[test]
    fn order_cap() {
        let caps = Caps { order: 5, ..Caps::default() };
        let err = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &caps).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn light_test_accepts_large_group() {
        let g = s3();
        let caps = Caps { exhaustive_associativity: 2, ..Caps::default() };
        let h = FiniteGroup::from_table(&g.rows(), &caps).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn relabel_keeps_structure() {
        let g = s3();
        let h = g.relabel(&[0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(h.conjugacy_classes().len(), 3);
        assert!(g.relabel(&[1, 0, 2, 3, 4, 5]).is_err());
    }
}
