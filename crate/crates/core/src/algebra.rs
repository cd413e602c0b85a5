//! Finite rings given by element ids, and the splitting of a reduced
//! commutative ring into fields via its primitive idempotents.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FiniteField;

/// A finite ring on ids `0..size()`, with `0` the additive identity.
pub trait FiniteRing {
    fn size(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn one(&self) -> Option<usize>;

    /// Additive order of the identity (of any element if there is none).
    fn characteristic(&self) -> usize {
        let x = self.one().unwrap_or(if self.size() > 1 { 1 } else { 0 });
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }
}

/// A commutative ring stored as addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommutativeAlgebra {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    one: Option<usize>,
}

impl FiniteCommutativeAlgebra {
    /// Validates the ring axioms exhaustively and commutativity.
    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, caps: &Caps) -> Result<Self> {
        let n = add.len();
        if n == 0 || mul.len() != n || add.iter().chain(&mul).any(|r| r.len() != n) {
            return Err(Error::InvalidTable("tables must be square and of equal size".into()));
        }
        if n > caps.exhaustive_associativity {
            return Err(Error::CapExceeded { what: "ring table size", size: n, cap: caps.exhaustive_associativity });
        }
        if add.iter().chain(&mul).flatten().any(|&x| x >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let flat = |t: Vec<Vec<usize>>| t.into_iter().flatten().map(|x| x as u32).collect::<Vec<_>>();
        let ring = Self::new_unchecked(n, flat(add), flat(mul));
        ring.check_axioms()?;
        Ok(ring)
    }

    fn new_unchecked(size: usize, add: Vec<u32>, mul: Vec<u32>) -> Self {
        let one = (0..size).find(|&e| (0..size).all(|x| mul[e * size + x] as usize == x));
        Self { size, add, mul, one }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if self.add(0, a) != a {
                return Err(Error::InvalidTable("0 is not the additive identity".into()));
            }
            if !(0..n).any(|b| self.add(a, b) == 0) {
                return Err(Error::InvalidTable(format!("{a} has no additive inverse")));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::InvalidTable("addition is not commutative".into()));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::NotCommutative);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(Error::InvalidTable(format!("axiom fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Copies any ring into tables.
    pub fn materialize<R: FiniteRing + ?Sized>(ring: &R, caps: &Caps) -> Result<Self> {
        let n = ring.size();
        if n > caps.ring_size {
            return Err(Error::CapExceeded { what: "ring size", size: n, cap: caps.ring_size });
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(ring.add(a, b) as u32);
                mul.push(ring.mul(a, b) as u32);
            }
        }
        Ok(Self { size: n, add, mul, one: ring.one() })
    }

    /// `Z/n`.
    pub fn integers_mod(n: usize) -> Self {
        let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let mul = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u32).collect();
        Self::new_unchecked(n, add, mul)
    }
}

impl FiniteRing for FiniteCommutativeAlgebra {
    fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    fn one(&self) -> Option<usize> {
        self.one
    }
}

pub fn is_commutative<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    let n = ring.size();
    (0..n).all(|a| (a + 1..n).all(|b| ring.mul(a, b) == ring.mul(b, a)))
}

/// The first nonzero element some power of which vanishes, by repeated
/// squaring: in a ring of size n a nilpotent x has x^m = 0 for some
/// m ≤ log₂ n + 1, so squaring until 2^k ≥ n suffices.
pub fn first_nilpotent<R: FiniteRing + ?Sized>(ring: &R) -> Option<usize> {
    let n = ring.size();
    let rounds = usize::BITS - n.leading_zeros();
    (1..n).find(|&x| {
        let mut y = x;
        for _ in 0..=rounds {
            if y == 0 {
                return true;
            }
            y = ring.mul(y, y);
        }
        y == 0
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotentCheck {
    pub nilpotent_free: bool,
    pub witness: Option<usize>,
}

pub fn nilpotent_free_check<R: FiniteRing + ?Sized>(ring: &R, caps: &Caps) -> Result<NilpotentCheck> {
    if ring.size() > caps.ring_size {
        return Err(Error::CapExceeded { what: "ring size", size: ring.size(), cap: caps.ring_size });
    }
    let witness = first_nilpotent(ring);
    Ok(NilpotentCheck { nilpotent_free: witness.is_none(), witness })
}

/// Whether the ring is a field: commutative, with identity, and every
/// nonzero element invertible.
pub fn is_field<R: FiniteRing + ?Sized>(ring: &R) -> bool {
    let n = ring.size();
    let Some(one) = ring.one() else { return false };
    n > 1 && is_commutative(ring) && (1..n).all(|a| (1..n).any(|b| ring.mul(a, b) == one))
}

/// One field factor `eR` of a reduced commutative ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldFactor {
    pub idempotent: usize,
    /// Elements of `eR`, ascending.
    pub elements: Vec<usize>,
    pub characteristic: usize,
    pub degree: u32,
    /// `(element of eR, element of the bundled field)` pairs, when a bundled
    /// field of this order exists.
    pub isomorphism: Option<Vec<(usize, usize)>>,
}

impl FieldFactor {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Splits a commutative ring with identity and no nonzero nilpotents into
/// the fields `eR` for its primitive idempotents `e`. The product of the
/// factors is checked to reconstruct the ring.
pub fn mr_decompose<R: FiniteRing + ?Sized>(ring: &R, caps: &Caps) -> Result<Vec<FieldFactor>> {
    let n = ring.size();
    if n > caps.ring_size {
        return Err(Error::CapExceeded { what: "ring size", size: n, cap: caps.ring_size });
    }
    if !is_commutative(ring) {
        return Err(Error::NotCommutative);
    }
    let one = ring.one().ok_or(Error::NoIdentity)?;
    if let Some(witness) = first_nilpotent(ring) {
        return Err(Error::Nilpotent { witness });
    }
    let idempotents: Vec<usize> = (1..n).filter(|&e| ring.mul(e, e) == e).collect();
    let primitive: Vec<usize> = idempotents
        .iter()
        .copied()
        .filter(|&e| idempotents.iter().all(|&f| f == e || ring.mul(e, f) != f))
        .collect();

    let mut factors = Vec::with_capacity(primitive.len());
    for &e in &primitive {
        let mut elements: Vec<usize> = (0..n).map(|x| ring.mul(e, x)).collect();
        elements.sort_unstable();
        elements.dedup();
        let sub = Restricted { ring, elements: &elements, one: e };
        if !is_field(&sub) {
            return Err(Error::Hypothesis(format!("factor for idempotent {e} is not a field")));
        }
        let characteristic = sub.characteristic();
        let degree = degree_of(elements.len(), characteristic)
            .ok_or_else(|| Error::Hypothesis("factor order is not a prime power".into()))?;
        let isomorphism = FiniteField::with_order(elements.len()).ok().and_then(|f| field_isomorphism(&sub, &f));
        factors.push(FieldFactor { idempotent: e, elements, characteristic, degree, isomorphism });
    }

    // reconstruction: orthogonal idempotents summing to 1, sizes multiply to
    // |R|, and x ↦ (e_i x) is injective
    let sum = primitive.iter().fold(0, |acc, &e| ring.add(acc, e));
    let orthogonal = primitive
        .iter()
        .enumerate()
        .all(|(i, &a)| primitive[i + 1..].iter().all(|&b| ring.mul(a, b) == 0));
    let product: usize = factors.iter().map(FieldFactor::order).product();
    let mut images = std::collections::HashSet::new();
    let injective = (0..n).all(|x| images.insert(primitive.iter().map(|&e| ring.mul(e, x)).collect::<Vec<_>>()));
    if sum != one || !orthogonal || product != n || !injective {
        return Err(Error::Hypothesis("field factors do not reconstruct the ring".into()));
    }
    Ok(factors)
}

fn degree_of(order: usize, p: usize) -> Option<u32> {
    let mut k = 0;
    let mut q = 1;
    while q < order {
        q *= p;
        k += 1;
    }
    (q == order).then_some(k)
}

/// The ideal `eR` viewed as a ring with identity `e`, ids by position.
struct Restricted<'a, R: ?Sized> {
    ring: &'a R,
    elements: &'a [usize],
    one: usize,
}

impl<R: FiniteRing + ?Sized> Restricted<'_, R> {
    fn pos(&self, x: usize) -> usize {
        self.elements.binary_search(&x).expect("closed under the operations")
    }
}

impl<R: FiniteRing + ?Sized> FiniteRing for Restricted<'_, R> {
    fn size(&self) -> usize {
        self.elements.len()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.pos(self.ring.add(self.elements[a], self.elements[b]))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.pos(self.ring.mul(self.elements[a], self.elements[b]))
    }

    fn one(&self) -> Option<usize> {
        Some(self.pos(self.one))
    }
}

/// Matches a generator of the multiplicative group of `k` against each
/// generator of `f` and keeps the first power map that is additive.
fn field_isomorphism<R: FiniteRing + ?Sized>(k: &Restricted<'_, R>, f: &FiniteField) -> Option<Vec<(usize, usize)>> {
    let q = k.size();
    if q != f.order() {
        return None;
    }
    let powers = |ring: &dyn Fn(usize, usize) -> usize, g: usize, one: usize| -> Vec<usize> {
        let mut out = vec![one];
        let mut x = g;
        while x != one {
            out.push(x);
            x = ring(x, g);
        }
        out
    };
    let kmul = |a, b| k.mul(a, b);
    let fmul = |a, b| f.mul(a, b);
    let kone = k.one()?;
    let alpha = (1..q).find(|&g| powers(&kmul, g, kone).len() == q - 1)?;
    let kpow = powers(&kmul, alpha, kone);
    for beta in (1..q).filter(|&g| powers(&fmul, g, 1).len() == q - 1) {
        let fpow = powers(&fmul, beta, 1);
        let mut map = vec![0usize; q];
        for (x, y) in kpow.iter().zip(&fpow) {
            map[*x] = *y;
        }
        let additive = (0..q).all(|a| (0..q).all(|b| map[k.add(a, b)] == f.add(map[a], map[b])));
        if additive {
            return Some((0..q).map(|x| (k.elements[x], map[x])).collect());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_is_single_factor() {
        let f = FiniteField::by_name("GF4").unwrap();
        let factors = mr_decompose(&f, &Caps::default()).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].order(), 4);
        assert_eq!(factors[0].degree, 2);
        assert!(factors[0].isomorphism.is_some());
    }

    #[test]
    fn integers_mod_four_has_nilpotent() {
        let z4 = FiniteCommutativeAlgebra::integers_mod(4);
        assert_eq!(mr_decompose(&z4, &Caps::default()), Err(Error::Nilpotent { witness: 2 }));
        let check = nilpotent_free_check(&z4, &Caps::default()).unwrap();
        assert_eq!(check.witness, Some(2));
    }

    #[test]
    fn integers_mod_six_splits() {
        let z6 = FiniteCommutativeAlgebra::integers_mod(6);
        let factors = mr_decompose(&z6, &Caps::default()).unwrap();
        let orders: Vec<usize> = factors.iter().map(FieldFactor::order).collect();
        assert_eq!(orders, vec![2, 3]);
        assert!(factors.iter().all(|f| f.isomorphism.is_some()));
    }

    #[test]
    fn tables_are_validated() {
        let z3 = FiniteCommutativeAlgebra::integers_mod(3);
        let rows = |t: &dyn Fn(usize, usize) -> usize| (0..3).map(|a| (0..3).map(|b| t(a, b)).collect()).collect();
        let ok = FiniteCommutativeAlgebra::from_tables(rows(&|a, b| z3.add(a, b)), rows(&|a, b| z3.mul(a, b)), &Caps::default());
        assert_eq!(ok.unwrap(), z3);
        let bad = FiniteCommutativeAlgebra::from_tables(rows(&|a, b| z3.add(a, b)), rows(&|a, _| a), &Caps::default());
        assert!(bad.is_err());
    }
}
