use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `Some(k)` when `n = p^k`.
pub(crate) fn prime_power_exponent(n: usize, p: usize) -> Option<u32> {
    let mut n = n;
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

impl FiniteGroup {
    /// A maximal p-subgroup, grown from the trivial subgroup by adjoining
    /// p-elements in id order while the result stays a p-group.
    ///
    /// For nilpotent groups the result is normal, hence the unique Sylow
    /// p-subgroup.
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup> {
        if !is_prime(p as u64) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        let p_elements: Vec<usize> = self
            .elements()
            .filter(|&x| prime_power_exponent(self.element_order(x), p).is_some())
            .collect();
        let mut current = self.trivial_subgroup();
        'grow: loop {
            for &x in &p_elements {
                if current.contains(x) {
                    continue;
                }
                let next = self.extend(&current, x);
                if prime_power_exponent(next.order(), p).is_some() {
                    current = next;
                    continue 'grow;
                }
            }
            break;
        }
        if self.is_nilpotent() {
            assert!(self.is_normal(&current), "Sylow subgroup of a nilpotent group must be normal");
        }
        Ok(current)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;
    use crate::caps::Caps;

    #[test]
    fn sylow_examples() {
        let g = s3();
        assert!(g.sylow_subgroup(5).unwrap().is_trivial());
        assert_eq!(g.sylow_subgroup(3).unwrap(), g.derived_subgroup());
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 2);
        let z12 = FiniteGroup::from_permutations(12, &[(1..12).chain([0]).collect()], &Caps::default()).unwrap();
        let p = z12.sylow_subgroup(2).unwrap();
        assert_eq!(p.order(), 4);
        assert!(z12.is_normal(&p));
        assert!(g.sylow_subgroup(4).is_err());
    }
}
