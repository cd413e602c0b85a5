use super::{FiniteGroup, GroupHom};
use crate::caps::Caps;
use crate::error::{Error, Result};

impl FiniteGroup {
    /// `Z/n` with ids the residues.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        Self::from_raw(n, table, None)
    }

    /// `a × b` with the pair `(x, y)` at id `x + |a|·y`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, caps: &Caps) -> Result<Self> {
        let n = a.order() * b.order();
        if n > caps.order {
            return Err(Error::CapExceeded { what: "group order", size: n, cap: caps.order });
        }
        let na = a.order();
        let mut table = Vec::with_capacity(n * n);
        for u in 0..n {
            let (ux, uy) = (u % na, u / na);
            for v in 0..n {
                let (vx, vy) = (v % na, v / na);
                table.push((a.mul(ux, vx) + na * b.mul(uy, vy)) as u32);
            }
        }
        Ok(Self::from_raw(n, table, None))
    }

    /// `p^k` as tuples in mixed radix: coordinate `i` of id `x` is
    /// `(x / |p|^i) mod |p|`.
    pub fn direct_power(p: &FiniteGroup, k: usize, caps: &Caps) -> Result<Self> {
        let n = checked_power(p.order(), k, caps.order)?;
        let base = p.order();
        let rows: Vec<Vec<u32>> = {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .map(|u| {
                    let mut row = Vec::with_capacity(n);
                    for v in 0..n {
                        let (mut a, mut b, mut scale, mut acc) = (u, v, 1, 0);
                        for _ in 0..k {
                            acc += scale * p.mul(a % base, b % base);
                            a /= base;
                            b /= base;
                            scale *= base;
                        }
                        row.push(acc as u32);
                    }
                    row
                })
                .collect()
        };
        Ok(Self::from_raw(n, rows.concat(), None))
    }

    /// Projection `p^k → p^j` forgetting the coordinates `j..k`.
    pub fn power_projection(p: &FiniteGroup, k: usize, j: usize) -> GroupHom {
        assert!(j <= k);
        let n = p.order().pow(k as u32);
        let m = p.order().pow(j as u32);
        GroupHom::new_unchecked(m, (0..n).map(|x| x % m).collect())
    }
}

pub(crate) fn checked_power(base: usize, k: usize, cap: usize) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..k {
        n = n.checked_mul(base).filter(|&v| v <= cap).ok_or(Error::CapExceeded {
            what: "group order",
            size: base.saturating_pow(k as u32),
            cap,
        })?;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::super::tests::s3;
    use super::*;

    #[test]
    fn products() {
        let caps = Caps::default();
        let g = FiniteGroup::direct_product(&s3(), &FiniteGroup::cyclic(2), &caps).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.conjugacy_classes().len(), 6);
        let p = FiniteGroup::direct_power(&s3(), 2, &caps).unwrap();
        assert_eq!(p.order(), 36);
        assert_eq!(p.conjugacy_classes().len(), 9);
        let pr = FiniteGroup::power_projection(&s3(), 2, 1);
        assert!(GroupHom::new(&p, &s3(), pr.map()).is_ok());
        assert!(FiniteGroup::direct_power(&s3(), 6, &caps).is_err());
        assert_eq!(FiniteGroup::direct_power(&s3(), 0, &caps).unwrap().order(), 1);
    }
}
