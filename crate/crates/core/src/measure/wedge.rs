use serde::Serialize;

use super::RhoValue;
use crate::error::{Error, Result};
use crate::gfp;
use crate::group::{is_prime, prime_power_exponent, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExteriorReport {
    pub p: usize,
    pub order: usize,
    /// `|W|` for `W = [L, L]`.
    pub w_order: usize,
    pub w_dim: usize,
    /// `dim U` for `U = L/W`.
    pub u_dim: usize,
    pub wedge_dim: usize,
    pub image_dim: usize,
    pub kernel_dim: usize,
    /// Largest `k` with `k · dim U ≤ dim Ker f_L`; ∞ when `dim U = 0`.
    pub k: RhoValue,
}

/// A basis of an elementary abelian p-group given by its member ids, chosen
/// greedily in id order, and the coordinates of every member.
fn elementary_basis(g: &FiniteGroup, members: &[usize], p: usize) -> (Vec<usize>, Vec<Option<Vec<u32>>>) {
    let mut coords: Vec<Option<Vec<u32>>> = vec![None; g.order()];
    coords[0] = Some(Vec::new());
    let mut span = vec![0usize];
    let mut basis = Vec::new();
    for &x in members {
        if coords[x].is_some() {
            continue;
        }
        let k = basis.len();
        basis.push(x);
        let old = std::mem::take(&mut span);
        let mut power = 0;
        for j in 0..p as u32 {
            for &s in &old {
                let y = g.mul(s, power);
                let mut c = coords[s].clone().expect("in span");
                c.resize(k, 0);
                c.push(j);
                coords[y] = Some(c);
                span.push(y);
            }
            power = g.mul(power, x);
        }
    }
    let d = basis.len();
    for c in coords.iter_mut().flatten() {
        c.resize(d, 0);
    }
    (basis, coords)
}

/// Builds `f_L : Λ²(L/W) → W`, `e_i ∧ e_j ↦ [lift e_i, lift e_j]`, and
/// reads off its kernel over `GF(p)`.
pub fn rho_wedge(l: &FiniteGroup) -> Result<ExteriorReport> {
    let n = l.order();
    if n == 1 {
        return Err(Error::Hypothesis("trivial group: the prime is undetermined".into()));
    }
    let p = (2..=n).find(|&d| n.is_multiple_of(d)).expect("n > 1");
    debug_assert!(is_prime(p as u64));
    if prime_power_exponent(n, p).is_none() {
        return Err(Error::Hypothesis(format!("order {n} is not a prime power")));
    }
    let w = l.derived_subgroup();
    let center = l.center();
    if !w.is_subgroup_of(&center) {
        return Err(Error::Hypothesis("[L, L] is not central: class exceeds 2".into()));
    }
    if let Some(x) = w.elements().find(|&x| l.pow(x, p as u64) != 0) {
        return Err(Error::Hypothesis(format!("W is not elementary abelian: element {x} has order > {p}")));
    }
    if let Some(x) = l.elements().find(|&x| !w.contains(l.pow(x, p as u64))) {
        return Err(Error::Hypothesis(format!("L/W is not elementary abelian: element {x} has order > {p} modulo W")));
    }
    let (q, proj) = l.quotient(&w)?;
    let q_members: Vec<usize> = q.elements().collect();
    let (u_basis, _) = elementary_basis(&q, &q_members, p);
    let lifts: Vec<usize> = u_basis.iter().map(|&e| l.elements().find(|&x| proj.apply(x) == e).expect("surjective")).collect();
    let w_members: Vec<usize> = w.elements().collect();
    let (w_basis, w_coords) = elementary_basis(l, &w_members, p);
    let d = lifts.len();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c = l.comm(lifts[i], lifts[j]);
            rows.push(w_coords[c].clone().expect("commutator lies in W"));
        }
    }
    let wedge_dim = d * (d.saturating_sub(1)) / 2;
    let image_dim = if w_basis.is_empty() { 0 } else { gfp::rank(&rows, p as u32) };
    let kernel_dim = wedge_dim - image_dim;
    let k = kernel_dim.checked_div(d).map_or(RhoValue::Infinite, |k| RhoValue::Finite(k as u64));
    Ok(ExteriorReport {
        p,
        order: n,
        w_order: w.order(),
        w_dim: w_basis.len(),
        u_dim: d,
        wedge_dim,
        image_dim,
        kernel_dim,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    #[test]
    fn elementary_abelian() {
        let e8 = FiniteGroup::direct_power(&FiniteGroup::cyclic(2), 3, &Caps::default()).unwrap();
        let r = rho_wedge(&e8).unwrap();
        assert_eq!((r.u_dim, r.wedge_dim, r.kernel_dim, r.k), (3, 3, 3, RhoValue::Finite(1)));
    }

    #[test]
    fn extraspecial_order_8() {
        let q8 = FiniteGroup::from_permutations(
            8,
            &[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
            &Caps::default(),
        )
        .unwrap();
        let r = rho_wedge(&q8).unwrap();
        assert_eq!((r.p, r.u_dim, r.wedge_dim, r.image_dim, r.kernel_dim), (2, 2, 1, 1, 0));
        assert_eq!(r.k, RhoValue::Finite(0));
    }

    #[test]
    fn hypotheses() {
        assert!(matches!(rho_wedge(&FiniteGroup::cyclic(4)), Err(Error::Hypothesis(_))));
        assert!(matches!(rho_wedge(&FiniteGroup::cyclic(6)), Err(Error::Hypothesis(_))));
        assert!(matches!(rho_wedge(&FiniteGroup::trivial()), Err(Error::Hypothesis(_))));
        let r = rho_wedge(&FiniteGroup::cyclic(3)).unwrap();
        assert_eq!((r.u_dim, r.kernel_dim, r.k), (1, 0, RhoValue::Finite(0)));
    }
}
