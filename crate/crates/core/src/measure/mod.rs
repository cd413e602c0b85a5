//! Commuting-pair statistics, Neumann decompositions, the ρ functions and
//! the inequalities relating them.

mod inequality;
mod rho;
mod wedge;

use std::cmp::Reverse;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::exact::serialize_ratio;
use crate::group::{FiniteGroup, Subgroup};

pub use inequality::{rho_wedge_of_order, verify_inequalities, BetaTable, Check, Ineq2Detail, InequalityReport, OrderInequalities};
pub use rho::{rho_r_of, rho_table, FamilyMode, RhoEntry, RhoKind, RhoTable};
pub use wedge::{rho_wedge, ExteriorReport};

/// A ρ value, possibly the ∞ marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RhoValue {
    Finite(u64),
    Infinite,
}

impl RhoValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            RhoValue::Finite(v) => Some(v),
            RhoValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for RhoValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RhoValue::Finite(v) => write!(f, "{v}"),
            RhoValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for RhoValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RhoValue::Finite(v) => s.serialize_u64(*v),
            RhoValue::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutingStats {
    pub order: usize,
    pub pairs: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub fraction: Ratio<u64>,
    pub classes: usize,
}

/// `|{(x, y) : xy = yx}|` by a double loop, cross-checked against
/// `|G| · (number of classes)`.
pub fn commuting_pairs(g: &FiniteGroup, caps: &Caps) -> Result<CommutingStats> {
    let n = g.order();
    if n > caps.order {
        return Err(Error::CapExceeded { what: "group order", size: n, cap: caps.order });
    }
    let pairs: u64 = (0..n)
        .into_par_iter()
        .map(|x| (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as u64)
        .sum();
    let classes = g.conjugacy_classes().len();
    if pairs != (n * classes) as u64 {
        return Err(Error::Invalid(format!("commuting count {pairs} disagrees with {n} × {classes} classes")));
    }
    let fraction = Ratio::new(pairs, (n * n) as u64);
    Ok(CommutingStats { order: n, pairs, fraction, classes })
}

/// Normal `K ≤ N` with `N/K` abelian minimizing `|K|·|L:N|²`.
#[derive(Debug, Clone)]
pub struct NeumannWitness {
    pub k: Subgroup,
    pub n: Subgroup,
    pub value: u64,
    pub admissible_pairs: usize,
    pub pairs: u64,
    /// `pairs · value ≥ |L|²`.
    pub bound_holds: bool,
}

impl NeumannWitness {
    pub fn k_size(&self) -> usize {
        self.k.order()
    }

    /// `|L : N|`, given `|L|`.
    pub fn n_index(&self, order: usize) -> usize {
        order / self.n.order()
    }

    /// `|L|² / value`.
    pub fn bound(&self, order: usize) -> Ratio<u64> {
        Ratio::new((order * order) as u64, self.value)
    }
}

fn neumann_value(order: usize, k: &Subgroup, n: &Subgroup) -> u64 {
    let index = (order / n.order()) as u64;
    k.order() as u64 * index * index
}

/// All normal pairs `K ≤ N` with `N/K` abelian, with their values, in no
/// particular order.
pub fn neumann_admissible_pairs(g: &FiniteGroup) -> Vec<(Subgroup, Subgroup, u64)> {
    let normals = g.enumerate_normal_subgroups();
    let mut out = Vec::new();
    for n in &normals {
        let d = g.commutator(n, n);
        for k in normals.iter().filter(|k| d.is_subgroup_of(k) && k.is_subgroup_of(n)) {
            out.push((k.clone(), n.clone(), neumann_value(g.order(), k, n)));
        }
    }
    out
}

/// Ties go to smaller `|K|`, then larger `|N|`, then the lexicographically
/// smaller element lists.
pub fn neumann_search(g: &FiniteGroup, caps: &Caps) -> Result<NeumannWitness> {
    let candidates = neumann_admissible_pairs(g);
    let admissible_pairs = candidates.len();
    let (k, n, value) = candidates
        .into_iter()
        .min_by(|(k1, n1, v1), (k2, n2, v2)| {
            (v1, k1.order(), Reverse(n1.order()), k1.element_ids(), n1.element_ids()).cmp(&(
                v2,
                k2.order(),
                Reverse(n2.order()),
                k2.element_ids(),
                n2.element_ids(),
            ))
        })
        .expect("K = N = L is always admissible");
    let pairs = commuting_pairs(g, caps)?.pairs;
    let order = g.order() as u128;
    let bound_holds = pairs as u128 * value as u128 >= order * order;
    Ok(NeumannWitness { k, n, value, admissible_pairs, pairs, bound_holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonMember {
    pub name: String,
    pub order: usize,
    #[serde(serialize_with = "serialize_ratio")]
    pub fraction: Ratio<u64>,
    /// `|L : N|` for the Neumann witness.
    pub n1: usize,
    /// `|[N, N]|` for the Neumann witness.
    pub n2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonReport {
    /// The least commuting fraction over the family.
    #[serde(serialize_with = "serialize_ratio")]
    pub epsilon: Ratio<u64>,
    pub members: Vec<EpsilonMember>,
    /// Fractions strictly decrease along the family.
    pub decays: bool,
    /// Neither `n1` nor `n2` grows between the last two members.
    pub witnesses_bounded: bool,
}

pub fn epsilon_evidence(family: &[(String, FiniteGroup)], caps: &Caps) -> Result<EpsilonReport> {
    if family.is_empty() {
        return Err(Error::Invalid("empty family".into()));
    }
    let members = family
        .iter()
        .map(|(name, g)| {
            let stats = commuting_pairs(g, caps)?;
            let w = neumann_search(g, caps)?;
            Ok(EpsilonMember {
                name: name.clone(),
                order: g.order(),
                fraction: stats.fraction,
                n1: w.n_index(g.order()),
                n2: g.commutator(&w.n, &w.n).order(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let epsilon = members.iter().map(|m| m.fraction).min().expect("nonempty");
    let decays = members.len() >= 2 && members.windows(2).all(|w| w[1].fraction < w[0].fraction);
    let witnesses_bounded = match members.as_slice() {
        [.., a, b] => b.n1 <= a.n1 && b.n2 <= a.n2,
        _ => true,
    };
    Ok(EpsilonReport { epsilon, members, decays, witnesses_bounded })
}
