use std::collections::BTreeMap;

use serde::Serialize;

use super::{commuting_pairs, RhoValue};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoKind {
    Com,
    R,
}

/// Which family the corpus stands for. Only recorded, the computation is the
/// same.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyMode {
    #[default]
    Quotients,
    Subgroups,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoEntry {
    pub order: usize,
    pub value: RhoValue,
    /// Corpus groups of this order, by name.
    pub groups: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoTable {
    pub kind: RhoKind,
    pub family: FamilyMode,
    pub entries: Vec<RhoEntry>,
}

impl RhoTable {
    pub fn get(&self, order: usize) -> Option<RhoValue> {
        self.entries.iter().find(|e| e.order == order).map(|e| e.value)
    }
}

/// `max_H rank(H / core(H))` over all subgroups `H`.
pub fn rho_r_of(l: &FiniteGroup, caps: &Caps) -> Result<usize> {
    let mut best = 0;
    for h in l.enumerate_subgroups(caps)? {
        let core = l.core(&h);
        if core == h {
            continue;
        }
        let (hg, inclusion) = l.subgroup_as_group(&h);
        let mut pos = vec![usize::MAX; l.order()];
        for j in hg.elements() {
            pos[inclusion.apply(j)] = j;
        }
        let core_ids: Vec<usize> = core.elements().map(|x| pos[x]).collect();
        let (q, _) = hg.quotient(&hg.subgroup(&core_ids)?)?;
        best = best.max(q.prufer_rank(caps)?);
    }
    Ok(best)
}

/// Per order from 1 to `max_order` (default: largest corpus order), the
/// least commuting count (`Com`) or the largest `rho_r_of` (`R`) over the
/// corpus groups of that order; orders with no group get ∞.
pub fn rho_table(
    corpus: &[(String, FiniteGroup)],
    kind: RhoKind,
    family: FamilyMode,
    max_order: Option<usize>,
    caps: &Caps,
) -> Result<RhoTable> {
    let max = max_order.unwrap_or_else(|| corpus.iter().map(|(_, g)| g.order()).max().unwrap_or(0));
    let mut by_order: BTreeMap<usize, (RhoValue, Vec<String>)> = BTreeMap::new();
    for (name, g) in corpus.iter().filter(|(_, g)| g.order() <= max) {
        let v = match kind {
            RhoKind::Com => commuting_pairs(g, caps)?.pairs,
            RhoKind::R => rho_r_of(g, caps).map_err(|e| match e {
                Error::CapExceeded { .. } => e,
                other => Error::Invalid(format!("{name}: {other}")),
            })? as u64,
        };
        let entry = by_order.entry(g.order()).or_insert((RhoValue::Infinite, Vec::new()));
        entry.0 = match (kind, entry.0) {
            (_, RhoValue::Infinite) => RhoValue::Finite(v),
            (RhoKind::Com, RhoValue::Finite(old)) => RhoValue::Finite(old.min(v)),
            (RhoKind::R, RhoValue::Finite(old)) => RhoValue::Finite(old.max(v)),
        };
        entry.1.push(name.clone());
    }
    let entries = (1..=max)
        .map(|i| match by_order.remove(&i) {
            Some((value, mut groups)) => {
                groups.sort();
                RhoEntry { order: i, value, groups }
            }
            None => RhoEntry { order: i, value: RhoValue::Infinite, groups: Vec::new() },
        })
        .collect();
    Ok(RhoTable { kind, family, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Caps::default()).unwrap()
    }

    fn v4() -> FiniteGroup {
        FiniteGroup::direct_power(&FiniteGroup::cyclic(2), 2, &Caps::default()).unwrap()
    }

    #[test]
    fn com_tables() {
        let caps = Caps::default();
        let corpus = vec![("Z4".to_string(), FiniteGroup::cyclic(4)), ("V4".to_string(), v4())];
        let t = rho_table(&corpus, RhoKind::Com, FamilyMode::Quotients, None, &caps).unwrap();
        assert_eq!(t.get(4), Some(RhoValue::Finite(16)));
        assert_eq!(t.get(3), Some(RhoValue::Infinite));
        assert_eq!(t.entries[3].groups, vec!["V4", "Z4"]);
        let corpus = vec![("S3".to_string(), s3()), ("Z6".to_string(), FiniteGroup::cyclic(6))];
        let t = rho_table(&corpus, RhoKind::Com, FamilyMode::Quotients, None, &caps).unwrap();
        assert_eq!(t.get(6), Some(RhoValue::Finite(18)));
    }

    #[test]
    fn r_tables() {
        let caps = Caps::default();
        assert_eq!(rho_r_of(&s3(), &caps).unwrap(), 1);
        assert_eq!(rho_r_of(&v4(), &caps).unwrap(), 0);
        let corpus = vec![("S3".to_string(), s3())];
        let t = rho_table(&corpus, RhoKind::R, FamilyMode::Quotients, None, &caps).unwrap();
        assert_eq!(t.get(6), Some(RhoValue::Finite(1)));
    }
}
