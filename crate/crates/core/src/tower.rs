//! Towers of finite groups with surjective projections, the finite shadow
//! of a profinite completion.
//!
//! Level `0` is the coarsest quotient; `projections[i]` maps level `i + 1`
//! onto level `i`.

use num_rational::Ratio;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom, Perm, Subgroup};
use crate::measure::commuting_pairs;

pub const MAX_LEVELS: usize = 32;

#[derive(Debug, Clone)]
pub struct InverseSystem {
    levels: Vec<FiniteGroup>,
    projections: Vec<GroupHom>,
}

impl InverseSystem {
    /// Validates each projection as a surjective homomorphism.
    pub fn new(levels: Vec<FiniteGroup>, projections: Vec<GroupHom>) -> Result<Self> {
        if levels.is_empty() || levels.len() > MAX_LEVELS {
            return Err(Error::Invalid(format!("tower must have 1..={MAX_LEVELS} levels, got {}", levels.len())));
        }
        if projections.len() + 1 != levels.len() {
            return Err(Error::Invalid(format!(
                "{} levels need {} projections, got {}",
                levels.len(),
                levels.len() - 1,
                projections.len()
            )));
        }
        for (i, p) in projections.iter().enumerate() {
            let checked = GroupHom::new(&levels[i + 1], &levels[i], p.map())
                .map_err(|e| Error::InvalidHom(format!("projection {}→{i}: {e}", i + 1)))?;
            if !checked.is_surjective() {
                return Err(Error::NotSurjective);
            }
        }
        Ok(Self { levels, projections })
    }

    pub fn single(group: FiniteGroup) -> Self {
        Self { levels: vec![group], projections: Vec::new() }
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn projections(&self) -> &[GroupHom] {
        &self.projections
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn top(&self) -> &FiniteGroup {
        self.levels.last().expect("nonempty")
    }

    pub fn orders(&self) -> Vec<usize> {
        self.levels.iter().map(FiniteGroup::order).collect()
    }

    /// The composite projection from level `from` down to level `to`.
    pub fn composite(&self, from: usize, to: usize) -> GroupHom {
        assert!(to <= from && from < self.levels.len());
        let mut hom = GroupHom::identity(&self.levels[from]);
        for i in (to..from).rev() {
            hom = hom.then(&self.projections[i]);
        }
        hom
    }

    /// Images of a top-level subgroup at every level.
    pub fn closure_trace(&self, origin: &Subgroup) -> ClosureTrace {
        let top = self.levels.len() - 1;
        let images = (0..=top)
            .map(|i| self.composite(top, i).image(origin, &self.levels[i]))
            .collect();
        ClosureTrace { images }
    }

    /// The tower of `image(N2) / image(N1)` with the induced projections.
    pub fn quotient_trace(&self, n1: &Subgroup, n2: &Subgroup) -> Result<QuotientTrace> {
        if !n1.is_subgroup_of(n2) {
            return Err(Error::InvalidSubgroup("N1 is not contained in N2".into()));
        }
        if !self.top().is_normal(n1) {
            return Err(Error::NotNormal);
        }
        let t1 = self.closure_trace(n1);
        let t2 = self.closure_trace(n2);
        let mut groups = Vec::with_capacity(self.depth());
        // level element id → quotient element id, for members of image(N2)
        let mut coset_maps: Vec<Vec<usize>> = Vec::with_capacity(self.depth());
        for (i, level) in self.levels.iter().enumerate() {
            let (sub, inclusion) = level.subgroup_as_group(&t2.images[i]);
            let mut pos = vec![usize::MAX; level.order()];
            for j in sub.elements() {
                pos[inclusion.apply(j)] = j;
            }
            let kernel_ids: Vec<usize> = t1.images[i].elements().map(|x| pos[x]).collect();
            let kernel = sub.subgroup(&kernel_ids)?;
            let (q, proj) = sub.quotient(&kernel)?;
            coset_maps.push(pos.iter().map(|&j| if j == usize::MAX { usize::MAX } else { proj.apply(j) }).collect());
            groups.push(q);
        }
        let mut projections = Vec::with_capacity(self.projections.len());
        for (i, p) in self.projections.iter().enumerate() {
            let mut map = vec![usize::MAX; groups[i + 1].order()];
            for x in t2.images[i + 1].elements() {
                let c = coset_maps[i + 1][x];
                if map[c] == usize::MAX {
                    map[c] = coset_maps[i][p.apply(x)];
                }
            }
            projections.push(GroupHom::new(&groups[i + 1], &groups[i], map)?);
        }
        Ok(QuotientTrace { groups, projections })
    }

    /// Checks `π([K, L]) = [π(K), π(L)]` at every level.
    pub fn commutator_level_check(&self, k: &Subgroup, l: &Subgroup) -> CommutatorCheck {
        let top = self.levels.len() - 1;
        let kl = self.top().commutator(k, l);
        let levels: Vec<LevelCommutator> = (0..=top)
            .map(|i| {
                let pi = self.composite(top, i);
                let g = &self.levels[i];
                let image = pi.image(&kl, g);
                let of_images = g.commutator(&pi.image(k, g), &pi.image(l, g));
                LevelCommutator {
                    level: i,
                    order: g.order(),
                    image_of_commutator: image.order(),
                    commutator_of_images: of_images.order(),
                    holds: image == of_images,
                }
            })
            .collect();
        let first_failure = levels.iter().find(|l| !l.holds).map(|l| l.level);
        CommutatorCheck { holds: first_failure.is_none(), first_failure, levels }
    }

    /// Commuting-pair fraction at every level.
    pub fn cp_sequence(&self, caps: &Caps) -> Result<Vec<Ratio<u64>>> {
        self.levels.iter().map(|g| Ok(commuting_pairs(g, caps)?.fraction)).collect()
    }
}

pub fn is_non_increasing(seq: &[Ratio<u64>]) -> bool {
    seq.windows(2).all(|w| w[1] <= w[0])
}

#[derive(Debug, Clone)]
pub struct ClosureTrace {
    pub images: Vec<Subgroup>,
}

impl ClosureTrace {
    pub fn orders(&self) -> Vec<usize> {
        self.images.iter().map(Subgroup::order).collect()
    }
}

#[derive(Debug, Clone)]
pub struct QuotientTrace {
    pub groups: Vec<FiniteGroup>,
    pub projections: Vec<GroupHom>,
}

impl QuotientTrace {
    pub fn orders(&self) -> Vec<usize> {
        self.groups.iter().map(FiniteGroup::order).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCommutator {
    pub level: usize,
    pub order: usize,
    pub image_of_commutator: usize,
    pub commutator_of_images: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorCheck {
    pub holds: bool,
    pub first_failure: Option<usize>,
    pub levels: Vec<LevelCommutator>,
}

/// Right cosets `Hx` of a subgroup, numbered by least element.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    pub subgroup: Subgroup,
    /// Least element of each coset.
    pub representatives: Vec<usize>,
    coset_of: Vec<u32>,
}

impl CosetSpace {
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup) -> Self {
        let mut coset_of = vec![u32::MAX; group.order()];
        let mut representatives = Vec::new();
        for x in group.elements() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = representatives.len() as u32;
            representatives.push(x);
            for h in subgroup.elements() {
                coset_of[group.mul(h, x)] = id;
            }
        }
        Self { subgroup: subgroup.clone(), representatives, coset_of }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    /// `Hx · g = H(xg)`.
    pub fn act(&self, group: &FiniteGroup, point: usize, g: usize) -> usize {
        self.coset_of(group.mul(self.representatives[point], g))
    }
}

/// The tower from a descending chain: level `n` is the permutation image of
/// `G` on the disjoint union of the first `n + 1` coset spaces.
#[derive(Debug, Clone)]
pub struct CosetActionSystem {
    pub system: InverseSystem,
    pub spaces: Vec<CosetSpace>,
    /// `G →` level `n`.
    pub actions: Vec<GroupHom>,
}

pub fn coset_action_system(g: &FiniteGroup, chain: &[Subgroup], caps: &Caps) -> Result<CosetActionSystem> {
    if chain.is_empty() || chain.len() > MAX_LEVELS {
        return Err(Error::Invalid(format!("chain must have 1..={MAX_LEVELS} subgroups")));
    }
    if let Some(i) = (1..chain.len()).find(|&i| !chain[i].is_subgroup_of(&chain[i - 1])) {
        return Err(Error::Invalid(format!("chain is not descending at position {i}")));
    }
    let spaces: Vec<CosetSpace> = chain.iter().map(|h| CosetSpace::new(g, h)).collect();
    let points: usize = spaces.iter().map(CosetSpace::len).sum();
    if points > caps.order {
        return Err(Error::CapExceeded { what: "coset points", size: points, cap: caps.order });
    }
    // full permutation of each element on all points; level n restricts it
    let images: Vec<Vec<usize>> = g
        .elements()
        .map(|x| {
            let mut img = Vec::with_capacity(points);
            for s in &spaces {
                let offset = img.len();
                img.extend((0..s.len()).map(|pt| offset + s.act(g, pt, x)));
            }
            img
        })
        .collect();
    let mut levels = Vec::with_capacity(chain.len());
    let mut actions = Vec::with_capacity(chain.len());
    let mut width = 0;
    for s in &spaces {
        width += s.len();
        let mut perms: Vec<Perm> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut map = Vec::with_capacity(g.order());
        for img in &images {
            let p = Perm::from_images(&img[..width]).expect("coset action is a permutation");
            let id = *index.entry(p.clone()).or_insert_with(|| {
                perms.push(p);
                perms.len() - 1
            });
            map.push(id);
        }
        let level = FiniteGroup::from_closed_permutations(perms)?;
        actions.push(GroupHom::new_unchecked(level.order(), map));
        levels.push(level);
    }
    let mut projections = Vec::with_capacity(levels.len().saturating_sub(1));
    for i in 0..levels.len().saturating_sub(1) {
        let mut map = vec![usize::MAX; levels[i + 1].order()];
        for x in g.elements() {
            map[actions[i + 1].apply(x)] = actions[i].apply(x);
        }
        projections.push(GroupHom::new_unchecked(levels[i].order(), map));
    }
    let system = InverseSystem::new(levels, projections)?;
    Ok(CosetActionSystem { system, spaces, actions })
}

/// `P ← P² ← ⋯ ← P^depth`, each projection forgetting the last coordinate.
pub fn direct_power_system(p: &FiniteGroup, depth: usize, caps: &Caps) -> Result<InverseSystem> {
    if depth == 0 || depth > MAX_LEVELS {
        return Err(Error::Invalid(format!("depth must be in 1..={MAX_LEVELS}")));
    }
    let levels = (1..=depth).map(|k| FiniteGroup::direct_power(p, k, caps)).collect::<Result<Vec<_>>>()?;
    let projections = (1..depth).map(|k| FiniteGroup::power_projection(p, k + 1, k)).collect();
    Ok(InverseSystem { levels, projections })
}

/// `Z/p^1 ← Z/p^2 ← ⋯ ← Z/p^depth` with reduction maps.
pub fn cyclic_tower(p: usize, depth: usize, caps: &Caps) -> Result<InverseSystem> {
    crate::group::checked_power(p, depth, caps.order)?;
    let levels: Vec<FiniteGroup> = (1..=depth).map(|k| FiniteGroup::cyclic(p.pow(k as u32))).collect();
    let projections = (1..depth)
        .map(|k| {
            let m = p.pow(k as u32);
            GroupHom::new_unchecked(m, (0..m * p).map(|x| x % m).collect())
        })
        .collect();
    InverseSystem::new(levels, projections)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Caps::default()).unwrap()
    }

    #[test]
    fn build_validates() {
        let caps = Caps::default();
        let t = cyclic_tower(2, 3, &caps).unwrap();
        assert_eq!(t.orders(), vec![2, 4, 8]);
        let bad = GroupHom::new_unchecked(4, vec![0; 8]);
        let levels = vec![FiniteGroup::cyclic(4), FiniteGroup::cyclic(8)];
        assert_eq!(InverseSystem::new(levels, vec![bad]).unwrap_err(), Error::NotSurjective);
        assert_eq!(InverseSystem::single(FiniteGroup::trivial()).depth(), 1);
    }

    #[test]
    fn coset_towers() {
        let caps = Caps::default();
        let g = s3();
        let a3 = g.derived_subgroup();
        let chain = [g.whole(), a3.clone(), g.trivial_subgroup()];
        let cas = coset_action_system(&g, &chain, &caps).unwrap();
        assert_eq!(cas.system.orders(), vec![1, 2, 6]);
        assert!(cas.actions[2].is_injective());

        let z8 = FiniteGroup::cyclic(8);
        let chain: Vec<Subgroup> = [1, 2, 4, 8].iter().map(|&k| z8.generate([k % 8])).collect();
        let cas = coset_action_system(&z8, &chain, &caps).unwrap();
        assert_eq!(cas.system.orders(), vec![1, 2, 4, 8]);
        assert!(cas.system.top().is_abelian());

        let bad = [g.trivial_subgroup(), g.whole()];
        assert!(coset_action_system(&g, &bad, &caps).is_err());
    }

    #[test]
    fn traces() {
        let caps = Caps::default();
        let z8 = FiniteGroup::cyclic(8);
        let chain: Vec<Subgroup> = [1, 2, 4, 8].iter().map(|&k| z8.generate([k % 8])).collect();
        let sys = coset_action_system(&z8, &chain, &caps).unwrap().system;
        let n2 = z8.generate([2]);
        let n1 = z8.generate([4]);
        assert_eq!(sys.quotient_trace(&n1, &n2).unwrap().orders(), vec![1, 1, 2, 2]);
        assert_eq!(sys.quotient_trace(&n2, &n2).unwrap().orders(), vec![1, 1, 1, 1]);

        let g = s3();
        let a3 = g.derived_subgroup();
        let sys = coset_action_system(&g, &[g.whole(), a3.clone(), g.trivial_subgroup()], &caps).unwrap().system;
        assert_eq!(sys.quotient_trace(&g.trivial_subgroup(), &a3).unwrap().orders(), vec![1, 1, 3]);
        let t = g.generate([1]);
        assert_eq!(sys.quotient_trace(&t, &g.whole()).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn commutators_and_cp() {
        let caps = Caps::default();
        let g = s3();
        let sys = coset_action_system(&g, &[g.whole(), g.derived_subgroup(), g.trivial_subgroup()], &caps)
            .unwrap()
            .system;
        let top = sys.top();
        let check = sys.commutator_level_check(&top.whole(), &top.whole());
        assert!(check.holds);
        assert_eq!(check.levels.iter().map(|l| l.image_of_commutator).collect::<Vec<_>>(), vec![1, 1, 3]);
        let cp = sys.cp_sequence(&caps).unwrap();
        assert_eq!(cp, vec![Ratio::new(1, 1), Ratio::new(1, 1), Ratio::new(1, 2)]);
        assert!(is_non_increasing(&cp));
        let z = direct_power_system(&FiniteGroup::cyclic(2), 3, &caps).unwrap();
        assert_eq!(z.orders(), vec![2, 4, 8]);
        assert!(z.cp_sequence(&caps).unwrap().iter().all(|c| *c == Ratio::from_integer(1)));
    }
}
