use fingroup::algebra::{mr_decompose, nilpotent_free_check, FiniteRing};
use fingroup::boolean::{AugmentedBooleanAlgebra, BooleanIdeal, FiniteBooleanRing};
use fingroup::field::FiniteField;
use fingroup::power::{filtered_power, verify_ring_ideal_correspondence, FilteredPowerSpec, MaterializedPower};
use fingroup::FiniteGroup;
use serde::Serialize;

use crate::context::Context;
use crate::report::Item;

pub const COLUMNS: &[&str] = &[
    "kind",
    "order",
    "holds",
    "normal_count",
    "ideal_count",
    "ring_ideal_count",
    "ideal_atoms",
    "kernel_order",
    "quotient_order",
    "m",
    "iso_verified",
    "size",
    "factor_orders",
    "nilpotent_free",
];

/// Parses an atom list such as `"0,2"`; the empty string is the empty list.
fn parse_atoms(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad atom index {t:?}")))
        .collect()
}

/// `"0,1=2"`: closed set {0, 1} with the subfield of order 2.
fn parse_closed(s: &str) -> Result<(Vec<usize>, usize), String> {
    let (points, q) = s.split_once('=').ok_or_else(|| format!("closed set {s:?} lacks '=order'"))?;
    let q = q.trim().parse().map_err(|_| format!("bad subfield order in {s:?}"))?;
    Ok((parse_atoms(points)?, q))
}

fn atoms_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|a| mask >> a & 1 == 1).collect()
}

#[derive(Serialize)]
struct Correspondence {
    kind: &'static str,
    base_order: usize,
    atoms: usize,
    order: usize,
    normal_count: usize,
    ideal_count: usize,
    holds: bool,
    base_simple_nonabelian: bool,
    /// Orders of the normal subgroups `P^S`, with the atoms of `S`.
    matched: Vec<(usize, Vec<usize>)>,
    non_ideal_count: usize,
    /// The first normal subgroup not of the form `P^S`, by element id.
    non_ideal_witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct IdealQuotient {
    kind: &'static str,
    ideal_atoms: Vec<usize>,
    kernel_order: usize,
    quotient_order: usize,
    m: usize,
    target_order: usize,
    iso_verified: bool,
}

fn group_items(ctx: &Context, base: &FiniteGroup, atoms: usize, ideals: &[String]) -> Result<Vec<Item>, String> {
    let ring = FiniteBooleanRing::new(atoms).map_err(|e| e.to_string())?;
    let ideals: Vec<BooleanIdeal> = if ideals.is_empty() {
        BooleanIdeal::all(&ring)
    } else {
        ideals
            .iter()
            .map(|s| {
                let mask = ring.mask(&parse_atoms(s)?).map_err(|e| e.to_string())?;
                BooleanIdeal::principal(&ring, mask).map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?
    };
    let names: Vec<String> = ideals.iter().map(|i| format!("ideal[{}]", join(&atoms_of(i.bound())))).collect();
    let power = match ctx.check_order(base).and_then(|_| MaterializedPower::new(base, ring, &ctx.caps).map_err(|e| e.to_string())) {
        Ok(p) => p,
        Err(e) => {
            let mut items = vec![Item::error("correspondence", &e)];
            items.extend(names.into_iter().map(|n| Item::error(n, &e)));
            return Ok(items);
        }
    };
    let report = power.verify_ideal_correspondence(base);
    let mut items = vec![Item::ok(
        "correspondence",
        Correspondence {
            kind: "correspondence",
            base_order: base.order(),
            atoms,
            order: power.group.order(),
            normal_count: report.normal_count,
            ideal_count: report.ideal_count,
            holds: report.holds,
            base_simple_nonabelian: report.base_simple_nonabelian,
            matched: report.matched.iter().map(|m| (m.order, atoms_of(m.ideal_bound))).collect(),
            non_ideal_count: report.non_ideal.len(),
            non_ideal_witness: report.non_ideal.first().cloned(),
        },
    )];
    for (ideal, name) in ideals.iter().zip(names) {
        let r = power.quotient_iso(base, ideal, &ctx.caps).map(|q| IdealQuotient {
            kind: "quotient",
            ideal_atoms: atoms_of(ideal.bound()),
            kernel_order: power.ideal_subgroup(ideal).order(),
            quotient_order: q.quotient.order(),
            m: q.m,
            target_order: q.target.order(),
            iso_verified: q.iso.is_injective() && q.iso.is_surjective(),
        });
        items.push(Item::from_result(name, r));
    }
    Ok(items)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct Filtered {
    kind: &'static str,
    field: String,
    atoms: usize,
    size: usize,
    /// Size of the value set allowed at each atom.
    allowed_sizes: Vec<usize>,
    closed_sets_form_lattice: bool,
    nilpotent_free: bool,
    factor_orders: Vec<usize>,
}

#[derive(Serialize)]
struct RingCorrespondence {
    kind: &'static str,
    size: usize,
    ring_ideal_count: usize,
    ideal_count: usize,
    holds: bool,
}

fn field_items(ctx: &Context, field: &str, atoms: usize, closed: &[String]) -> Result<Vec<Item>, String> {
    let field = FiniteField::by_name(field).map_err(|e| e.to_string())?;
    let ring = FiniteBooleanRing::new(atoms).map_err(|e| e.to_string())?;
    let parsed = closed.iter().map(|s| parse_closed(s)).collect::<Result<Vec<_>, _>>()?;
    let sets: Vec<(String, Vec<usize>)> = parsed.iter().enumerate().map(|(i, (p, _))| (format!("C{i}"), p.clone())).collect();
    let algebra = AugmentedBooleanAlgebra::from_closed_sets(ring, &sets).map_err(|e| e.to_string())?;
    let lattice = algebra.is_lattice();
    let filtered = parsed
        .iter()
        .map(|(_, q)| field.subfield(*q))
        .collect::<fingroup::Result<Vec<_>>>()
        .and_then(|tau| filtered_power(&FilteredPowerSpec { field: field.clone(), algebra, tau }, &ctx.caps))
        .and_then(|r| {
            let nil = nilpotent_free_check(&r, &ctx.caps)?;
            let factors = mr_decompose(&r, &ctx.caps)?;
            Ok(Filtered {
                kind: "filtered",
                field: field.name(),
                atoms,
                size: r.size(),
                allowed_sizes: r.allowed().iter().map(Vec::len).collect(),
                closed_sets_form_lattice: lattice,
                nilpotent_free: nil.nilpotent_free,
                factor_orders: factors.iter().map(|f| f.order()).collect(),
            })
        });
    let corr = verify_ring_ideal_correspondence(&field, atoms, &ctx.caps).map(|r| RingCorrespondence {
        kind: "ring-correspondence",
        size: r.ring_size,
        ring_ideal_count: r.ring_ideal_count,
        ideal_count: r.boolean_ideal_count,
        holds: r.holds,
    });
    Ok(vec![Item::from_result("filtered", filtered), Item::from_result("ring-correspondence", corr)])
}

/// Items for the group power (correspondence, then one quotient per ideal)
/// followed by the filtered power items. Malformed arguments invalidate the
/// job; an unknown group fails its items only.
pub fn boolean_power(
    ctx: &Context,
    group: Option<&str>,
    atoms: usize,
    ideals: &[String],
    field: Option<&str>,
    closed: &[String],
) -> Result<Vec<Item>, String> {
    let mut items = Vec::new();
    if let Some(name) = group {
        match ctx.group(name) {
            Ok(base) => items.extend(group_items(ctx, base, atoms, ideals)?),
            Err(e) => items.push(Item::error("correspondence", e)),
        }
    }
    if let Some(field) = field {
        items.extend(field_items(ctx, field, atoms, closed)?);
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_atoms("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_atoms("0, 2").unwrap(), vec![0, 2]);
        assert!(parse_atoms("x").is_err());
        assert_eq!(parse_closed("1=2").unwrap(), (vec![1], 2));
        assert!(parse_closed("1").is_err());
        assert_eq!(atoms_of(0b101), vec![0, 2]);
    }
}
