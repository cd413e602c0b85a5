use std::collections::BTreeMap;

use fingroup::exact::ratio_string;
use fingroup::group::SeriesKind;
use fingroup::measure::{commuting_pairs, neumann_admissible_pairs, neumann_search, rho_r_of, rho_wedge, RhoValue};
use fingroup::FiniteGroup;
use serde::Serialize;

use crate::context::Context;
use crate::report::Item;

pub const COLUMNS: &[&str] = &[
    "order",
    "pairs",
    "fraction",
    "neumann.k_size",
    "neumann.n_index",
    "neumann.value",
    "rho_r",
    "rho_wedge",
    "classes",
    "center_order",
    "abelian",
    "nilpotent",
    "soluble",
    "perfect",
    "derived_series",
    "lower_central_series",
    "subgroups",
    "normal_subgroups",
    "prufer_rank",
    "conjugate_spread",
    "automorphisms.count",
    "automorphisms.inner",
    "automorphisms.characteristic_subgroups",
    "skipped",
];

#[derive(Serialize)]
struct NeumannSummary {
    k_size: usize,
    n_index: usize,
    value: u64,
    /// `|L|² / value`, a lower bound for the commuting count.
    bound: String,
    bound_holds: bool,
}

#[derive(Serialize)]
struct AutomorphismSummary {
    count: usize,
    inner: usize,
    characteristic_subgroups: usize,
}

#[derive(Serialize)]
struct Analysis {
    order: usize,
    pairs: u64,
    fraction: String,
    neumann: NeumannSummary,
    rho_r: Option<usize>,
    rho_wedge: Option<RhoValue>,
    classes: usize,
    center_order: usize,
    abelian: bool,
    nilpotent: bool,
    soluble: bool,
    perfect: bool,
    derived_series: Vec<usize>,
    lower_central_series: Vec<usize>,
    subgroups: Option<usize>,
    normal_subgroups: usize,
    prufer_rank: Option<usize>,
    conjugate_spread: Option<usize>,
    automorphisms: Option<AutomorphismSummary>,
    /// Quantities left out, with the reason.
    skipped: BTreeMap<&'static str, String>,
}

fn optional<T, E: ToString>(skipped: &mut BTreeMap<&'static str, String>, key: &'static str, r: Result<T, E>) -> Option<T> {
    r.map_err(|e| skipped.insert(key, e.to_string())).ok()
}

fn analyze_one(ctx: &Context, g: &FiniteGroup) -> Result<Analysis, String> {
    let caps = &ctx.caps;
    let stats = commuting_pairs(g, caps).map_err(|e| e.to_string())?;
    let w = neumann_search(g, caps).map_err(|e| e.to_string())?;
    let mut skipped = BTreeMap::new();
    let subgroups = optional(&mut skipped, "subgroups", g.enumerate_subgroups(caps).map(|s| s.len()));
    let prufer_rank = optional(&mut skipped, "prufer_rank", g.prufer_rank(caps));
    let rho_r = optional(&mut skipped, "rho_r", rho_r_of(g, caps));
    let rho_wedge = optional(&mut skipped, "rho_wedge", rho_wedge(g).map(|r| r.k));
    let conjugate_spread = optional(&mut skipped, "conjugate_spread", g.conjugate_spread(caps).map(|s| s.m));
    let automorphisms = optional(
        &mut skipped,
        "automorphisms",
        g.automorphism_group(caps).map(|a| AutomorphismSummary {
            count: a.automorphisms.len(),
            inner: a.inner_count,
            characteristic_subgroups: a.characteristic_subgroups().count(),
        }),
    );
    Ok(Analysis {
        order: g.order(),
        pairs: stats.pairs,
        fraction: ratio_string(&stats.fraction),
        neumann: NeumannSummary {
            k_size: w.k_size(),
            n_index: w.n_index(g.order()),
            value: w.value,
            bound: ratio_string(&w.bound(g.order())),
            bound_holds: w.bound_holds,
        },
        rho_r,
        rho_wedge,
        classes: stats.classes,
        center_order: g.center().order(),
        abelian: g.is_abelian(),
        nilpotent: g.is_nilpotent(),
        soluble: g.is_soluble(),
        perfect: g.is_perfect(),
        derived_series: g.series(SeriesKind::Derived).orders(),
        lower_central_series: g.series(SeriesKind::LowerCentral).orders(),
        subgroups,
        normal_subgroups: g.enumerate_normal_subgroups().len(),
        prufer_rank,
        conjugate_spread,
        automorphisms,
        skipped,
    })
}

pub fn analyze(ctx: &Context, names: &[String]) -> Vec<Item> {
    ctx.per_group(names, |g| analyze_one(ctx, g))
}

pub const NEUMANN_COLUMNS: &[&str] = &[
    "order",
    "pairs",
    "fraction",
    "k_size",
    "n_size",
    "n_index",
    "value",
    "bound",
    "bound_holds",
    "admissible_pairs",
    "minimal",
];

#[derive(Serialize)]
struct NeumannResult {
    order: usize,
    pairs: u64,
    fraction: String,
    k_size: usize,
    n_size: usize,
    n_index: usize,
    value: u64,
    bound: String,
    bound_holds: bool,
    admissible_pairs: usize,
    /// No admissible pair has a smaller value.
    minimal: bool,
    k_elements: Vec<u32>,
    n_elements: Vec<u32>,
}

pub fn neumann(ctx: &Context, names: &[String]) -> Vec<Item> {
    ctx.per_group(names, |g| {
        let caps = &ctx.caps;
        let stats = commuting_pairs(g, caps).map_err(|e| e.to_string())?;
        let w = neumann_search(g, caps).map_err(|e| e.to_string())?;
        let least = neumann_admissible_pairs(g).into_iter().map(|(_, _, v)| v).min();
        Ok(NeumannResult {
            order: g.order(),
            pairs: stats.pairs,
            fraction: ratio_string(&stats.fraction),
            k_size: w.k_size(),
            n_size: w.n.order(),
            n_index: w.n_index(g.order()),
            value: w.value,
            bound: ratio_string(&w.bound(g.order())),
            bound_holds: w.bound_holds,
            admissible_pairs: w.admissible_pairs,
            minimal: least == Some(w.value),
            k_elements: w.k.element_ids().to_vec(),
            n_elements: w.n.element_ids().to_vec(),
        })
    })
}
