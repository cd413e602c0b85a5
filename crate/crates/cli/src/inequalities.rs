use std::collections::BTreeMap;

use fingroup::measure::{rho_table, verify_inequalities, FamilyMode, RhoKind};
use fingroup::FiniteGroup;
use rayon::prelude::*;

use crate::context::Context;
use crate::report::Item;

pub const RHO_COLUMNS: &[&str] = &["order", "value", "groups"];

type Buckets = BTreeMap<usize, Vec<(String, FiniteGroup)>>;

/// Selected groups within the order cap, bucketed by order, and error items
/// for the rest.
fn by_order(ctx: &Context, names: &[String]) -> (Buckets, Vec<Item>) {
    let mut buckets: Buckets = BTreeMap::new();
    let mut errors = Vec::new();
    for (name, g) in ctx.select(names) {
        match g.and_then(|g| ctx.check_order(&g).map(|_| g)) {
            Ok(g) => buckets.entry(g.order()).or_default().push((name, g)),
            Err(e) => errors.push(Item::error(name, e)),
        }
    }
    (buckets, errors)
}

/// One item per order `1..=max_order`; orders without a corpus group are ∞.
/// A group over the caps fails the item for its order.
pub fn rho(ctx: &Context, kind: RhoKind, family: FamilyMode, max_order: usize) -> Vec<Item> {
    let mut buckets: Buckets = BTreeMap::new();
    for (name, g) in ctx.corpus.sorted() {
        buckets.entry(g.order()).or_default().push((name, g));
    }
    (1..=max_order)
        .into_par_iter()
        .map(|i| {
            let members = buckets.get(&i).map(Vec::as_slice).unwrap_or_default();
            let r = rho_table(members, kind, family, Some(i), &ctx.caps)
                .map(|t| t.entries.into_iter().last().expect("order i is present"));
            Item::from_result(i.to_string(), r)
        })
        .collect()
}

pub const INEQUALITY_COLUMNS: &[&str] = &[
    "order",
    "groups",
    "rho_com",
    "rho_r",
    "first.status",
    "first.lhs",
    "first.rhs",
    "first.holds",
    "first.reason",
    "second.status",
    "second.lhs",
    "second.rhs",
    "second.holds",
    "second.reason",
    "intermediate.status",
    "intermediate.lhs",
    "intermediate.rhs",
    "intermediate.holds",
    "intermediate.reason",
    "second_detail.rho_wedge",
    "second_detail.doubled_exponent",
    "second_detail.lhs_squared",
];

/// One item per order present among the selected groups, then one error
/// item per group that could not be used.
pub fn verify(ctx: &Context, names: &[String]) -> Vec<Item> {
    let (buckets, errors) = by_order(ctx, names);
    let buckets: Vec<_> = buckets.into_iter().collect();
    let mut items: Vec<Item> = buckets
        .into_par_iter()
        .map(|(i, members)| {
            let r = verify_inequalities(&members, ctx.beta.as_ref(), &ctx.caps)
                .map(|rep| rep.orders.into_iter().next().expect("one order"));
            Item::from_result(i.to_string(), r)
        })
        .collect();
    items.extend(errors);
    items
}
