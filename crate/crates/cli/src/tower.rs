use std::fs;
use std::path::PathBuf;

use fingroup::corpus::{bundled_tower, bundled_tower_names};
use fingroup::exact::ratio_string;
use fingroup::tower::{coset_action_system, cyclic_tower, direct_power_system, is_non_increasing, CommutatorCheck, InverseSystem};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::report::Item;

pub const COLUMNS: &[&str] = &[
    "orders",
    "cp_sequence",
    "non_increasing",
    "commutator_check.holds",
    "commutator_check.first_failure",
    "abelianization_orders",
];

/// A tower spec file. `chain` lists subgroups of `group` by element ids,
/// largest first.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TowerSpec {
    Chain { name: String, group: String, chain: Vec<Vec<usize>> },
    Power { name: String, power: String, depth: usize },
    Cyclic { name: String, cyclic: usize, depth: usize },
}

#[derive(Serialize)]
struct TowerResult {
    orders: Vec<usize>,
    cp_sequence: Vec<String>,
    non_increasing: bool,
    /// `[L, L]` of the top level against its images.
    commutator_check: CommutatorCheck,
    /// Orders of the abelianization images `L_n / [L_n, L_n]`.
    abelianization_orders: Vec<usize>,
}

fn describe(ctx: &Context, sys: &InverseSystem) -> Result<TowerResult, String> {
    if let Some(g) = sys.levels().iter().find(|g| g.order() > ctx.caps.order) {
        return Err(format!("group order cap exceeded: {} > {}", g.order(), ctx.caps.order));
    }
    let cp = sys.cp_sequence(&ctx.caps).map_err(|e| e.to_string())?;
    let top = sys.top();
    let whole = top.whole();
    let derived = top.derived_subgroup();
    let trace = sys.quotient_trace(&derived, &whole).map_err(|e| e.to_string())?;
    Ok(TowerResult {
        orders: sys.orders(),
        non_increasing: is_non_increasing(&cp),
        cp_sequence: cp.iter().map(ratio_string).collect(),
        commutator_check: sys.commutator_level_check(&whole, &whole),
        abelianization_orders: trace.orders(),
    })
}

fn from_spec(ctx: &Context, path: &PathBuf) -> (String, Result<InverseSystem, String>) {
    let label = path.display().to_string();
    let spec: TowerSpec = match fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| format!("malformed tower spec: {e}")))
    {
        Ok(s) => s,
        Err(e) => return (label.clone(), Err(format!("{label}: {e}"))),
    };
    let err = |e: fingroup::Error| e.to_string();
    match spec {
        TowerSpec::Chain { name, group, chain } => {
            let sys = ctx.group(&group).and_then(|g| {
                let subs = chain.iter().map(|c| g.subgroup(c).map_err(err)).collect::<Result<Vec<_>, _>>()?;
                coset_action_system(g, &subs, &ctx.caps).map(|c| c.system).map_err(err)
            });
            (name, sys)
        }
        TowerSpec::Power { name, power, depth } => {
            let sys = ctx.group(&power).and_then(|g| direct_power_system(g, depth, &ctx.caps).map_err(err));
            (name, sys)
        }
        TowerSpec::Cyclic { name, cyclic, depth } => (name, cyclic_tower(cyclic, depth, &ctx.caps).map_err(err)),
    }
}

pub fn inverse_system(ctx: &Context, towers: &[String], specs: &[PathBuf]) -> Vec<Item> {
    let mut names: Vec<String> = towers.to_vec();
    if towers.is_empty() && specs.is_empty() {
        names = bundled_tower_names().iter().map(|s| s.to_string()).collect();
    }
    let mut jobs: Vec<(String, Result<InverseSystem, String>)> = names
        .into_iter()
        .map(|n| {
            let sys = bundled_tower(&n, &ctx.caps).map_err(|e| e.to_string());
            (n, sys)
        })
        .collect();
    jobs.extend(specs.iter().map(|p| from_spec(ctx, p)));
    jobs.into_par_iter().map(|(name, sys)| Item::from_result(name, sys.and_then(|s| describe(ctx, &s)))).collect()
}
