use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use fingroup::algebra::{is_commutative, mr_decompose, nilpotent_free_check, FiniteRing};
use fingroup::corpus::bundled;
use fingroup::gfp::Matrix;
use fingroup::module_ring::{
    faithfulness_report, orbit_span_check, ring_construct, verify_translate_formula, GModuleAction, IllDefinedWitness,
    ModuleRing, RingOutcome, TranslateSearch,
};
use fingroup::Caps;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::report::Item;

pub const COLUMNS: &[&str] = &[
    "group",
    "p",
    "dim",
    "v",
    "spans",
    "translate_bound",
    "well_defined",
    "commutative",
    "associative",
    "nilpotent_free",
    "nilpotent_witness",
    "factor_orders",
    "formula_agrees",
    "faithful",
    "kernel",
    "has_regular_vector",
];

/// Random pairs compared against the translate-sum formula.
const FORMULA_SAMPLES: usize = 64;
const FORMULA_SEED: u64 = 0;
/// Largest ring checked triple by triple for associativity.
const ASSOCIATIVITY_LIMIT: usize = 125;

/// An action spec file; `v` defaults to the first basis vector.
#[derive(Debug, Clone, Deserialize)]
pub struct ModuleSpec {
    pub group: String,
    pub p: u32,
    pub dim: usize,
    pub matrices: BTreeMap<usize, Matrix>,
    #[serde(default)]
    pub v: Option<Vec<u32>>,
}

pub const EXAMPLES: &[&str] = &["swap-gf3", "regular-gf2", "neg-gf3", "trivial-gf5", "regular-z3-gf2", "perm-s3-gf3"];

/// An action, the generating vector and the group name.
type Job = (GModuleAction, Vec<u32>, String);

fn example(name: &str) -> Result<Job, String> {
    let caps = Caps::default();
    let corpus = bundled(&caps);
    let err = |e: fingroup::Error| e.to_string();
    let single = |group: &str, p: u32, m: Matrix, v: Vec<u32>| {
        let g = corpus.get(group).expect("bundled");
        let dim = m.len();
        let given: BTreeMap<usize, Matrix> = [(1, m)].into_iter().collect();
        GModuleAction::new(g, p, dim, &given).map(|a| (a, v, group.to_string())).map_err(err)
    };
    match name {
        "swap-gf3" => single("Z2", 3, vec![vec![0, 1], vec![1, 0]], vec![1, 0]),
        "regular-gf2" => single("Z2", 2, vec![vec![0, 1], vec![1, 0]], vec![1, 0]),
        "neg-gf3" => single("Z2", 3, vec![vec![2]], vec![1]),
        "trivial-gf5" => single("Z3", 5, vec![vec![1]], vec![1]),
        "regular-z3-gf2" => single("Z3", 2, vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], vec![1, 0, 0]),
        "perm-s3-gf3" => {
            let s3 = corpus.get("S3").expect("bundled");
            let perms = s3.permutations().expect("S3 is a permutation group");
            let given: BTreeMap<usize, Matrix> = s3
                .generators()
                .iter()
                .map(|&g| {
                    let img = perms.element(g as usize).images();
                    let m = (0..3).map(|i| (0..3).map(|j| u32::from(img[i] == j)).collect()).collect();
                    (g as usize, m)
                })
                .collect();
            GModuleAction::new(s3, 3, 3, &given).map(|a| (a, vec![1, 0, 0], "S3".to_string())).map_err(err)
        }
        other => Err(format!("unknown example {other}; known: {}", EXAMPLES.join(", "))),
    }
}

fn from_spec(ctx: &Context, path: &PathBuf) -> Result<Job, String> {
    let label = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| format!("{label}: {e}"))?;
    let spec: ModuleSpec = serde_json::from_str(&text).map_err(|e| format!("{label}: malformed action spec: {e}"))?;
    let g = ctx.group(&spec.group)?;
    let action = GModuleAction::new(g, spec.p, spec.dim, &spec.matrices).map_err(|e| format!("{label}: {e}"))?;
    let v = spec.v.unwrap_or_else(|| (0..spec.dim).map(|i| u32::from(i == 0)).collect());
    Ok((action, v, spec.group))
}

#[derive(Serialize, Default)]
struct RingResult {
    group: String,
    group_order: usize,
    p: u32,
    dim: usize,
    v: Vec<u32>,
    spans: bool,
    /// Elements whose translates of `v` form the chosen basis.
    basis_elements: Vec<usize>,
    /// Longest minimal translate sum over all vectors.
    translate_bound: Option<usize>,
    well_defined: Option<bool>,
    ill_defined_witness: Option<IllDefinedWitness>,
    commutative: Option<bool>,
    associative: Option<bool>,
    nilpotent_free: Option<bool>,
    nilpotent_witness: Option<Vec<u32>>,
    factor_orders: Option<Vec<usize>>,
    formula_agrees: Option<bool>,
    faithful: bool,
    kernel: Vec<usize>,
    has_regular_vector: bool,
    /// Stabilizer index to number of vectors with it.
    stabilizer_indices: BTreeMap<usize, usize>,
}

fn is_associative(r: &ModuleRing) -> Option<bool> {
    let n = r.size();
    (n <= ASSOCIATIVITY_LIMIT).then(|| {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)))))
    })
}

fn describe(action: &GModuleAction, v: &[u32], group: String, caps: &Caps) -> Result<RingResult, String> {
    let err = |e: fingroup::Error| e.to_string();
    let faith = faithfulness_report(action, caps).map_err(err)?;
    let span = orbit_span_check(action, v).map_err(err)?;
    let mut out = RingResult {
        group,
        group_order: action.group().order(),
        p: action.p(),
        dim: action.dim(),
        v: v.to_vec(),
        spans: span.spans,
        basis_elements: span.basis_elements,
        faithful: faith.faithful,
        kernel: faith.kernel,
        has_regular_vector: faith.has_regular_vector,
        ..RingResult::default()
    };
    for s in &faith.stabilizers {
        *out.stabilizer_indices.entry(s.index).or_default() += 1;
    }
    if !out.spans {
        return Ok(out);
    }
    out.translate_bound = Some(TranslateSearch::new(action, v, caps).map_err(err)?.bound());
    match ring_construct(action, v, caps).map_err(err)? {
        RingOutcome::IllDefined(w) => {
            out.well_defined = Some(false);
            out.ill_defined_witness = Some(w);
        }
        RingOutcome::Ring(r) => {
            out.well_defined = Some(true);
            out.commutative = Some(is_commutative(&r));
            out.associative = is_associative(&r);
            let nil = nilpotent_free_check(&r, caps).map_err(err)?;
            out.nilpotent_free = Some(nil.nilpotent_free);
            out.nilpotent_witness = nil.witness.map(|w| r.vector(w));
            if nil.nilpotent_free && out.commutative == Some(true) {
                out.factor_orders = Some(mr_decompose(&r, caps).map_err(err)?.iter().map(|f| f.order()).collect());
            }
            out.formula_agrees = Some(verify_translate_formula(action, &r, FORMULA_SAMPLES, FORMULA_SEED, caps).map_err(err)?.agree);
        }
    }
    Ok(out)
}

pub fn ring_from_module(ctx: &Context, examples: &[String], specs: &[PathBuf]) -> Vec<Item> {
    let mut names: Vec<String> = examples.to_vec();
    if examples.is_empty() && specs.is_empty() {
        names = EXAMPLES.iter().map(|s| s.to_string()).collect();
    }
    let mut jobs: Vec<(String, Result<Job, String>)> =
        names.into_iter().map(|n| (n.clone(), example(&n))).collect();
    jobs.extend(specs.iter().map(|p| (p.display().to_string(), from_spec(ctx, p))));
    jobs.into_par_iter()
        .map(|(name, job)| {
            let r = job.and_then(|(action, v, group)| {
                ctx.check_order(action.group())?;
                describe(&action, &v, group, &ctx.caps)
            });
            Item::from_result(name, r)
        })
        .collect()
}
