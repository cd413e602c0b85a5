//! The CLI against the brute-force reference values in `tests/golden`,
//! produced by `tools/oracle.py`.

mod common;

use common::{golden, item, run_json};
use serde_json::Value;

#[test]
fn analyze_group_matches_oracle() {
    let oracle = golden("oracle.json");
    let (code, report) = run_json(&["analyze-group"]);
    assert_eq!(code, 0);
    let oracle = oracle.as_object().unwrap();
    assert_eq!(report["items"].as_array().unwrap().len(), oracle.len());
    for (name, want) in oracle {
        let got = &item(&report, name)["result"];
        let same = |ours: &Value, theirs: &str| assert_eq!(ours, &want[theirs], "{name}: {theirs}");
        same(&got["order"], "order");
        same(&got["pairs"], "pairs");
        same(&got["classes"], "classes");
        same(&got["fraction"], "fraction");
        same(&got["center_order"], "center");
        same(&got["derived_series"], "derived_series");
        same(&got["subgroups"], "subgroups");
        same(&got["normal_subgroups"], "normal_subgroups");
        same(&got["prufer_rank"], "prufer_rank");
        same(&got["rho_r"], "rho_r");
        same(&got["conjugate_spread"], "spread");
        same(&got["neumann"]["value"], "neumann_value");
    }
}

#[test]
fn rho_com_matches_oracle() {
    let (code, report) = run_json(&["rho", "--kind", "com", "--max-order", "24"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = report["items"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| serde_json::json!({ "order": i["result"]["order"], "value": i["result"]["value"] }))
        .collect();
    assert_eq!(Value::Array(rows), golden("rho_com_24.json"));
}
