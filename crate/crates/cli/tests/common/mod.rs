#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fingroup"))
}

/// Runs the binary and returns the exit code and stdout.
pub fn run(args: &[&str]) -> (i32, Vec<u8>) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), out.stdout)
}

pub fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    let v = serde_json::from_slice(&out).unwrap_or_else(|e| panic!("{args:?}: not JSON: {e}"));
    (code, v)
}

pub fn golden(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).expect("golden file")).expect("golden JSON")
}

/// A fresh scratch directory under the target dir.
pub fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

/// `items` by name.
pub fn item<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["items"]
        .as_array()
        .expect("items")
        .iter()
        .find(|i| i["name"] == name)
        .unwrap_or_else(|| panic!("no item {name}"))
}
