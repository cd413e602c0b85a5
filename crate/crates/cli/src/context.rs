use std::fs;
use std::path::Path;

use fingroup::corpus::{bundled, bundled_files, load_corpus, write_corpus, Corpus};
use fingroup::measure::BetaTable;
use fingroup::{Caps, FiniteGroup};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::Item;
use crate::{MAX_CAP_ORDER, MAX_CAP_SUBGROUPS};

/// Everything a subcommand needs besides its own arguments.
pub struct Context {
    pub corpus: Corpus,
    /// `"bundled"` or the corpus directory as given.
    pub source: String,
    pub caps: Caps,
    pub beta: Option<BetaTable>,
}

impl Context {
    pub fn new(
        corpus: Option<&Path>,
        cap_order: Option<usize>,
        cap_subgroups: Option<usize>,
        beta: Option<&Path>,
    ) -> Result<Self, String> {
        let mut caps = Caps::default();
        if let Some(n) = cap_order {
            if n == 0 || n > MAX_CAP_ORDER {
                return Err(format!("--cap-order must be in 1..={MAX_CAP_ORDER}"));
            }
            caps.order = n;
        }
        if let Some(n) = cap_subgroups {
            if n > MAX_CAP_SUBGROUPS {
                return Err(format!("--cap-subgroups must be at most {MAX_CAP_SUBGROUPS}"));
            }
            caps.subgroup_order = n;
        }
        // groups are loaded under the global limits; the job caps apply per item
        let (corpus, source) = match corpus {
            Some(dir) => (load_corpus(dir, &Caps::default()).map_err(|e| e.to_string())?, dir.display().to_string()),
            None => (bundled(&Caps::default()), "bundled".to_string()),
        };
        let beta = match beta {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                Some(serde_json::from_str(&text).map_err(|e| format!("{}: malformed β table: {e}", path.display()))?)
            }
            None => None,
        };
        Ok(Self { corpus, source, caps, beta })
    }

    /// The named groups, or the whole corpus by (order, name).
    pub fn select(&self, names: &[String]) -> Vec<(String, Result<FiniteGroup, String>)> {
        if names.is_empty() {
            return self.corpus.sorted().into_iter().map(|(n, g)| (n, Ok(g))).collect();
        }
        names.iter().map(|n| (n.clone(), self.group(n).cloned())).collect()
    }

    pub fn group(&self, name: &str) -> Result<&FiniteGroup, String> {
        self.corpus.get(name).ok_or_else(|| format!("unknown group {name}"))
    }

    pub fn check_order(&self, g: &FiniteGroup) -> Result<(), String> {
        if g.order() > self.caps.order {
            return Err(format!("group order cap exceeded: {} > {}", g.order(), self.caps.order));
        }
        Ok(())
    }

    /// Runs `f` on every selected group in parallel; items keep the
    /// selection order.
    pub fn per_group<T, F>(&self, names: &[String], f: F) -> Vec<Item>
    where
        T: Serialize,
        F: Fn(&FiniteGroup) -> Result<T, String> + Sync,
    {
        self.select(names)
            .into_par_iter()
            .map(|(name, g)| {
                let r = g.and_then(|g| {
                    self.check_order(&g)?;
                    f(&g)
                });
                Item::from_result(name, r)
            })
            .collect()
    }
}

pub const EXPORT_COLUMNS: &[&str] = &["file", "order"];

#[derive(Serialize)]
struct Exported {
    file: String,
    order: usize,
}

pub fn export(dir: &Path) -> Vec<Item> {
    let files = bundled_files();
    if let Err(e) = write_corpus(dir, &files, &Caps::default()) {
        return files.iter().map(|f| Item::error(f.name(), &e)).collect();
    }
    files
        .iter()
        .map(|f| {
            let order = f.build(&Caps::default()).expect("bundled groups are valid").order();
            Item::ok(f.name(), Exported { file: format!("{}.json", f.name()), order })
        })
        .collect()
}
