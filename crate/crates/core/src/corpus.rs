//! Group files, corpus directories and the bundled small-group corpus.
//!
//! A group file holds either a full table or permutation generators:
//!
//! ```json
//! {"name": "Z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}
//! {"name": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]]}
//! ```
//!
//! A corpus directory holds group files and an `index.json` listing
//! `{"name", "order", "file"}` entries.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::tower::{coset_action_system, cyclic_tower, direct_power_system, InverseSystem};

pub const INDEX_FILE: &str = "index.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { name: String, order: usize, table: Vec<Vec<usize>> },
    Permutations { name: String, degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn name(&self) -> &str {
        match self {
            GroupFile::Table { name, .. } | GroupFile::Permutations { name, .. } => name,
        }
    }

    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { order, table, .. } => {
                if table.len() != *order {
                    return Err(Error::InvalidTable(format!("declared order {order}, table has {} rows", table.len())));
                }
                FiniteGroup::from_table(table, caps)
            }
            GroupFile::Permutations { degree, generators, .. } => FiniteGroup::from_permutations(*degree, generators, caps),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub name: String,
    pub order: usize,
    pub file: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub groups: Vec<(String, FiniteGroup)>,
    pub warnings: Vec<String>,
}

impl Corpus {
    pub fn get(&self, name: &str) -> Option<&FiniteGroup> {
        self.groups.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.groups.iter().map(|(n, _)| n.as_str())
    }

    /// Groups sorted by (order, name).
    pub fn sorted(&self) -> Vec<(String, FiniteGroup)> {
        let mut v = self.groups.clone();
        v.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));
        v
    }
}

fn read_group_file(path: &Path, caps: &Caps) -> Result<(String, FiniteGroup)> {
    let label = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{label}: {e}")))?;
    let spec: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{label}: malformed group file: {e}")))?;
    let g = spec.build(caps).map_err(|e| Error::Invalid(format!("{label}: {e}")))?;
    Ok((spec.name().to_string(), g))
}

/// Loads and validates every group of a corpus directory. Without an index
/// the `*.json` files are read in name order.
pub fn load_corpus(dir: &Path, caps: &Caps) -> Result<Corpus> {
    if !dir.is_dir() {
        return Err(Error::Invalid(format!("{}: not a directory", dir.display())));
    }
    let mut corpus = Corpus::default();
    let index_path = dir.join(INDEX_FILE);
    let entries: Vec<(Option<IndexEntry>, std::path::PathBuf)> = if index_path.is_file() {
        let text = fs::read_to_string(&index_path).map_err(|e| Error::Invalid(format!("{}: {e}", index_path.display())))?;
        let index: Vec<IndexEntry> = serde_json::from_str(&text)
            .map_err(|e| Error::Invalid(format!("{}: malformed index: {e}", index_path.display())))?;
        index.into_iter().map(|e| {
            let p = dir.join(&e.file);
            (Some(e), p)
        }).collect()
    } else {
        let mut files: Vec<_> = fs::read_dir(dir)
            .map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        if !files.is_empty() {
            corpus.warnings.push(format!("{}: no {INDEX_FILE}, reading all group files", dir.display()));
        }
        files.into_iter().map(|p| (None, p)).collect()
    };
    if entries.is_empty() {
        corpus.warnings.push(format!("{}: empty corpus", dir.display()));
    }
    let mut seen = BTreeSet::new();
    for (entry, path) in entries {
        let (name, g) = read_group_file(&path, caps)?;
        if let Some(e) = &entry {
            if e.name != name || e.order != g.order() {
                return Err(Error::Invalid(format!(
                    "{}: index lists {} of order {}, file holds {name} of order {}",
                    path.display(),
                    e.name,
                    e.order,
                    g.order()
                )));
            }
        }
        if !seen.insert(name.clone()) {
            return Err(Error::Invalid(format!("{}: duplicate group name {name}", path.display())));
        }
        corpus.groups.push((name, g));
    }
    Ok(corpus)
}

/// Writes group files and an index.
pub fn write_corpus(dir: &Path, files: &[GroupFile], caps: &Caps) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
    let mut index = Vec::with_capacity(files.len());
    for f in files {
        let order = f.build(caps)?.order();
        let file = format!("{}.json", f.name());
        let text = serde_json::to_string(f).expect("serializable");
        fs::write(dir.join(&file), text + "\n").map_err(|e| Error::Invalid(format!("{file}: {e}")))?;
        index.push(IndexEntry { name: f.name().to_string(), order, file });
    }
    let text = serde_json::to_string_pretty(&index).expect("serializable");
    fs::write(dir.join(INDEX_FILE), text + "\n").map_err(|e| Error::Invalid(format!("{INDEX_FILE}: {e}")))
}

fn table_file(name: &str, order: usize, mul: impl Fn(usize, usize) -> usize) -> GroupFile {
    let table = (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect();
    GroupFile::Table { name: name.to_string(), order, table }
}

fn perm_file(name: &str, degree: usize, generators: &[&[usize]]) -> GroupFile {
    GroupFile::Permutations { name: name.to_string(), degree, generators: generators.iter().map(|g| g.to_vec()).collect() }
}

/// The bundled corpus as group files.
pub fn bundled_files() -> Vec<GroupFile> {
    let mut files: Vec<GroupFile> = (1..=16).map(|n| table_file(&format!("Z{n}"), n, |a, b| (a + b) % n)).collect();
    files.push(perm_file("V4", 4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]]));
    files.push(perm_file("S3", 3, &[&[1, 0, 2], &[1, 2, 0]]));
    files.push(perm_file("D8", 4, &[&[1, 2, 3, 0], &[0, 3, 2, 1]]));
    files.push(perm_file("Q8", 8, &[&[1, 2, 3, 0, 5, 6, 7, 4], &[4, 7, 6, 5, 2, 1, 0, 3]]));
    files.push(table_file("E8", 8, |a, b| a ^ b));
    files.push(perm_file("S3xZ2", 5, &[&[1, 0, 2, 3, 4], &[1, 2, 0, 3, 4], &[0, 1, 2, 4, 3]]));
    files.push(perm_file("A4", 4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]]));
    files.push(perm_file("S4", 4, &[&[1, 2, 3, 0], &[1, 0, 2, 3]]));
    // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + ab'), coded a + 3b + 9c
    files.push(table_file("Heis27", 27, |x, y| {
        let (a, b, c) = (x % 3, x / 3 % 3, x / 9);
        let (a2, b2, c2) = (y % 3, y / 3 % 3, y / 9);
        (a + a2) % 3 + 3 * ((b + b2) % 3) + 9 * ((c + c2 + a * b2) % 3)
    }));
    // Z9 ⋊ Z3 with the generator acting by x ↦ 4x, coded x + 9y
    files.push(table_file("M27", 27, |u, w| {
        let (x, y) = (u % 9, u / 9);
        let (x2, y2) = (w % 9, w / 9);
        let twist = [1, 4, 7][y];
        (x + x2 * twist) % 9 + 9 * ((y + y2) % 3)
    }));
    files.push(perm_file("A5", 5, &[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]]));
    files
}

pub fn bundled(caps: &Caps) -> Corpus {
    let groups = bundled_files()
        .iter()
        .map(|f| (f.name().to_string(), f.build(caps).expect("bundled groups are valid")))
        .collect();
    Corpus { groups, warnings: Vec::new() }
}

pub fn bundled_tower_names() -> &'static [&'static str] {
    &["Z2-chain", "Z8-cosets", "S3-cosets", "Q8-cosets", "A5-power"]
}

/// The bundled towers by name.
pub fn bundled_tower(name: &str, caps: &Caps) -> Result<InverseSystem> {
    let corpus = bundled(caps);
    let get = |n: &str| corpus.get(n).expect("bundled").clone();
    match name {
        "Z2-chain" => cyclic_tower(2, 4, caps),
        "Z8-cosets" => {
            let z8 = FiniteGroup::cyclic(8);
            let chain: Vec<_> = [1, 2, 4, 0].iter().map(|&k| z8.generate([k])).collect();
            Ok(coset_action_system(&z8, &chain, caps)?.system)
        }
        "S3-cosets" => {
            let s3 = get("S3");
            let chain = [s3.whole(), s3.derived_subgroup(), s3.trivial_subgroup()];
            Ok(coset_action_system(&s3, &chain, caps)?.system)
        }
        "Q8-cosets" => {
            let q8 = get("Q8");
            let chain = [q8.whole(), q8.center(), q8.trivial_subgroup()];
            Ok(coset_action_system(&q8, &chain, caps)?.system)
        }
        "A5-power" => direct_power_system(&get("A5"), 2, caps),
        other => Err(Error::Invalid(format!("unknown tower {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_orders() {
        let caps = Caps::default();
        let c = bundled(&caps);
        let order = |n: &str| c.get(n).unwrap().order();
        assert_eq!(order("Z1"), 1);
        assert_eq!(order("S3xZ2"), 12);
        assert_eq!(order("S4"), 24);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("Heis27"), 27);
        assert_eq!(order("M27"), 27);
        let m27 = c.get("M27").unwrap();
        assert!(!m27.is_abelian());
        assert_eq!(m27.elements().map(|x| m27.element_order(x)).max(), Some(9));
        let heis = c.get("Heis27").unwrap();
        assert_eq!(heis.elements().map(|x| heis.element_order(x)).max(), Some(3));
        assert_eq!(heis.center().order(), 3);
    }

    #[test]
    fn towers() {
        let caps = Caps::default();
        assert_eq!(bundled_tower("S3-cosets", &caps).unwrap().orders(), vec![1, 2, 6]);
        assert_eq!(bundled_tower("Q8-cosets", &caps).unwrap().orders(), vec![1, 4, 8]);
        assert_eq!(bundled_tower("Z8-cosets", &caps).unwrap().orders(), vec![1, 2, 4, 8]);
        assert!(bundled_tower("nope", &caps).is_err());
    }
}
