use std::fs;
use std::path::{Path, PathBuf};

use fingroup::corpus::{bundled, bundled_files, load_corpus, write_corpus, INDEX_FILE};
use fingroup::Caps;

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn written_corpus_loads_back() {
    let caps = Caps::default();
    let dir = scratch("corpus-round-trip");
    write_corpus(&dir, &bundled_files(), &caps).unwrap();
    let loaded = load_corpus(&dir, &caps).unwrap();
    assert!(loaded.warnings.is_empty());
    let original = bundled(&caps);
    assert_eq!(loaded.groups.len(), original.groups.len());
    for (name, g) in &original.groups {
        assert_eq!(loaded.get(name).unwrap().rows(), g.rows(), "{name}");
    }
}

#[test]
fn empty_directory_warns() {
    let dir = scratch("corpus-empty");
    let c = load_corpus(&dir, &Caps::default()).unwrap();
    assert!(c.groups.is_empty());
    assert_eq!(c.warnings.len(), 1);
}

#[test]
fn without_index_reads_files_in_order() {
    let dir = scratch("corpus-no-index");
    fs::write(dir.join("b.json"), r#"{"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    fs::write(dir.join("a.json"), r#"{"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#).unwrap();
    let c = load_corpus(&dir, &Caps::default()).unwrap();
    assert_eq!(c.names().collect::<Vec<_>>(), vec!["S3", "Z2"]);
    assert!(c.warnings[0].contains(INDEX_FILE));
}

#[test]
fn errors_name_the_file() {
    let caps = Caps::default();
    let dir = scratch("corpus-nonassoc");
    // a Latin square with identity 0 that is not associative
    let table = r#"{"name": "L5", "order": 5, "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#;
    fs::write(dir.join("loop.json"), table).unwrap();
    let e = load_corpus(&dir, &caps).unwrap_err().to_string();
    assert!(e.contains("loop.json") && e.contains("not associative"), "{e}");

    let dir = scratch("corpus-duplicate");
    fs::write(dir.join("a.json"), r#"{"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    fs::write(dir.join("b.json"), r#"{"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    let e = load_corpus(&dir, &caps).unwrap_err().to_string();
    assert!(e.contains("duplicate") && e.contains("b.json"), "{e}");

    let dir = scratch("corpus-malformed");
    fs::write(dir.join("x.json"), "{not json").unwrap();
    let e = load_corpus(&dir, &caps).unwrap_err().to_string();
    assert!(e.contains("x.json"), "{e}");

    let dir = scratch("corpus-index-mismatch");
    fs::write(dir.join("z.json"), r#"{"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    fs::write(dir.join(INDEX_FILE), r#"[{"name": "Z3", "order": 3, "file": "z.json"}]"#).unwrap();
    let e = load_corpus(&dir, &caps).unwrap_err().to_string();
    assert!(e.contains("z.json"), "{e}");
}
