#![allow(dead_code)]

pub mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;

use tribracket::diagrams::{parse_pd_file, Diagram};
use tribracket::TribracketTable;

pub fn data_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

pub fn tensor(name: &str) -> TribracketTable {
    let text = std::fs::read_to_string(data_path(&format!("tensors/{name}.tensor"))).unwrap();
    text.parse::<TribracketTable>().unwrap().with_name(name)
}

pub fn diagrams(file: &str) -> Vec<Diagram> {
    let text = std::fs::read_to_string(data_path(&format!("pd/{file}"))).unwrap();
    parse_pd_file(&text).unwrap()
}

/// Reidemeister records grouped by the name before the last '.'.
pub fn move_groups() -> BTreeMap<String, Vec<Diagram>> {
    let mut groups: BTreeMap<String, Vec<Diagram>> = BTreeMap::new();
    for d in diagrams("reidemeister.pd") {
        let key = d.name().rsplit_once('.').unwrap().0.to_string();
        groups.entry(key).or_default().push(d);
    }
    groups
}

pub const BUNDLED_TENSORS: [&str; 9] = ["t2-1", "t2-2", "t3-1", "t3-2", "t3-3", "t3-4", "t3-5", "t3-6", "t3-7"];
