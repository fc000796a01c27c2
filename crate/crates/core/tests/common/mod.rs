#![allow(dead_code)]

use ybx_core::group::GroupTable;
use ybx_core::io::Document;

pub fn corpus_groups() -> Vec<(String, GroupTable)> {
    let text = include_str!("../../fixtures/groups.json");
    let docs: Vec<Document> = serde_json::from_str(text).unwrap();
    docs.into_iter()
        .map(|d| {
            let name = match &d {
                Document::Group { name, .. } => name.clone().unwrap_or_default(),
                _ => panic!("not a group"),
            };
            (name, d.into_group().unwrap())
        })
        .collect()
}
