//! Graph files survive a render/parse round trip unchanged.

mod common;

use std::fs;

use common::graph_strategy;
use proptest::prelude::*;
use pvc4::generate::{generate, rule_trigger, GenSpec, Generated, Model};
use pvc4::io::{parse, render, GraphFile};

fn generated_files() -> Vec<GraphFile> {
    let mut files = Vec::new();
    for seed in 0..100u64 {
        let model = match seed % 7 {
            0 => Model::Gnp { n: 5 + seed as usize % 20, p: 0.2 },
            1 => Model::Path { n: 1 + seed as usize % 9 },
            2 => Model::Cycle { n: 3 + seed as usize % 9 },
            3 => Model::Star { leaves: seed as usize % 6 },
            4 => Model::Caterpillar { spine: 2 + seed as usize % 5, legs: 2 },
            5 => Model::CycleOfStars { s: 2 + seed as usize % 4 },
            _ => Model::RuleTrigger { rule: 3 + (seed % 22) as u8 },
        };
        let file = match generate(&GenSpec { model: model.clone(), seed }).unwrap() {
            Generated::Graph(g) => GraphFile::from_graph(g),
            Generated::Instance(inst) => GraphFile::from_instance(&inst),
        };
        files.push(file.with_comment(format!("model: {model}")).with_comment(format!("seed: {seed}")));
    }
    files
}

#[test]
fn hundred_generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (i, file) in generated_files().into_iter().enumerate() {
        let path = dir.path().join(format!("g{i}.txt"));
        fs::write(&path, render(&file)).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back, file, "file {i}");
        assert_eq!(render(&back), text, "file {i}");
    }
}

#[test]
fn instances_keep_v1_and_validity() {
    let inst = rule_trigger(24, 0).unwrap();
    let file = parse(&render(&GraphFile::from_instance(&inst))).unwrap();
    assert_eq!(file.v1.len(), inst.v1().count());
    let back = file.into_instance(inst.k()).unwrap();
    assert_eq!(back.v2_count(), inst.v2_count());
    assert_eq!(back.graph().num_edges(), inst.graph().num_edges());
}

proptest! {
    #[test]
    fn arbitrary_graphs_round_trip(g in graph_strategy(12), comment in "[a-z =0-9]{0,20}") {
        let file = GraphFile::from_graph(g).with_comment(comment);
        let text = render(&file);
        prop_assert_eq!(parse(&text).unwrap(), file);
    }
}
