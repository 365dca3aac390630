#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use ctt_core::backends::fenced;
use ctt_core::corpus::{bundled_seed_dir, generate, load_seeds, Corpus};
use ctt_core::llm::{Matcher, TapeEntry};
use ctt_core::par::Strategy;
use ctt_core::transforms::reference_source;
use ctt_core::TaskId;

pub const BIN: &str = env!("CARGO_BIN_EXE_ctt");

pub fn ctt(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("ctt binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

pub fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| generate(&load_seeds(&bundled_seed_dir()).unwrap(), &TaskId::ALL, Strategy::Parallel).unwrap())
}

pub fn entry(marker: &str, reply: impl Into<String>) -> TapeEntry {
    TapeEntry { matcher: Matcher::Contains(marker.into()), reply: reply.into() }
}

pub fn write_tape(path: &Path, entries: &[TapeEntry]) {
    std::fs::write(path, serde_json::to_string_pretty(entries).unwrap()).unwrap();
}

/// A per-task tape directory answering the chain the way a perfect model would.
pub fn oracle_chain_tapes(dir: &Path) -> PathBuf {
    std::fs::create_dir_all(dir).unwrap();
    for task in TaskId::ALL {
        write_tape(
            &dir.join(format!("{task}.json")),
            &[
                entry("Describe the transformation", task.spec().description),
                entry("Is this description adequate", "ADEQUATE"),
                entry("def xform(code: ast.AST)", fenced(reference_source(task))),
            ],
        );
    }
    dir.to_path_buf()
}

/// Per-task rewrite tapes, replying to the evaluation programs in order.
pub fn rewrite_tapes(dir: &Path, oracle: bool) -> PathBuf {
    std::fs::create_dir_all(dir).unwrap();
    for task in TaskId::ALL {
        let entries: Vec<TapeEntry> = corpus()
            .eval_set(task)
            .iter()
            .map(|e| {
                let reply = if oracle { &e.expected_source } else { &e.input_source };
                entry("Apply the same transformation", fenced(reply))
            })
            .collect();
        write_tape(&dir.join(format!("{task}.json")), &entries);
    }
    dir.to_path_buf()
}

/// The single run directory under `root`.
pub fn only_run(root: &Path) -> PathBuf {
    let dirs: Vec<PathBuf> = std::fs::read_dir(root).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(dirs.len(), 1, "{dirs:?}");
    dirs[0].clone()
}

pub fn report(run_dir: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(run_dir.join("eval/report.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn overall_cell(report: &serde_json::Value) -> String {
    let o = &report["overall"];
    format!(
        "{:.2} ({:.2}, {:.2})",
        o["f1"].as_f64().unwrap(),
        o["precision"].as_f64().unwrap(),
        o["recall"].as_f64().unwrap()
    )
}
