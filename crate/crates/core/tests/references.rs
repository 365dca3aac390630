//! The Python reference transforms agree with the built-in oracles on
//! every corpus example. Skipped when no `python3` is on PATH.

use std::io::Write;
use std::process::{Command, Stdio};

use ctt_core::corpus::{bundled_seed_dir, generate, load_seeds};
use ctt_core::par::Strategy;
use ctt_core::transforms::reference_source;
use ctt_core::TaskId;
use ctt_pyast::parse;

const DRIVER: &str = r#"
import ast, json, sys
job = json.load(sys.stdin)
ns = {}
exec(job["reference"], ns)
out = []
for src in job["inputs"]:
    try:
        out.append(ast.unparse(ns["xform"](ast.parse(src))))
    except Exception as e:
        out.append("!error " + type(e).__name__ + ": " + str(e))
json.dump(out, sys.stdout)
"#;

fn python_available() -> bool {
    Command::new("python3").arg("--version").output().map(|o| o.status.success()).unwrap_or(false)
}

fn run_reference(task: TaskId, inputs: &[&str]) -> Vec<String> {
    let mut child = Command::new("python3")
        .args(["-c", DRIVER])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let job = serde_json::json!({ "reference": reference_source(task), "inputs": inputs });
    child.stdin.take().unwrap().write_all(job.to_string().as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "driver failed for {task}");
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn python_references_match_oracles() {
    if !python_available() {
        eprintln!("python3 not found; skipping reference cross-check");
        return;
    }
    let corpus = generate(&load_seeds(&bundled_seed_dir()).unwrap(), &TaskId::ALL, Strategy::Parallel).unwrap();
    let mut bad = Vec::new();
    for task in TaskId::ALL {
        let examples = corpus.task(task);
        let inputs: Vec<&str> = examples.iter().map(|e| e.input_source.as_str()).collect();
        for (e, got) in examples.iter().zip(run_reference(task, &inputs)) {
            match parse(&got) {
                Ok(tree) if tree == e.expected_tree() => {}
                Ok(_) => bad.push(format!("{task}/{}: reference output differs:\n{got}", e.id)),
                Err(err) => bad.push(format!("{task}/{}: {err}: {got}", e.id)),
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n\n"));
}
