mod common;

use std::time::Duration;

use common::*;
use ctt_core::sandbox::{ExecRequest, Sandbox, Status, SubprocessSandbox};
use ctt_core::transforms::reference_source;
use ctt_core::TaskId;

#[test]
fn corpus_generate_reports_counts() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("corpus");
    let o = ctt(&["corpus", "generate", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "16 tasks, 480 examples");
    assert!(out.join("manifest.json").is_file());
}

#[test]
fn corpus_generate_subset() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("c");
    let o = ctt(&["corpus", "generate", "--tasks", "de_morgan,loop_unroll", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "2 tasks, 60 examples");
}

#[test]
fn missing_seed_dir_exits_with_usage_code() {
    let tmp = tempfile::tempdir().unwrap();
    let o = ctt(&["corpus", "generate", "--seeds", "/does/not/exist", "--out", tmp.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not exist"));
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    assert_eq!(ctt(&["synthesize", "--backend", "nonsense"]).status.code(), Some(2));
    assert_eq!(ctt(&["synthesize", "--task", "no_such_task"]).status.code(), Some(2));
    assert_eq!(ctt(&["synthesize", "--ablation", "half"]).status.code(), Some(2));
    assert_eq!(ctt(&["eval", "--mode", "ctt", "--run-dir", "/does/not/exist"]).status.code(), Some(2));
    assert_eq!(ctt(&["bogus"]).status.code(), Some(2));
}

#[test]
fn http_backend_needs_an_api_key() {
    let tmp = tempfile::tempdir().unwrap();
    let o = std::process::Command::new(BIN)
        .args(["synthesize", "--backend", "http", "--runs-root", tmp.path().to_str().unwrap()])
        .env_remove("CTT_API_KEY")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CTT_API_KEY"));
}

#[test]
fn unreachable_http_backend_records_failures() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"backend":{"kind":"http","base_url":"http://127.0.0.1:9","max_attempts":1,"initial_backoff_ms":1,"timeout_secs":2}}"#,
    )
    .unwrap();
    let root = tmp.path().join("runs");
    let o = std::process::Command::new(BIN)
        .args(["synthesize", "--task", "de_morgan", "--config", cfg.to_str().unwrap()])
        .args(["--runs-root", root.to_str().unwrap()])
        .env("CTT_API_KEY", "test-key")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("failed after 0 attempt(s): backend error"), "{}", stdout(&o));
}

#[test]
fn synthesize_and_eval_with_the_oracle() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("runs");
    let o = ctt(&["synthesize", "--task", "add_sub_zero,de_morgan", "--backend", "oracle", "--runs", "2"]
        .into_iter()
        .chain(["--runs-root", root.to_str().unwrap(), "--label", "smoke"])
        .collect::<Vec<_>>());
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("4/4 runs succeeded"));
    let run = only_run(&root);
    assert!(run.file_name().unwrap().to_str().unwrap().ends_with("-smoke"));
    for f in ["config.json", "outcomes.jsonl", "transcripts/de_morgan-r1.jsonl", "candidates/add_sub_zero-r0.py"] {
        assert!(run.join(f).is_file(), "{f}");
    }
    let o = ctt(&["eval", "--mode", "ctt", "--run-dir", run.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(run.join("eval/report.md").is_file());
    let r = report(&run);
    assert_eq!(overall_cell(&r), "1.00 (1.00, 1.00)");
    assert_eq!(r["tasks"][0]["runs"], 2);
    assert_eq!(r["tasks"].as_array().unwrap().len(), 2);
}

#[test]
fn flags_land_in_the_run_config() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("runs");
    let args = [
        "synthesize", "--task", "de_morgan", "--backend", "echo", "--ablation", "nfa", "--max-repair", "3",
        "--max-describe", "2", "--temperature", "0.7", "--workers", "1", "--runs-root",
    ];
    let o = ctt(&args.into_iter().chain([root.to_str().unwrap()]).collect::<Vec<_>>());
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("failed after 3 attempt(s)"), "{}", stdout(&o));
    let run = only_run(&root);
    let cfg: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(run.join("config.json")).unwrap()).unwrap();
    assert_eq!(cfg["chain"]["ablation"], "nfa");
    assert_eq!(cfg["chain"]["max_repair_iters"], 3);
    assert_eq!(cfg["chain"]["max_describe_iters"], 2);
    assert_eq!(cfg["chain"]["sampling"]["temperature"], 0.7);
    assert_eq!(cfg["workers"], 1);
    let transcript = std::fs::read_to_string(run.join("transcripts/de_morgan-r0.jsonl")).unwrap();
    assert!(!transcript.contains("\"event\":\"analysis\""));
}

#[test]
fn config_file_is_read_and_flags_override_it() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"backend":{"kind":"echo"},"chain":{"max_repair_iters":2}}"#).unwrap();
    let root = tmp.path().join("runs");
    let o = ctt(&["synthesize", "--task", "de_morgan", "--config", cfg.to_str().unwrap(), "--runs-root", root.to_str().unwrap()]);
    assert!(stdout(&o).contains("failed after 2 attempt(s)"), "{}", stdout(&o));
    let root2 = tmp.path().join("runs2");
    let o = ctt(&[
        "synthesize", "--task", "de_morgan", "--config", cfg.to_str().unwrap(), "--backend", "oracle",
        "--runs-root", root2.to_str().unwrap(),
    ]);
    assert!(stdout(&o).contains("success after 1 attempt(s)"), "{}", stdout(&o));

    std::fs::write(&cfg, r#"{"nonsense": 1}"#).unwrap();
    let o = ctt(&["synthesize", "--config", cfg.to_str().unwrap(), "--runs-root", root.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn subprocess_sandbox_speaks_to_the_shim() {
    let sb = SubprocessSandbox::new(vec![BIN.to_string(), "sandbox-shim".to_string()]);
    let req = ExecRequest::new("r1", reference_source(TaskId::AddSubZero), vec!["x = a + 0\n".into(), "y = (\n".into()]);
    let resp = sb.run(&req).unwrap();
    assert_eq!(resp.id, "r1");
    assert!(resp.load_error.is_none());
    assert_eq!(resp.outcomes[0].status, Status::Ok);
    assert_eq!(resp.outcomes[0].output.as_deref().map(str::trim), Some("x = a"));
    assert_eq!(resp.outcomes[1].status, Status::Error);
    assert_eq!(resp.outcomes[1].error_type.as_deref(), Some("SyntaxError"));

    let unknown = ExecRequest::new("r2", "def xform(code):\n    return frob(code)\n", vec!["x = 1\n".into()]);
    let resp = sb.run(&unknown).unwrap();
    assert!(resp.load_error.is_some());
    let pid = sb.worker_pid();
    assert!(pid.is_some());
    assert_eq!(sb.run(&req).unwrap().outcomes.len(), 2);
    assert_eq!(sb.worker_pid(), pid);
}

#[test]
fn subprocess_sandbox_enforces_the_time_budget() {
    let sb = SubprocessSandbox::new(vec![BIN.to_string(), "sandbox-shim".to_string()])
        .with_slack(Duration::from_millis(200));
    let mut spin = ExecRequest::new("s", "def xform(code):\n    while True:\n        pass\n", vec!["x = 1\n".into()]);
    spin.timeout_ms = 100;
    let resp = sb.run(&spin).unwrap();
    assert_eq!(resp.outcomes[0].status, Status::Timeout);
}

#[test]
fn synthesis_through_the_subprocess_sandbox() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("runs");
    let shim = format!("{BIN} sandbox-shim");
    let o = ctt(&[
        "synthesize", "--task", "loop_unroll", "--backend", "oracle", "--sandbox-cmd", &shim,
        "--runs-root", root.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let run = only_run(&root);
    let o = ctt(&["eval", "--mode", "ctt", "--run-dir", run.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(overall_cell(&report(&run)), "1.00 (1.00, 1.00)");
}

#[test]
fn ttc_eval_with_rewrite_tapes() {
    let tmp = tempfile::tempdir().unwrap();
    let tapes = rewrite_tapes(&tmp.path().join("tapes"), false);
    let run = tmp.path().join("ttc-echo");
    let backend = format!("tape:{}", tapes.display());
    let o = ctt(&["eval", "--mode", "ttc", "--backend", &backend, "--run-dir", run.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(run.join("rewrites/de_morgan-r0.jsonl").is_file());
    let r = report(&run);
    assert_eq!(overall_cell(&r), "0.00 (0.50, 0.00)");

    // rescoring an existing run needs no backend
    let o = ctt(&["eval", "--mode", "ttc", "--run-dir", run.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn mode_mismatch_is_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let run = tmp.path().join("ttc");
    let o = ctt(&["eval", "--mode", "ttc", "--backend", "oracle", "--task", "de_morgan", "--run-dir", run.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = ctt(&["eval", "--mode", "ctt", "--run-dir", run.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
