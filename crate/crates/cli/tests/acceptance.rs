//! One pass/fail line per acceptance criterion.

mod common;

use common::*;
use ctt_core::backends::{fenced, IDENTITY_XFORM};
use ctt_core::chain::{synthesize, Ablation, ChainConfig, ChainTranscript};
use ctt_core::eval::{aggregate, classify, f1, Actual, EvalRecord};
use ctt_core::llm::ScriptedTape;
use ctt_core::prompts::PromptSet;
use ctt_core::sandbox::InProcessSandbox;
use ctt_core::semantics::compare_behavior;
use ctt_core::transforms::reference_source;
use ctt_core::{apply_oracle, TaskId};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn a1_oracles_reproduce_the_corpus() -> Check {
    let mut checked = 0;
    for task in TaskId::ALL {
        for e in corpus().task(task) {
            let out = apply_oracle(task, &e.input_tree());
            ensure(out == e.expected_tree(), format!("{} differs from its oracle output", e.id))?;
            ensure(apply_oracle(task, &out) == out, format!("{task} is not idempotent on {}", e.id))?;
            checked += 1;
        }
    }
    ensure(checked == 480, format!("{checked} examples, expected 480"))?;
    Ok(format!("{checked}/480 oracle checks, idempotent"))
}

fn a2_rewrites_preserve_behavior() -> Check {
    let tasks: Vec<TaskId> = TaskId::ALL.into_iter().filter(|t| t.executable()).collect();
    ensure(tasks.len() == 13, format!("{} executable tasks", tasks.len()))?;
    let mut pairs = 0;
    for &task in tasks.iter().filter(|&&t| t != TaskId::LoopDupe) {
        for e in corpus().task(task) {
            let check = compare_behavior(&e.input_source, &e.expected_source).map_err(|err| err.to_string())?;
            ensure(check.input_runs_cleanly(), format!("{} does not run: {}", e.id, check.explain()))?;
            ensure(check.same, format!("{} changes behavior: {}", e.id, check.explain()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs across 12 tasks behave identically"))
}

fn a3_oracle_tape_end_to_end() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let tapes = oracle_chain_tapes(&tmp.path().join("tapes"));
    let root = tmp.path().join("runs");
    let backend = format!("tape:{}", tapes.display());
    let shim = format!("{BIN} sandbox-shim");
    let o = ctt(&[
        "synthesize", "--task", "all", "--backend", &backend, "--sandbox-cmd", &shim,
        "--runs-root", root.to_str().unwrap(),
    ]);
    ensure(o.status.success(), stderr(&o))?;
    let out = stdout(&o);
    ensure(out.matches("success after 1 attempt(s)").count() == 16, out.clone())?;
    let run = only_run(&root);
    let o = ctt(&["eval", "--mode", "ctt", "--run-dir", run.to_str().unwrap()]);
    ensure(o.status.success(), stderr(&o))?;
    let cell = overall_cell(&report(&run));
    ensure(cell == "1.00 (1.00, 1.00)", format!("overall {cell}"))?;
    Ok(format!("16/16 tasks in 1 attempt, overall {cell}"))
}

fn chain_run(tape: &ScriptedTape, cfg: &ChainConfig) -> ChainTranscript {
    synthesize(TaskId::DeMorgan, corpus(), tape, &InProcessSandbox::default(), &PromptSet::default(), cfg).unwrap()
}

fn fail_twice(analysis: bool) -> ScriptedTape {
    let mut e = vec![
        entry("Describe the transformation", "Push negations inward."),
        entry("Is this description adequate", "ADEQUATE"),
        entry("def xform(code: ast.AST)", fenced(IDENTITY_XFORM)),
    ];
    for reply in [fenced(IDENTITY_XFORM), fenced(reference_source(TaskId::DeMorgan))] {
        if analysis {
            e.push(entry("Explain why", "The code returns its input."));
        }
        e.push(entry("Fix the function", reply));
    }
    ScriptedTape::new(e)
}

fn a4_repair_loop() -> Check {
    let t = chain_run(&fail_twice(true), &ChainConfig::default());
    ensure(t.outcome.is_success() && t.outcome.attempts() == 3, format!("full: {:?}", t.outcome))?;
    ensure(t.analyses() == 2, format!("full: {} analyses", t.analyses()))?;

    let nfa = ChainConfig { ablation: Ablation::Nfa, ..ChainConfig::default() };
    let t = chain_run(&fail_twice(false), &nfa);
    ensure(t.outcome.is_success() && t.outcome.attempts() == 3, format!("nfa: {:?}", t.outcome))?;
    ensure(t.analyses() == 0, format!("nfa: {} analyses", t.analyses()))?;

    let mut always = vec![
        entry("Describe the transformation", "Nothing."),
        entry("Is this description adequate", "ADEQUATE"),
        entry("def xform(code: ast.AST)", fenced(IDENTITY_XFORM)),
    ];
    for _ in 0..49 {
        always.push(entry("Explain why", "It returns its input."));
        always.push(entry("Fix the function", fenced(IDENTITY_XFORM)));
    }
    let tape = ScriptedTape::new(always);
    let t = chain_run(&tape, &ChainConfig::default());
    ensure(!t.outcome.is_success() && t.outcome.attempts() == 50, format!("cap: {:?}", t.outcome))?;
    ensure(tape.remaining() == 0, "tape not fully consumed")?;

    let mut revise = vec![entry("Describe the transformation", "Rough.")];
    for k in 0..10 {
        revise.push(entry("Is this description adequate", format!("Better {k}.\nREVISE")));
    }
    revise.push(entry("def xform(code: ast.AST)", fenced(reference_source(TaskId::DeMorgan))));
    let t = chain_run(&ScriptedTape::new(revise), &ChainConfig::default());
    ensure(t.refinements() == 10 && t.outcome.is_success(), format!("refine: {}", t.refinements()))?;
    Ok("3 attempts with 2 analyses (0 under nfa), cap at 50, refinement cap at 10".into())
}

fn record(input: &str, expected: &str, actual: Actual) -> EvalRecord {
    EvalRecord {
        task: TaskId::AddSubZero,
        run: 0,
        example_id: "p".into(),
        split: ctt_core::corpus::Split::Hidden,
        input: input.into(),
        expected: expected.into(),
        actual,
    }
}

fn a5_metrics() -> Check {
    let a = format!("{:.2}", f1(0.60, 1.00));
    let b = format!("{:.2}", f1(0.95, 0.99));
    ensure(a == "0.75" && b == "0.97", format!("F1 gave {a} and {b}"))?;

    let programs = prop::sample::select(vec!["x = a + 0\n", "x = a\n", "y = 2\n"]);
    let actual = prop_oneof![
        programs.clone().prop_map(|s| Actual::Output { source: s.into() }),
        Just(Actual::Degenerate { reason: "none".into() }),
    ];
    let rec = (programs.clone(), programs, actual).prop_map(|(i, e, a)| record(i, e, a));
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    runner
        .run(&(prop::collection::vec(rec, 1..30), any::<prop::sample::Index>()), |(records, idx)| {
            let report = aggregate("x", &records, &[]).unwrap();
            let mut rotated = records.clone();
            rotated.rotate_left(idx.index(records.len()));
            prop_assert_eq!(&aggregate("x", &rotated, &[]).unwrap(), &report);
            let o = &report.overall;
            for v in [o.precision, o.recall, o.f1] {
                prop_assert!((0.0..=1.0).contains(&v));
            }
            let degenerate: Vec<EvalRecord> = records
                .iter()
                .map(|r| EvalRecord { actual: Actual::Degenerate { reason: "none".into() }, ..r.clone() })
                .collect();
            let d = aggregate("x", &degenerate, &[]).unwrap().overall;
            prop_assert_eq!((d.precision, d.f1), (0.0, 0.0));
            if degenerate.iter().any(|r| classify(r).eligible) {
                prop_assert_eq!(d.recall, 0.0);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("F1(0.60, 1.00) = {a}, F1(0.95, 0.99) = {b}, invariants hold"))
}

fn ttc_scores(oracle: bool) -> Result<(String, String), String> {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let tapes = rewrite_tapes(&tmp.path().join("tapes"), oracle);
    let run = tmp.path().join("run");
    let backend = format!("tape:{}", tapes.display());
    let o = ctt(&["eval", "--mode", "ttc", "--backend", &backend, "--run-dir", run.to_str().unwrap()]);
    ensure(o.status.success(), stderr(&o))?;
    let r = report(&run);
    let o = &r["overall"];
    Ok((format!("{:.2}", o["recall"].as_f64().unwrap()), format!("{:.2}", o["precision"].as_f64().unwrap())))
}

fn a6_baseline_bounds() -> Check {
    let echo = ttc_scores(false)?;
    ensure(echo == ("0.00".into(), "0.50".into()), format!("echo recall/precision {echo:?}"))?;
    let oracle = ttc_scores(true)?;
    ensure(oracle == ("1.00".into(), "1.00".into()), format!("oracle recall/precision {oracle:?}"))?;
    Ok(format!("echo R={} P={}, oracle R={} P={}", echo.0, echo.1, oracle.0, oracle.1))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("A1", a1_oracles_reproduce_the_corpus),
        ("A2", a2_rewrites_preserve_behavior),
        ("A3", a3_oracle_tape_end_to_end),
        ("A4", a4_repair_loop),
        ("A5", a5_metrics),
        ("A6", a6_baseline_bounds),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("{name} PASS: {detail}"),
            Err(why) => {
                println!("{name} FAIL: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("acceptance failed: {failed:?}");
        std::process::exit(1);
    }
}
