use std::sync::OnceLock;

use ctt_core::backends::{EchoBackend, OracleBackend};
use ctt_core::chain::{synthesize, ChainConfig};
use ctt_core::corpus::{bundled_seed_dir, generate, load_seeds, Corpus, Split};
use ctt_core::eval::{
    aggregate, cell, classify, ctt_records, f1, render_markdown, ttc_records, Actual, EvalError, EvalRecord, RunMeta,
};
use ctt_core::par::Strategy as Exec;
use ctt_core::prompts::PromptSet;
use ctt_core::sandbox::InProcessSandbox;
use ctt_core::ttc::{parse_rewrite, rewrite_task, RewriteStatus, TtcConfig};
use ctt_core::TaskId;
use proptest::prelude::*;

fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| generate(&load_seeds(&bundled_seed_dir()).unwrap(), &TaskId::ALL, Exec::Parallel).unwrap())
}

fn rec(input: &str, expected: &str, actual: Actual, run: usize) -> EvalRecord {
    EvalRecord {
        task: TaskId::AddSubZero,
        run,
        example_id: "x".into(),
        split: Split::Hidden,
        input: input.into(),
        expected: expected.into(),
        actual,
    }
}

fn out(s: &str) -> Actual {
    Actual::Output { source: s.into() }
}

#[test]
fn f1_reference_values() {
    assert_eq!(format!("{:.2}", f1(0.60, 1.00)), "0.75");
    assert_eq!(format!("{:.2}", f1(0.95, 0.99)), "0.97");
    assert_eq!(f1(0.0, 0.0), 0.0);
    assert_eq!(cell(0.75, 0.6, 1.0), "0.75 (0.60, 1.00)");
}

#[test]
fn classification_rules() {
    // correct rewrite
    let j = classify(&rec("x = a + 0\n", "x = a\n", out("x = a\n"), 0));
    assert!(j.precise && j.eligible && j.recalled);
    // wrong rewrite still counts as recalled
    let j = classify(&rec("x = a + 0\n", "x = a\n", out("x = 0\n"), 0));
    assert!(!j.precise && j.eligible && j.recalled);
    // unchanged positive
    let j = classify(&rec("x = a + 0\n", "x = a\n", out("x = a + 0\n"), 0));
    assert!(!j.precise && j.eligible && !j.recalled);
    // negative left alone
    let j = classify(&rec("x = a + 1\n", "x = a + 1\n", out("x = a + 1  # same\n"), 0));
    assert!(j.precise && !j.eligible && !j.recalled);
    // degenerate output
    let j = classify(&rec("x = a + 1\n", "x = a + 1\n", Actual::Degenerate { reason: "prose".into() }, 0));
    assert!(!j.precise && !j.recalled);
    let j = classify(&rec("x = a + 0\n", "x = a\n", Actual::Crash { reason: "boom".into() }, 0));
    assert!(!j.precise && j.eligible && !j.recalled);
    // unparsable output text
    let j = classify(&rec("x = a + 0\n", "x = a\n", out("x = = a\n"), 0));
    assert!(!j.precise && !j.recalled);
}

#[test]
fn empty_input_is_an_error() {
    assert!(matches!(aggregate("ctt", &[], &[]), Err(EvalError::EmptyInput)));
}

#[test]
fn precision_counts_all_records_and_recall_only_eligible_ones() {
    let records = vec![
        rec("x = a + 0\n", "x = a\n", out("x = a\n"), 0),
        rec("x = a + 0\n", "x = a\n", out("x = a + 0\n"), 0),
        rec("x = a + 1\n", "x = a + 1\n", out("x = a + 1\n"), 0),
        rec("x = a + 1\n", "x = a + 1\n", out("x = a\n"), 0),
        rec("x = b + 1\n", "x = b + 1\n", out("x = b + 1\n"), 0),
    ];
    let report = aggregate("ctt", &records, &[]).unwrap();
    let row = &report.tasks[0];
    assert!((row.precision - 3.0 / 5.0).abs() < 1e-12);
    assert!((row.recall - 0.5).abs() < 1e-12);
}

#[test]
fn scores_are_averaged_across_runs() {
    let good = rec("x = a + 0\n", "x = a\n", out("x = a\n"), 0);
    let mut bad = rec("x = a + 0\n", "x = a\n", out("x = a + 0\n"), 1);
    bad.run = 1;
    let report = aggregate("ctt", &[good, bad], &[]).unwrap();
    let row = &report.tasks[0];
    assert_eq!(row.runs, 2);
    assert!((row.precision - 0.5).abs() < 1e-12);
    assert!((row.recall - 0.5).abs() < 1e-12);
    assert!((row.f1 - 0.5).abs() < 1e-12);
    assert!((row.mean_f1 - 0.5).abs() < 1e-12);
}

#[test]
fn overall_pools_tasks_within_a_run() {
    let a = rec("x = a + 0\n", "x = a\n", out("x = a\n"), 0);
    let mut b = rec("y = b * 1\n", "y = b\n", out("y = b * 1\n"), 0);
    b.task = TaskId::DivMulOne;
    let c = rec("z = 1\n", "z = 1\n", out("z = 1\n"), 0);
    let report = aggregate("ctt", &[a, b, c], &[]).unwrap();
    assert!((report.overall.precision - 2.0 / 3.0).abs() < 1e-12);
    assert!((report.overall.recall - 0.5).abs() < 1e-12);
}

#[test]
fn synthesis_metadata_is_averaged() {
    let r = rec("x = a + 0\n", "x = a\n", out("x = a\n"), 0);
    let meta = [
        RunMeta { task: TaskId::AddSubZero, run: 0, attempts: 1, candidate_loc: Some(10) },
        RunMeta { task: TaskId::AddSubZero, run: 1, attempts: 4, candidate_loc: None },
    ];
    let report = aggregate("ctt", &[r], &meta).unwrap();
    assert_eq!(report.tasks[0].attempts_mean, Some(2.5));
    assert_eq!(report.tasks[0].candidate_loc_mean, Some(10.0));
}

#[test]
fn rewrite_replies_without_code_are_degenerate() {
    assert!(matches!(parse_rewrite("I cannot do that."), RewriteStatus::Degenerate { .. }));
    assert!(matches!(parse_rewrite("```python\nx = = 1\n```"), RewriteStatus::Degenerate { .. }));
    assert_eq!(parse_rewrite("```python\nx = 1\n```"), RewriteStatus::Rewritten { output: "x = 1".into() });
}

fn ctt_report(oracle: bool) -> ctt_core::eval::EvalReport {
    let sandbox = InProcessSandbox::default();
    let prompts = PromptSet::default();
    let cfg = ChainConfig::default();
    let mut records = Vec::new();
    let mut meta = Vec::new();
    for task in TaskId::ALL {
        let t = if oracle {
            synthesize(task, corpus(), &OracleBackend { task }, &sandbox, &prompts, &cfg).unwrap()
        } else {
            synthesize(task, corpus(), &EchoBackend, &sandbox, &prompts, &cfg).unwrap()
        };
        let cand = t.outcome.candidate();
        meta.push(RunMeta {
            task,
            run: 0,
            attempts: t.outcome.attempts(),
            candidate_loc: cand.map(|c| c.lines_of_code),
        });
        records.extend(ctt_records(task, 0, corpus(), cand, &sandbox, 10_000).unwrap());
    }
    aggregate("ctt", &records, &meta).unwrap()
}

#[test]
fn oracle_synthesis_scores_perfectly() {
    let report = ctt_report(true);
    assert_eq!(report.tasks.len(), 16);
    for row in &report.tasks {
        assert_eq!(cell(row.f1, row.precision, row.recall), "1.00 (1.00, 1.00)", "{}", row.id);
        assert_eq!(row.attempts_mean, Some(1.0));
    }
    let o = &report.overall;
    assert_eq!(cell(o.f1, o.precision, o.recall), "1.00 (1.00, 1.00)");
    let md = render_markdown(&report);
    assert!(md.contains("1.00 (1.00, 1.00)"));
    assert!(md.contains("Overall"));
}

#[test]
fn failed_synthesis_leaves_programs_unchanged() {
    let report = ctt_report(false);
    let o = &report.overall;
    assert_eq!(format!("{:.2} {:.2}", o.precision, o.recall), "0.50 0.00");
}

fn ttc_report(oracle: bool) -> ctt_core::eval::EvalReport {
    let prompts = PromptSet::default();
    let mut records = Vec::new();
    for task in TaskId::ALL {
        let rewrites = if oracle {
            rewrite_task(task, corpus(), &OracleBackend { task }, &prompts, &TtcConfig::default(), Exec::Parallel)
        } else {
            rewrite_task(task, corpus(), &EchoBackend, &prompts, &TtcConfig::default(), Exec::Parallel)
        };
        assert_eq!(rewrites.len(), 20);
        records.extend(ttc_records(0, corpus(), &rewrites));
    }
    aggregate("ttc", &records, &[]).unwrap()
}

#[test]
fn echo_rewrites_recall_nothing() {
    let o = ttc_report(false).overall;
    assert_eq!(format!("{:.2} {:.2}", o.recall, o.precision), "0.00 0.50");
}

#[test]
fn oracle_rewrites_are_perfect() {
    let o = ttc_report(true).overall;
    assert_eq!(format!("{:.2} {:.2}", o.recall, o.precision), "1.00 1.00");
}

#[test]
fn report_json_shape() {
    let report = ctt_report(true);
    let v = serde_json::to_value(&report).unwrap();
    let t = &v["tasks"][0];
    for key in ["id", "class", "precision", "recall", "f1", "runs", "attempts_mean", "candidate_loc_mean"] {
        assert!(t.get(key).is_some(), "{key}");
    }
    assert!(v["overall"]["f1"].is_number());
}

fn arb_record() -> impl Strategy<Value = EvalRecord> {
    let programs = prop::sample::select(vec!["x = a + 0\n", "x = a\n", "x = a + 1\n", "y = 2\n"]);
    let actual = prop_oneof![
        programs.clone().prop_map(|s| Actual::Output { source: s.to_string() }),
        Just(Actual::Degenerate { reason: "none".into() }),
        Just(Actual::Crash { reason: "boom".into() }),
    ];
    (programs.clone(), programs, actual, 0usize..3, prop::sample::select(TaskId::ALL.to_vec())).prop_map(
        |(i, e, a, run, task)| EvalRecord {
            task,
            run,
            example_id: "p".into(),
            split: Split::Hidden,
            input: i.into(),
            expected: e.into(),
            actual: a,
        },
    )
}

proptest! {
    #[test]
    fn f1_is_bounded_and_between_its_inputs(p in 0.0f64..=1.0, r in 0.0f64..=1.0) {
        let f = f1(p, r);
        prop_assert!((0.0..=1.0).contains(&f));
        if p > 0.0 && r > 0.0 {
            prop_assert!(f >= p.min(r) - 1e-12 && f <= p.max(r) + 1e-12);
        }
        prop_assert!((f - f1(r, p)).abs() < 1e-12);
    }

    #[test]
    fn scores_ignore_record_order(records in prop::collection::vec(arb_record(), 1..40), seed in any::<u64>()) {
        let mut shuffled = records.clone();
        let n = shuffled.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = aggregate("x", &records, &[]).unwrap();
        let b = aggregate("x", &shuffled, &[]).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scores_stay_in_unit_interval(records in prop::collection::vec(arb_record(), 1..40)) {
        let report = aggregate("x", &records, &[]).unwrap();
        for row in &report.tasks {
            for v in [row.precision, row.recall, row.f1, row.mean_f1] {
                prop_assert!((0.0..=1.0).contains(&v));
            }
        }
        let o = &report.overall;
        for v in [o.precision, o.recall, o.f1, o.mean_f1] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn degenerate_outputs_score_zero(mut records in prop::collection::vec(arb_record(), 1..40)) {
        for r in &mut records {
            r.actual = Actual::Degenerate { reason: "none".into() };
            r.expected = "x = 9\n".into();
        }
        let report = aggregate("x", &records, &[]).unwrap();
        prop_assert_eq!(report.overall.precision, 0.0);
        prop_assert_eq!(report.overall.recall, 0.0);
        prop_assert_eq!(report.overall.f1, 0.0);
    }
}
