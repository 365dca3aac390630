use std::sync::OnceLock;

use ctt_core::backends::{classify_prompt, fenced, EchoBackend, OracleBackend, IDENTITY_XFORM};
use ctt_core::chain::{synthesize, validate_candidate, Ablation, ChainConfig, ChainError, ChainTranscript, Event, Step};
use ctt_core::corpus::{bundled_seed_dir, generate, load_seeds, Corpus, Split};
use ctt_core::llm::{last_user, Matcher, Responder, ScriptedTape, TapeEntry};
use ctt_core::par::Strategy;
use ctt_core::prompts::{PromptSet, ADEQUATE};
use ctt_core::sandbox::InProcessSandbox;
use ctt_core::transforms::reference_source;
use ctt_core::TaskId;

fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| generate(&load_seeds(&bundled_seed_dir()).unwrap(), &TaskId::ALL, Strategy::Parallel).unwrap())
}

fn run(task: TaskId, backend: &dyn ctt_core::llm::Backend, cfg: &ChainConfig) -> ChainTranscript {
    synthesize(task, corpus(), backend, &InProcessSandbox::default(), &PromptSet::default(), cfg).unwrap()
}

fn entry(marker: &str, reply: impl Into<String>) -> TapeEntry {
    TapeEntry { matcher: Matcher::Contains(marker.into()), reply: reply.into() }
}

const TASK: TaskId = TaskId::AddSubZero;

fn fail_twice_tape(with_analysis: bool) -> ScriptedTape {
    let mut entries = vec![
        entry("Describe the transformation", "Remove additions of zero."),
        entry("Is this description adequate", ADEQUATE),
        entry("def xform(code: ast.AST)", fenced(IDENTITY_XFORM)),
    ];
    if with_analysis {
        entries.push(entry("Explain why", "It returns the input unchanged."));
    }
    entries.push(entry("Fix the function", fenced(IDENTITY_XFORM)));
    if with_analysis {
        entries.push(entry("Explain why", "Still unchanged."));
    }
    entries.push(entry("Fix the function", fenced(reference_source(TASK))));
    ScriptedTape::new(entries)
}

#[test]
fn oracle_succeeds_first_try_on_every_task() {
    for task in TaskId::ALL {
        let t = run(task, &OracleBackend { task }, &ChainConfig::default());
        assert!(t.outcome.is_success(), "{task}: {:?}", t.outcome);
        assert_eq!(t.outcome.attempts(), 1, "{task}");
        assert_eq!(t.refinements(), 1);
        assert_eq!(t.llm_calls(), 3);
        assert_eq!(t.outcome.candidate().unwrap().source.trim_end(), reference_source(task).trim_end());
    }
}

#[test]
fn two_failures_then_success_takes_three_attempts() {
    let tape = fail_twice_tape(true);
    let t = run(TASK, &tape, &ChainConfig::default());
    assert!(t.outcome.is_success(), "{:?}", t.outcome);
    assert_eq!(t.outcome.attempts(), 3);
    assert_eq!(t.analyses(), 2);
    assert_eq!(tape.remaining(), 0);
}

#[test]
fn nfa_skips_analysis() {
    let cfg = ChainConfig { ablation: Ablation::Nfa, ..ChainConfig::default() };
    let tape = fail_twice_tape(false);
    let t = run(TASK, &tape, &cfg);
    assert!(t.outcome.is_success());
    assert_eq!(t.outcome.attempts(), 3);
    assert_eq!(t.analyses(), 0);
    assert!(t.events().any(|e| matches!(e, Event::Skipped { step: Step::Analyze, .. })));
    let repair = t
        .events()
        .find_map(|e| match e {
            Event::LlmCall { step: Step::Repair, messages, .. } => Some(last_user(messages).to_string()),
            _ => None,
        })
        .unwrap();
    assert!(!repair.contains("Your analysis"));
}

#[test]
fn repair_prompt_carries_counterexample_and_analysis() {
    let t = run(TASK, &fail_twice_tape(true), &ChainConfig::default());
    let repair = t
        .events()
        .find_map(|e| match e {
            Event::LlmCall { step: Step::Repair, messages, .. } => Some(last_user(messages).to_string()),
            _ => None,
        })
        .unwrap();
    assert!(repair.contains("It returns the input unchanged."));
    assert!(repair.contains("Expected output"), "{repair}");
    assert!(repair.contains("return code"));
}

#[test]
fn always_failing_candidate_stops_at_the_repair_cap() {
    let t = run(TASK, &EchoBackend, &ChainConfig::default());
    assert!(!t.outcome.is_success());
    assert_eq!(t.outcome.attempts(), 50);
    assert_eq!(t.count(|e| matches!(e, Event::Candidate { .. })), 50);
    assert_eq!(t.analyses(), 49);
    match &t.outcome {
        ctt_core::chain::ChainOutcome::Failure { reason, .. } => assert!(reason.contains("max iterations")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn repair_cap_is_configurable() {
    let cfg = ChainConfig { max_repair_iters: 4, ..ChainConfig::default() };
    let t = run(TASK, &EchoBackend, &cfg);
    assert_eq!(t.outcome.attempts(), 4);
    assert_eq!(t.analyses(), 3);
}

#[test]
fn long_repair_dialogs_are_truncated() {
    let t = run(TASK, &EchoBackend, &ChainConfig::default());
    assert!(t.count(|e| matches!(e, Event::Truncation { .. })) > 0);
    for e in t.events() {
        if let Event::LlmCall { messages, .. } = e {
            // system, describe, description, three rounds of four, the prompt
            assert!(messages.len() <= 3 + 3 * 4 + 1, "{}", messages.len());
            assert!(messages[1].content.contains("Describe the transformation"));
        }
    }
}

#[test]
fn description_refinement_is_capped() {
    let backend = Responder(|h: &[ctt_core::llm::ChatMessage]| {
        let p = last_user(h);
        Ok(match classify_prompt(p) {
            Some(Step::Describe) => "first try".to_string(),
            Some(Step::Refine) => "a better description\nREVISE".to_string(),
            _ => fenced(reference_source(TASK)),
        })
    });
    let t = run(TASK, &backend, &ChainConfig::default());
    assert_eq!(t.refinements(), 10);
    assert!(t.outcome.is_success());
    let last = t
        .events()
        .filter_map(|e| match e {
            Event::Description { text, .. } => Some(text.clone()),
            _ => None,
        })
        .last()
        .unwrap();
    assert_eq!(last, "a better description");
}

#[test]
fn adequate_stops_refinement_immediately() {
    let t = run(TASK, &OracleBackend { task: TASK }, &ChainConfig::default());
    assert_eq!(t.refinements(), 1);
}

#[test]
fn prose_reply_is_a_malformed_attempt() {
    let tape = ScriptedTape::new([
        entry("Describe", "desc"),
        entry("adequate", ADEQUATE),
        entry("def xform", "I would walk the tree and drop zeros."),
        entry("Explain why", "No code was given."),
        entry("Fix the function", fenced(reference_source(TASK))),
    ]);
    let t = run(TASK, &tape, &ChainConfig::default());
    assert_eq!(t.count(|e| matches!(e, Event::Malformed { .. })), 1);
    assert!(t.outcome.is_success());
    assert_eq!(t.outcome.attempts(), 2);
}

#[test]
fn wrong_function_name_is_malformed() {
    let tape = ScriptedTape::new([
        entry("Describe", "desc"),
        entry("adequate", ADEQUATE),
        entry("def xform", fenced("def transform(code):\n    return code\n")),
        entry("Explain why", "Wrong name."),
        entry("Fix the function", fenced(reference_source(TASK))),
    ]);
    let t = run(TASK, &tape, &ChainConfig::default());
    let reason = t
        .events()
        .find_map(|e| match e {
            Event::Malformed { reason, .. } => Some(reason.clone()),
            _ => None,
        })
        .unwrap();
    assert!(reason.contains("xform"), "{reason}");
    assert_eq!(t.outcome.attempts(), 2);
}

#[test]
fn candidate_gate() {
    assert!(validate_candidate(IDENTITY_XFORM).is_ok());
    assert!(validate_candidate("def transform(code):\n    return code\n").is_err());
    assert!(validate_candidate("def xform(a):\n    return a\ndef xform(b):\n    return b\n").is_err());
    for task in TaskId::ALL {
        assert!(validate_candidate(reference_source(task)).is_ok(), "{task}");
    }
}

#[test]
fn nd_ablation_skips_the_description() {
    let cfg = ChainConfig { ablation: Ablation::Nd, ..ChainConfig::default() };
    let t = run(TASK, &OracleBackend { task: TASK }, &cfg);
    assert!(t.outcome.is_success());
    assert_eq!(t.llm_calls(), 1);
    assert_eq!(t.count(|e| matches!(e, Event::LlmCall { step: Step::Describe | Step::Refine, .. })), 0);
    let prompt = t
        .events()
        .find_map(|e| match e {
            Event::LlmCall { messages, .. } => Some(last_user(messages).to_string()),
            _ => None,
        })
        .unwrap();
    let first = &corpus().split(TASK, Split::Public)[0];
    assert!(prompt.contains(first.input_source.trim_end()));
}

#[test]
fn nd_keeps_the_examples_through_truncation() {
    let cfg = ChainConfig { ablation: Ablation::Nd, ..ChainConfig::default() };
    let t = run(TASK, &EchoBackend, &cfg);
    let last_repair = t
        .events()
        .filter_map(|e| match e {
            Event::LlmCall { step: Step::Repair, messages, .. } => Some(messages.clone()),
            _ => None,
        })
        .last()
        .unwrap();
    assert!(last_repair[1].content.contains("Below are 3 examples"));
}

#[test]
fn execution_uses_the_first_ten_public_examples() {
    let t = run(TASK, &EchoBackend, &ChainConfig { max_repair_iters: 1, ..ChainConfig::default() });
    let ids: Vec<String> = t
        .events()
        .find_map(|e| match e {
            Event::Execution { results, .. } => Some(results.iter().map(|r| r.example_id.clone()).collect()),
            _ => None,
        })
        .unwrap();
    let public: Vec<String> = corpus().split(TASK, Split::Public).iter().map(|e| e.id.clone()).collect();
    assert_eq!(ids, public[..10].to_vec());
}

#[test]
fn negatives_can_be_shown_during_synthesis() {
    let cfg = ChainConfig { negatives_visible: true, max_repair_iters: 1, ..ChainConfig::default() };
    let t = run(TASK, &OracleBackend { task: TASK }, &cfg);
    let total = t
        .events()
        .find_map(|e| match e {
            Event::Execution { total, .. } => Some(*total),
            _ => None,
        })
        .unwrap();
    assert_eq!(total, 20);
}

#[test]
fn backend_errors_end_the_run_with_a_failure() {
    let tape = ScriptedTape::replies(["desc", ADEQUATE]);
    let t = run(TASK, &tape, &ChainConfig::default());
    match &t.outcome {
        ctt_core::chain::ChainOutcome::Failure { reason, attempts, .. } => {
            assert!(reason.contains("backend error"), "{reason}");
            assert_eq!(*attempts, 0);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(t.lines.last().unwrap().event, Event::Outcome(_)));
}

#[test]
fn too_few_examples_is_a_precondition_error() {
    let cfg = ChainConfig { n_description_examples: 11, ..ChainConfig::default() };
    let err = synthesize(TASK, corpus(), &EchoBackend, &InProcessSandbox::default(), &PromptSet::default(), &cfg)
        .unwrap_err();
    assert!(matches!(err, ChainError::NotEnoughExamples { found: 10, .. }));
}

#[test]
fn runs_are_deterministic_given_a_tape() {
    let a = run(TASK, &fail_twice_tape(true), &ChainConfig::default());
    let b = run(TASK, &fail_twice_tape(true), &ChainConfig::default());
    let ea: Vec<&Event> = a.events().collect();
    let eb: Vec<&Event> = b.events().collect();
    assert_eq!(ea, eb);
}

#[test]
fn transcript_lines_round_trip_through_jsonl() {
    let t = run(TASK, &fail_twice_tape(true), &ChainConfig::default());
    let text = t.to_jsonl();
    let back: Vec<ctt_core::chain::TranscriptLine> =
        text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(back, t.lines);
    for (i, l) in back.iter().enumerate() {
        assert_eq!(l.seq, i);
    }
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["event"], "config");
}

#[test]
fn sandbox_failures_surface_as_counterexamples() {
    let tape = ScriptedTape::new([
        entry("Describe", "desc"),
        entry("adequate", ADEQUATE),
        entry("def xform", fenced("def xform(code):\n    raise ValueError(\"boom\")\n")),
        entry("Explain why", "It raises."),
        entry("Fix the function", fenced("def xform(code):\n    while True:\n        pass\n")),
        entry("Explain why", "It spins."),
        entry("Fix the function", fenced(reference_source(TASK))),
    ]);
    let t = run(TASK, &tape, &ChainConfig::default());
    assert!(t.outcome.is_success());
    let repairs: Vec<String> = t
        .events()
        .filter_map(|e| match e {
            Event::LlmCall { step: Step::Repair, messages, .. } => Some(last_user(messages).to_string()),
            _ => None,
        })
        .collect();
    assert!(repairs[0].contains("ValueError") && repairs[0].contains("boom"), "{}", repairs[0]);
    assert!(repairs[1].contains("did not finish within 10000 ms"), "{}", repairs[1]);
}

