//! The synthesis chain: describe the transform from examples, refine the
//! description, implement `xform`, execute it, analyze failures and repair.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use ctt_pyast::{parse, Stmt};
use serde::{Deserialize, Serialize};

use crate::corpus::{lines_of_code, Corpus, ExamplePair, Split};
use crate::llm::{extract_code_block, Backend, ChatMessage, LlmError, SamplingConfig};
use crate::prompts::{fill, format_examples, split_verdict, Counterexample, PromptSet};
use crate::sandbox::{ExecRequest, ExecResponse, Sandbox, Status, DEFAULT_MEMORY_LIMIT_MB, DEFAULT_TIMEOUT_MS};
use crate::transforms::TaskId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ablation {
    #[default]
    Full,
    /// No failure analysis before repairs.
    Nfa,
    /// No natural-language description; implement straight from examples.
    Nd,
}

impl fmt::Display for Ablation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ablation::Full => "full",
            Ablation::Nfa => "nfa",
            Ablation::Nd => "nd",
        })
    }
}

impl FromStr for Ablation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Ablation::Full),
            "nfa" => Ok(Ablation::Nfa),
            "nd" => Ok(Ablation::Nd),
            other => Err(format!("unknown ablation '{other}' (expected full, nfa or nd)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ChainConfig {
    pub max_describe_iters: usize,
    pub max_repair_iters: usize,
    pub ablation: Ablation,
    pub n_description_examples: usize,
    pub n_execution_examples: usize,
    /// Repair rounds kept verbatim in the dialog; older ones are dropped.
    pub history_rounds: usize,
    /// Also execute candidates against the negative split during synthesis.
    pub negatives_visible: bool,
    pub timeout_ms: u64,
    pub memory_limit_mb: u64,
    pub sampling: SamplingConfig,
}

impl Default for ChainConfig {
    fn default() -> Self {
        Self {
            max_describe_iters: 10,
            max_repair_iters: 50,
            ablation: Ablation::Full,
            n_description_examples: 3,
            n_execution_examples: 10,
            history_rounds: 3,
            negatives_visible: false,
            timeout_ms: DEFAULT_TIMEOUT_MS,
            memory_limit_mb: DEFAULT_MEMORY_LIMIT_MB,
            sampling: SamplingConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    Describe,
    Refine,
    Implement,
    Analyze,
    Repair,
    Rewrite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Mismatch { expected: String, actual: String },
    Crash { error_type: String, message: String, traceback: String },
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleResult {
    pub example_id: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTransform {
    pub source: String,
    pub version: usize,
    pub lines_of_code: usize,
}

impl CandidateTransform {
    fn new(source: String, version: usize) -> Self {
        let lines_of_code = lines_of_code(&source);
        Self { source, version, lines_of_code }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ChainOutcome {
    Success { candidate: CandidateTransform, attempts: usize, llm_calls: usize },
    Failure { reason: String, attempts: usize, llm_calls: usize },
}

impl ChainOutcome {
    pub fn attempts(&self) -> usize {
        match self {
            ChainOutcome::Success { attempts, .. } | ChainOutcome::Failure { attempts, .. } => *attempts,
        }
    }

    pub fn candidate(&self) -> Option<&CandidateTransform> {
        match self {
            ChainOutcome::Success { candidate, .. } => Some(candidate),
            ChainOutcome::Failure { .. } => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, ChainOutcome::Success { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Config { task: TaskId, config: ChainConfig },
    Skipped { step: Step, reason: String },
    LlmCall { step: Step, messages: Vec<ChatMessage>, reply: String },
    Description { iteration: usize, adequate: bool, text: String },
    Candidate { candidate: CandidateTransform },
    Malformed { version: usize, reason: String },
    Execution { version: usize, passed: usize, total: usize, load_error: Option<String>, results: Vec<ExampleResult> },
    Analysis { version: usize, text: String },
    Truncation { dropped_rounds: usize, kept_rounds: usize },
    Outcome(ChainOutcome),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranscriptLine {
    pub seq: usize,
    pub elapsed_ms: u64,
    #[serde(flatten)]
    pub event: Event,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainTranscript {
    pub task: TaskId,
    pub lines: Vec<TranscriptLine>,
    pub outcome: ChainOutcome,
}

impl ChainTranscript {
    pub fn events(&self) -> impl Iterator<Item = &Event> {
        self.lines.iter().map(|l| &l.event)
    }

    pub fn count(&self, pred: impl Fn(&Event) -> bool) -> usize {
        self.events().filter(|e| pred(e)).count()
    }

    pub fn analyses(&self) -> usize {
        self.count(|e| matches!(e, Event::Analysis { .. }))
    }

    pub fn refinements(&self) -> usize {
        self.count(|e| matches!(e, Event::LlmCall { step: Step::Refine, .. }))
    }

    pub fn llm_calls(&self) -> usize {
        self.count(|e| matches!(e, Event::LlmCall { .. }))
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        self.lines
            .iter()
            .map(|l| serde_json::to_string(l).expect("transcript lines serialize") + "\n")
            .collect()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ChainError {
    #[error("task {task} has {found} public examples, {needed} needed")]
    NotEnoughExamples { task: TaskId, needed: usize, found: usize },
}

/// Checks that `source` defines exactly one top-level `xform`.
pub fn validate_candidate(source: &str) -> Result<(), String> {
    if let Ok(tree) = parse(source) {
        let defs = tree
            .body
            .iter()
            .filter(|s| matches!(s, Stmt::FunctionDef { name, .. } if name == "xform"))
            .count();
        return match defs {
            1 => Ok(()),
            0 => Err("the code does not define a function named `xform`".into()),
            n => Err(format!("the code defines `xform` {n} times")),
        };
    }
    let defs = source.lines().filter(|l| l.starts_with("def xform(") || l.starts_with("def xform (")).count();
    match defs {
        1 => Ok(()),
        0 => Err("the code does not define a top-level function named `xform`".into()),
        n => Err(format!("the code defines `xform` {n} times")),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum StepError {
    #[error("backend error: {0}")]
    Backend(LlmError),
    #[error("sandbox error: {0}")]
    Sandbox(String),
}

/// One synthesis run for one task.
pub struct Chain<'a> {
    pub task: TaskId,
    backend: &'a dyn Backend,
    sandbox: &'a dyn Sandbox,
    prompts: &'a PromptSet,
    cfg: &'a ChainConfig,
    started: Instant,
    lines: Vec<TranscriptLine>,
    pinned: Vec<ChatMessage>,
    rounds: VecDeque<Vec<ChatMessage>>,
}

impl<'a> Chain<'a> {
    pub fn new(
        task: TaskId,
        backend: &'a dyn Backend,
        sandbox: &'a dyn Sandbox,
        prompts: &'a PromptSet,
        cfg: &'a ChainConfig,
    ) -> Self {
        Self {
            task,
            backend,
            sandbox,
            prompts,
            cfg,
            started: Instant::now(),
            lines: Vec::new(),
            pinned: vec![ChatMessage::system(prompts.system.trim_end())],
            rounds: VecDeque::new(),
        }
    }

    fn record(&mut self, event: Event) {
        self.lines.push(TranscriptLine {
            seq: self.lines.len(),
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            event,
        });
    }

    fn call(&mut self, step: Step, messages: Vec<ChatMessage>) -> Result<String, StepError> {
        let reply = self.backend.complete(&messages, &self.cfg.sampling).map_err(StepError::Backend)?;
        self.record(Event::LlmCall { step, messages, reply: reply.content.clone() });
        Ok(reply.content)
    }

    fn dialog(&self, prompt: &str) -> Vec<ChatMessage> {
        let mut m = self.pinned.clone();
        m.extend(self.rounds.iter().flatten().cloned());
        m.push(ChatMessage::user(prompt));
        m
    }

    fn trim_history(&mut self) {
        let mut dropped = 0;
        while self.rounds.len() > self.cfg.history_rounds {
            self.rounds.pop_front();
            dropped += 1;
        }
        if dropped > 0 {
            let kept_rounds = self.rounds.len();
            self.record(Event::Truncation { dropped_rounds: dropped, kept_rounds });
        }
    }

    /// Asks for an initial description of the examples.
    pub fn describe(&mut self, examples: &[&ExamplePair]) -> Result<String, StepError> {
        let prompt = fill(
            &self.prompts.describe,
            &[("count", &examples.len().to_string()), ("examples", &format_examples(examples))],
        );
        let reply = self.call(Step::Describe, self.dialog(&prompt))?;
        let text = reply.trim().to_string();
        self.pinned.push(ChatMessage::user(prompt));
        self.pinned.push(ChatMessage::assistant(text.clone()));
        self.record(Event::Description { iteration: 0, adequate: false, text: text.clone() });
        Ok(text)
    }

    /// Lets the model revise `description` until it calls it adequate or the
    /// iteration cap is hit.
    pub fn refine_description(&mut self, mut description: String) -> Result<(String, bool), StepError> {
        for iteration in 1..=self.cfg.max_describe_iters {
            let prompt = fill(&self.prompts.refine, &[("description", &description)]);
            let reply = self.call(Step::Refine, self.dialog(&prompt))?;
            let (adequate, body) = split_verdict(&reply);
            if !adequate && !body.is_empty() {
                description = body;
                *self.pinned.last_mut().expect("description is pinned") = ChatMessage::assistant(description.clone());
            }
            self.record(Event::Description { iteration, adequate, text: description.clone() });
            if adequate {
                return Ok((description, true));
            }
        }
        Ok((description, false))
    }

    fn candidate_from(&mut self, reply: &str, version: usize) -> Result<CandidateTransform, Counterexample> {
        let malformed = |reason: String| Counterexample::Malformed { reason };
        let source = extract_code_block(reply).map_err(|e| malformed(e.to_string()))?;
        validate_candidate(&source).map_err(malformed)?;
        Ok(CandidateTransform::new(source, version))
    }

    /// Runs `candidate` on `pairs` and compares against expected outputs.
    pub fn execute_candidate(
        &mut self,
        candidate: &CandidateTransform,
        pairs: &[&ExamplePair],
    ) -> Result<Vec<ExampleResult>, StepError> {
        let req = ExecRequest {
            id: format!("{}-v{}", self.task, candidate.version),
            transform_source: candidate.source.clone(),
            inputs: pairs.iter().map(|e| e.input_source.clone()).collect(),
            timeout_ms: self.cfg.timeout_ms,
            memory_limit_mb: self.cfg.memory_limit_mb,
        };
        let resp = self.sandbox.run(&req).map_err(|e| StepError::Sandbox(e.to_string()))?;
        let results = judge(pairs, &resp);
        let passed = results.iter().filter(|r| r.verdict == Verdict::Pass).count();
        self.record(Event::Execution {
            version: candidate.version,
            passed,
            total: results.len(),
            load_error: resp.load_error.as_ref().map(|l| format!("{}: {}", l.error_type, l.message)),
            results: results.clone(),
        });
        Ok(results)
    }

    /// Asks the model why `candidate` failed on `counterexample`.
    pub fn analyze_failure(&mut self, candidate: &str, counterexample: &Counterexample, version: usize) -> Result<String, StepError> {
        let prompt = fill(
            &self.prompts.analyze,
            &[("candidate", candidate), ("counterexample", &counterexample.render())],
        );
        let reply = self.call(Step::Analyze, self.dialog(&prompt))?;
        let text = reply.trim().to_string();
        self.record(Event::Analysis { version, text: text.clone() });
        if let Some(round) = self.rounds.back_mut() {
            round.push(ChatMessage::user(prompt));
            round.push(ChatMessage::assistant(text.clone()));
        } else {
            self.pinned.push(ChatMessage::user(prompt));
            self.pinned.push(ChatMessage::assistant(text.clone()));
        }
        Ok(text)
    }

    fn repair_prompt(&self, candidate: &str, counterexample: &Counterexample, analysis: Option<&str>) -> String {
        let section = analysis
            .map(|a| fill(&self.prompts.analysis_section, &[("analysis", a)]))
            .unwrap_or_default();
        fill(
            &self.prompts.repair,
            &[
                ("candidate", candidate),
                ("counterexample", &counterexample.render()),
                ("analysis_section", &section),
            ],
        )
    }

    fn implement_prompt(&self, description: Option<&str>, examples: &[&ExamplePair]) -> String {
        let count = examples.len().to_string();
        let examples = format_examples(examples);
        match description {
            Some(d) => fill(&self.prompts.implement, &[("description", d), ("examples", &examples), ("count", &count)]),
            None => fill(&self.prompts.implement_nd, &[("examples", &examples), ("count", &count)]),
        }
    }

    fn run(&mut self, corpus: &Corpus) -> Result<ChainOutcome, StepError> {
        let public = corpus.split(self.task, Split::Public);
        let shown: Vec<&ExamplePair> = public.iter().copied().take(self.cfg.n_description_examples).collect();
        let mut exec_set: Vec<&ExamplePair> = public.iter().copied().take(self.cfg.n_execution_examples).collect();
        if self.cfg.negatives_visible {
            exec_set.extend(corpus.split(self.task, Split::Negative));
        }

        let description = if self.cfg.ablation == Ablation::Nd {
            self.record(Event::Skipped { step: Step::Describe, reason: "ablation nd".into() });
            self.record(Event::Skipped { step: Step::Refine, reason: "ablation nd".into() });
            None
        } else {
            let first = self.describe(&shown)?;
            Some(self.refine_description(first)?.0)
        };
        if self.cfg.ablation == Ablation::Nfa {
            self.record(Event::Skipped { step: Step::Analyze, reason: "ablation nfa".into() });
        }

        let mut prompt = self.implement_prompt(description.as_deref(), &shown);
        let mut step = Step::Implement;
        for version in 1..=self.cfg.max_repair_iters {
            let reply = self.call(step, self.dialog(&prompt))?;
            let round = vec![ChatMessage::user(prompt.clone()), ChatMessage::assistant(reply.clone())];

            let (shown_code, failure) = match self.candidate_from(&reply, version) {
                Ok(candidate) => {
                    self.record(Event::Candidate { candidate: candidate.clone() });
                    let results = self.execute_candidate(&candidate, &exec_set)?;
                    match first_failure(&exec_set, &results, self.cfg.timeout_ms) {
                        None => {
                            return Ok(ChainOutcome::Success {
                                candidate,
                                attempts: version,
                                llm_calls: 0,
                            })
                        }
                        Some(cx) => (candidate.source, cx),
                    }
                }
                Err(cx) => {
                    let reason = match &cx {
                        Counterexample::Malformed { reason } => reason.clone(),
                        other => other.render(),
                    };
                    self.record(Event::Malformed { version, reason });
                    (reply.clone(), cx)
                }
            };

            if version == self.cfg.max_repair_iters {
                break;
            }
            if version == 1 && description.is_none() {
                self.pinned.extend(round);
            } else {
                self.rounds.push_back(round);
                self.trim_history();
            }
            let analysis = if self.cfg.ablation == Ablation::Nfa {
                None
            } else {
                Some(self.analyze_failure(&shown_code, &failure, version)?)
            };
            prompt = self.repair_prompt(&shown_code, &failure, analysis.as_deref());
            step = Step::Repair;
        }
        Ok(ChainOutcome::Failure {
            reason: format!("max iterations ({}) reached", self.cfg.max_repair_iters),
            attempts: self.cfg.max_repair_iters,
            llm_calls: 0,
        })
    }

    /// Runs the whole chain and returns its transcript.
    pub fn synthesize(mut self, corpus: &Corpus) -> Result<ChainTranscript, ChainError> {
        let public = corpus.split(self.task, Split::Public).len();
        let needed = self.cfg.n_description_examples.max(1);
        if public < needed {
            return Err(ChainError::NotEnoughExamples { task: self.task, needed, found: public });
        }
        self.record(Event::Config { task: self.task, config: self.cfg.clone() });
        let attempts_so_far = |lines: &[TranscriptLine]| {
            lines
                .iter()
                .filter(|l| matches!(l.event, Event::Candidate { .. } | Event::Malformed { .. }))
                .count()
        };
        let mut outcome = match self.run(corpus) {
            Ok(o) => o,
            Err(e) => ChainOutcome::Failure {
                reason: e.to_string(),
                attempts: attempts_so_far(&self.lines),
                llm_calls: 0,
            },
        };
        let calls = self.lines.iter().filter(|l| matches!(l.event, Event::LlmCall { .. })).count();
        match &mut outcome {
            ChainOutcome::Success { llm_calls, .. } | ChainOutcome::Failure { llm_calls, .. } => *llm_calls = calls,
        }
        self.record(Event::Outcome(outcome.clone()));
        Ok(ChainTranscript { task: self.task, lines: self.lines, outcome })
    }
}

/// Convenience wrapper around [`Chain::synthesize`].
pub fn synthesize(
    task: TaskId,
    corpus: &Corpus,
    backend: &dyn Backend,
    sandbox: &dyn Sandbox,
    prompts: &PromptSet,
    cfg: &ChainConfig,
) -> Result<ChainTranscript, ChainError> {
    Chain::new(task, backend, sandbox, prompts, cfg).synthesize(corpus)
}

/// Compares a sandbox response against the expected outputs of `pairs`.
pub fn judge(pairs: &[&ExamplePair], resp: &ExecResponse) -> Vec<ExampleResult> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let verdict = match (&resp.load_error, resp.outcomes.get(k)) {
                (Some(l), _) => Verdict::Crash {
                    error_type: l.error_type.clone(),
                    message: l.message.clone(),
                    traceback: l.traceback.clone(),
                },
                (None, None) => Verdict::Crash {
                    error_type: "ProtocolError".into(),
                    message: "no outcome for this input".into(),
                    traceback: String::new(),
                },
                (None, Some(o)) => match o.status {
                    Status::Ok => {
                        let actual = o.output.clone().unwrap_or_default();
                        let equal = parse(&actual).is_ok_and(|t| t == e.expected_tree());
                        if equal {
                            Verdict::Pass
                        } else {
                            Verdict::Mismatch { expected: e.expected_source.clone(), actual }
                        }
                    }
                    Status::Error => Verdict::Crash {
                        error_type: o.error_type.clone().unwrap_or_default(),
                        message: o.message.clone().unwrap_or_default(),
                        traceback: o.traceback.clone().unwrap_or_default(),
                    },
                    Status::Timeout => Verdict::Timeout,
                },
            };
            ExampleResult { example_id: e.id.clone(), verdict }
        })
        .collect()
}

fn first_failure(pairs: &[&ExamplePair], results: &[ExampleResult], timeout_ms: u64) -> Option<Counterexample> {
    let (pair, result) = pairs.iter().zip(results).find(|(_, r)| r.verdict != Verdict::Pass)?;
    let input = pair.input_source.clone();
    Some(match &result.verdict {
        Verdict::Pass => unreachable!(),
        Verdict::Mismatch { expected, actual } => Counterexample::Mismatch {
            input,
            expected: expected.clone(),
            actual: actual.clone(),
        },
        Verdict::Crash { error_type, message, traceback } => Counterexample::Crash {
            input,
            error_type: error_type.clone(),
            message: message.clone(),
            traceback: traceback.clone(),
        },
        Verdict::Timeout => Counterexample::Timeout { input, timeout_ms },
    })
}
