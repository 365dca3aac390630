//! Precision, recall and F1 over evaluation records, and the reports built
//! from them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ctt_pyast::parse;
use serde::{Deserialize, Serialize};

use crate::chain::CandidateTransform;
use crate::corpus::{Corpus, ExamplePair, Split};
use crate::sandbox::{ExecRequest, Sandbox, SandboxError, Status};
use crate::transforms::{TaskClass, TaskId};
use crate::ttc::{Rewrite, RewriteStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Actual {
    Output { source: String },
    /// No usable program came back.
    Degenerate { reason: String },
    /// The transform raised, timed out or failed to load.
    Crash { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub task: TaskId,
    pub run: usize,
    pub example_id: String,
    pub split: Split,
    pub input: String,
    pub expected: String,
    pub actual: Actual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Judgement {
    pub precise: bool,
    pub eligible: bool,
    pub recalled: bool,
}

/// Scores one record. Outputs are compared as syntax trees, so formatting
/// and comments do not matter.
pub fn classify(rec: &EvalRecord) -> Judgement {
    let input = parse(&rec.input).ok();
    let expected = parse(&rec.expected).ok();
    let eligible = input != expected;
    let Actual::Output { source } = &rec.actual else {
        return Judgement { precise: false, eligible, recalled: false };
    };
    let Ok(actual) = parse(source) else {
        return Judgement { precise: false, eligible, recalled: false };
    };
    let precise = expected.as_ref() == Some(&actual);
    let recalled = eligible && input.as_ref() != Some(&actual);
    Judgement { precise, eligible, recalled }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub precise: usize,
    pub eligible: usize,
    pub recalled: usize,
}

impl Counts {
    pub fn add(&mut self, j: Judgement) {
        self.total += 1;
        self.precise += j.precise as usize;
        self.eligible += j.eligible as usize;
        self.recalled += j.recalled as usize;
    }

    pub fn of<'a>(records: impl IntoIterator<Item = &'a EvalRecord>) -> Self {
        let mut c = Counts::default();
        for r in records {
            c.add(classify(r));
        }
        c
    }

    pub fn precision(&self) -> f64 {
        ratio(self.precise, self.total)
    }

    /// With nothing to recall, recall is vacuously perfect.
    pub fn recall(&self) -> f64 {
        if self.eligible == 0 {
            1.0
        } else {
            ratio(self.recalled, self.eligible)
        }
    }
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

/// Harmonic mean of precision and recall, zero when both are zero.
pub fn f1(precision: f64, recall: f64) -> f64 {
    if precision + recall <= 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunScore {
    pub run: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub counts: Counts,
}

impl RunScore {
    fn new(run: usize, counts: Counts) -> Self {
        let (p, r) = (counts.precision(), counts.recall());
        Self { run, precision: p, recall: r, f1: f1(p, r), counts }
    }
}

/// Synthesis facts for one (task, run), when there was a synthesis step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMeta {
    pub task: TaskId,
    pub run: usize,
    pub attempts: usize,
    pub candidate_loc: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskRow {
    pub id: TaskId,
    pub class: TaskClass,
    pub precision: f64,
    pub recall: f64,
    /// F1 of the mean precision and mean recall.
    pub f1: f64,
    /// Mean of the per-run F1 scores.
    pub mean_f1: f64,
    pub runs: usize,
    pub attempts_mean: Option<f64>,
    pub candidate_loc_mean: Option<f64>,
    pub per_run: Vec<RunScore>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverallRow {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub mean_f1: f64,
    pub runs: usize,
    pub per_run: Vec<RunScore>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub mode: String,
    pub tasks: Vec<TaskRow>,
    pub overall: OverallRow,
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("no evaluation records to score")]
    EmptyInput,
    #[error(transparent)]
    Sandbox(#[from] SandboxError),
}

fn mean(xs: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, n) = xs.into_iter().fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

fn summarize(per_run: &[RunScore]) -> (f64, f64, f64, f64) {
    let p = mean(per_run.iter().map(|s| s.precision));
    let r = mean(per_run.iter().map(|s| s.recall));
    (p, r, f1(p, r), mean(per_run.iter().map(|s| s.f1)))
}

/// Scores `records` per task and overall. Each run is scored on its own and
/// the scores are averaged across runs; the overall row pools every task's
/// records within a run.
pub fn aggregate(mode: &str, records: &[EvalRecord], meta: &[RunMeta]) -> Result<EvalReport, EvalError> {
    if records.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    let mut by_task: BTreeMap<TaskId, BTreeMap<usize, Counts>> = BTreeMap::new();
    let mut by_run: BTreeMap<usize, Counts> = BTreeMap::new();
    for rec in records {
        let j = classify(rec);
        by_task.entry(rec.task).or_default().entry(rec.run).or_default().add(j);
        by_run.entry(rec.run).or_default().add(j);
    }

    let tasks = by_task
        .into_iter()
        .map(|(id, runs)| {
            let per_run: Vec<RunScore> = runs.into_iter().map(|(run, c)| RunScore::new(run, c)).collect();
            let (precision, recall, f1, mean_f1) = summarize(&per_run);
            let metas: Vec<&RunMeta> = meta.iter().filter(|m| m.task == id).collect();
            let attempts_mean = (!metas.is_empty()).then(|| mean(metas.iter().map(|m| m.attempts as f64)));
            let locs: Vec<f64> = metas.iter().filter_map(|m| m.candidate_loc.map(|l| l as f64)).collect();
            let candidate_loc_mean = (!locs.is_empty()).then(|| mean(locs));
            TaskRow {
                id,
                class: id.class(),
                precision,
                recall,
                f1,
                mean_f1,
                runs: per_run.len(),
                attempts_mean,
                candidate_loc_mean,
                per_run,
            }
        })
        .collect();

    let per_run: Vec<RunScore> = by_run.into_iter().map(|(run, c)| RunScore::new(run, c)).collect();
    let (precision, recall, f1, mean_f1) = summarize(&per_run);
    let overall = OverallRow { precision, recall, f1, mean_f1, runs: per_run.len(), per_run };
    Ok(EvalReport { mode: mode.to_string(), tasks, overall })
}

/// `F1 (P, R)` with two decimals.
pub fn cell(f1: f64, precision: f64, recall: f64) -> String {
    format!("{f1:.2} ({precision:.2}, {recall:.2})")
}

fn opt(x: Option<f64>, digits: usize) -> String {
    x.map(|v| format!("{v:.digits$}")).unwrap_or_else(|| "-".into())
}

pub fn render_markdown(report: &EvalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Evaluation ({})\n", report.mode);
    let _ = writeln!(out, "Cells read `F1 (precision, recall)`.\n");
    let _ = writeln!(out, "| Class | Task | Score | Runs | Attempts | Candidate LOC |");
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for class in TaskClass::ALL {
        for row in report.tasks.iter().filter(|t| t.class == class) {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                class.name(),
                row.id,
                cell(row.f1, row.precision, row.recall),
                row.runs,
                opt(row.attempts_mean, 1),
                opt(row.candidate_loc_mean, 1),
            );
        }
    }
    let o = &report.overall;
    let _ = writeln!(out, "| **Overall** | | **{}** | {} | | |", cell(o.f1, o.precision, o.recall), o.runs);
    out
}

fn record(task: TaskId, run: usize, pair: &ExamplePair, actual: Actual) -> EvalRecord {
    EvalRecord {
        task,
        run,
        example_id: pair.id.clone(),
        split: pair.split,
        input: pair.input_source.clone(),
        expected: pair.expected_source.clone(),
        actual,
    }
}

/// Runs a synthesized transform over the evaluation set of `task`. A failed
/// synthesis leaves every program unchanged.
pub fn ctt_records(
    task: TaskId,
    run: usize,
    corpus: &Corpus,
    candidate: Option<&CandidateTransform>,
    sandbox: &dyn Sandbox,
    timeout_ms: u64,
) -> Result<Vec<EvalRecord>, EvalError> {
    let pairs = corpus.eval_set(task);
    let Some(candidate) = candidate else {
        return Ok(pairs
            .iter()
            .map(|p| record(task, run, p, Actual::Output { source: p.input_source.clone() }))
            .collect());
    };
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let mut req = ExecRequest::new(
        format!("eval-{task}-{run}"),
        candidate.source.clone(),
        pairs.iter().map(|p| p.input_source.clone()).collect(),
    );
    req.timeout_ms = timeout_ms;
    let resp = sandbox.run(&req)?;
    Ok(pairs
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let actual = match (&resp.load_error, resp.outcomes.get(k)) {
                (Some(l), _) => Actual::Crash { reason: format!("{}: {}", l.error_type, l.message) },
                (None, None) => Actual::Crash { reason: "no outcome".into() },
                (None, Some(o)) => match o.status {
                    Status::Ok => Actual::Output { source: o.output.clone().unwrap_or_default() },
                    Status::Error => Actual::Crash {
                        reason: format!(
                            "{}: {}",
                            o.error_type.as_deref().unwrap_or("Error"),
                            o.message.as_deref().unwrap_or("")
                        ),
                    },
                    Status::Timeout => Actual::Crash { reason: "timeout".into() },
                },
            };
            record(task, run, p, actual)
        })
        .collect())
}

/// Turns direct rewrites into records.
pub fn ttc_records(run: usize, corpus: &Corpus, rewrites: &[Rewrite]) -> Vec<EvalRecord> {
    rewrites
        .iter()
        .filter_map(|w| {
            let pair = corpus.task(w.task).iter().find(|p| p.id == w.example_id)?;
            let actual = match &w.status {
                RewriteStatus::Rewritten { output } => Actual::Output { source: output.clone() },
                RewriteStatus::Degenerate { reason } => Actual::Degenerate { reason: reason.clone() },
            };
            Some(record(w.task, run, pair, actual))
        })
        .collect()
}

