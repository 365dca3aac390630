//! The direct-rewrite baseline: show the model a few examples and ask it to
//! rewrite each evaluation program itself.

use ctt_pyast::parse;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, ExamplePair, Split};
use crate::llm::{extract_code_block, Backend, ChatMessage, SamplingConfig};
use crate::par::{par_map, Strategy};
use crate::prompts::{fill, format_examples, PromptSet};
use crate::transforms::TaskId;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TtcConfig {
    pub n_examples: usize,
    pub sampling: SamplingConfig,
}

impl Default for TtcConfig {
    fn default() -> Self {
        Self { n_examples: 3, sampling: SamplingConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RewriteStatus {
    Rewritten { output: String },
    /// The reply held no usable program.
    Degenerate { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub task: TaskId,
    pub example_id: String,
    pub split: Split,
    pub prompt: String,
    pub reply: Option<String>,
    #[serde(flatten)]
    pub status: RewriteStatus,
}

pub fn rewrite_prompt(prompts: &PromptSet, shown: &[&ExamplePair], target: &str) -> String {
    fill(
        &prompts.ttc,
        &[
            ("count", &shown.len().to_string()),
            ("examples", &format_examples(shown)),
            ("target", target.trim_end()),
        ],
    )
}

/// Reads the rewritten program out of a model reply.
pub fn parse_rewrite(reply: &str) -> RewriteStatus {
    match extract_code_block(reply) {
        Err(e) => RewriteStatus::Degenerate { reason: e.to_string() },
        Ok(code) => match parse(&code) {
            Ok(_) => RewriteStatus::Rewritten { output: code },
            Err(e) => RewriteStatus::Degenerate { reason: format!("unparsable output: {e}") },
        },
    }
}

fn rewrite_one(
    task: TaskId,
    target: &ExamplePair,
    shown: &[&ExamplePair],
    backend: &dyn Backend,
    prompts: &PromptSet,
    sampling: &SamplingConfig,
) -> Rewrite {
    let prompt = rewrite_prompt(prompts, shown, &target.input_source);
    let history = [ChatMessage::system(prompts.system.trim_end()), ChatMessage::user(prompt.clone())];
    let (reply, status) = match backend.complete(&history, sampling) {
        Ok(m) => {
            let status = parse_rewrite(&m.content);
            (Some(m.content), status)
        }
        Err(e) => (None, RewriteStatus::Degenerate { reason: format!("backend error: {e}") }),
    };
    Rewrite { task, example_id: target.id.clone(), split: target.split, prompt, reply, status }
}

/// Rewrites every hidden and negative example of `task`, one independent
/// call per program.
pub fn rewrite_task(
    task: TaskId,
    corpus: &Corpus,
    backend: &dyn Backend,
    prompts: &PromptSet,
    cfg: &TtcConfig,
    strategy: Strategy,
) -> Vec<Rewrite> {
    let shown: Vec<&ExamplePair> = corpus.split(task, Split::Public).into_iter().take(cfg.n_examples).collect();
    let targets = corpus.eval_set(task);
    par_map(strategy, &targets, |t| rewrite_one(task, t, &shown, backend, prompts, &cfg.sampling))
}
