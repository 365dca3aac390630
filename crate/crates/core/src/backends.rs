//! Offline backends and a serializable choice of backend, built per task.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chain::Step;
use crate::llm::{
    extract_code_block, last_user, validate_history, Backend, ChatMessage, HttpBackend, HttpConfig, LlmError,
    SamplingConfig, ScriptedTape, TapeEntry,
};
use crate::prompts::{
    ADEQUATE, ANALYZE_MARKER, DESCRIBE_MARKER, IMPLEMENT_MARKER, REFINE_MARKER, REPAIR_MARKER, TTC_MARKER,
};
use crate::transforms::{apply_oracle_source, reference_source, TaskId};

/// A transform that returns its input unchanged.
pub const IDENTITY_XFORM: &str = "def xform(code):\n    return code\n";

pub fn fenced(code: &str) -> String {
    format!("```python\n{}\n```", code.trim_end())
}

/// Which chain step a user prompt belongs to, judged by its fixed wording.
pub fn classify_prompt(prompt: &str) -> Option<Step> {
    if prompt.contains(REFINE_MARKER) {
        Some(Step::Refine)
    } else if prompt.contains(ANALYZE_MARKER) {
        Some(Step::Analyze)
    } else if prompt.starts_with(REPAIR_MARKER) {
        Some(Step::Repair)
    } else if prompt.contains(TTC_MARKER) {
        Some(Step::Rewrite)
    } else if prompt.contains(DESCRIBE_MARKER) {
        Some(Step::Describe)
    } else if prompt.contains(IMPLEMENT_MARKER) {
        Some(Step::Implement)
    } else {
        None
    }
}

fn unknown_prompt() -> LlmError {
    LlmError::BackendUnavailable("prompt does not match any chain step".into())
}

/// Answers every step the way a perfect model would for one task.
#[derive(Debug, Clone, Copy)]
pub struct OracleBackend {
    pub task: TaskId,
}

impl Backend for OracleBackend {
    fn complete(&self, history: &[ChatMessage], _cfg: &SamplingConfig) -> Result<ChatMessage, LlmError> {
        validate_history(history)?;
        let prompt = last_user(history);
        let reply = match classify_prompt(prompt).ok_or_else(unknown_prompt)? {
            Step::Describe => self.task.spec().description.to_string(),
            Step::Refine => ADEQUATE.to_string(),
            Step::Implement | Step::Repair => fenced(reference_source(self.task)),
            Step::Analyze => "The previous code does not match the described rewrite.".to_string(),
            Step::Rewrite => {
                let target = extract_code_block(prompt).unwrap_or_default();
                let out = apply_oracle_source(self.task, &target).unwrap_or(target);
                fenced(&out)
            }
        };
        Ok(ChatMessage::assistant(reply))
    }
}

/// Never changes anything: returns the identity transform and echoes
/// rewrite targets verbatim.
#[derive(Debug, Clone, Copy, Default)]
pub struct EchoBackend;

impl Backend for EchoBackend {
    fn complete(&self, history: &[ChatMessage], _cfg: &SamplingConfig) -> Result<ChatMessage, LlmError> {
        validate_history(history)?;
        let prompt = last_user(history);
        let reply = match classify_prompt(prompt).ok_or_else(unknown_prompt)? {
            Step::Describe => "The programs are left as they are.".to_string(),
            Step::Refine => ADEQUATE.to_string(),
            Step::Implement | Step::Repair => fenced(IDENTITY_XFORM),
            Step::Analyze => "The code returns its input.".to_string(),
            Step::Rewrite => fenced(&extract_code_block(prompt).unwrap_or_default()),
        };
        Ok(ChatMessage::assistant(reply))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BackendError {
    #[error("cannot read tape {path}: {source}")]
    TapeIo { path: PathBuf, source: std::io::Error },
    #[error("malformed tape {path}: {source}")]
    TapeFormat { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Llm(#[from] LlmError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BackendSpec {
    Oracle,
    Echo,
    /// A JSON array of tape entries, or a directory holding `<task>.json`.
    Tape { path: PathBuf },
    Http(HttpConfig),
}

impl BackendSpec {
    pub fn label(&self) -> &'static str {
        match self {
            BackendSpec::Oracle => "oracle",
            BackendSpec::Echo => "echo",
            BackendSpec::Tape { .. } => "tape",
            BackendSpec::Http(_) => "http",
        }
    }

    /// A fresh backend for `task`. Tapes are stateful, so every run needs
    /// its own.
    pub fn build(&self, task: TaskId) -> Result<Box<dyn Backend>, BackendError> {
        Ok(match self {
            BackendSpec::Oracle => Box::new(OracleBackend { task }),
            BackendSpec::Echo => Box::new(EchoBackend),
            BackendSpec::Tape { path } => Box::new(load_tape(path, task)?),
            BackendSpec::Http(cfg) => Box::new(HttpBackend::new(cfg.clone())?),
        })
    }
}

pub fn load_tape(path: &Path, task: TaskId) -> Result<ScriptedTape, BackendError> {
    let file = if path.is_dir() { path.join(format!("{task}.json")) } else { path.to_path_buf() };
    let text = std::fs::read_to_string(&file).map_err(|source| BackendError::TapeIo { path: file.clone(), source })?;
    let entries: Vec<TapeEntry> =
        serde_json::from_str(&text).map_err(|source| BackendError::TapeFormat { path: file, source })?;
    Ok(ScriptedTape::new(entries))
}
