use std::path::{Path, PathBuf};

use anyhow::Context;
use ctt_core::backends::BackendSpec;
use ctt_core::chain::ChainConfig;
use ctt_core::sandbox::{InProcessSandbox, Sandbox, SubprocessSandbox};
use ctt_core::ttc::TtcConfig;
use ctt_core::TaskId;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Ctt,
    Ttc,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SandboxSpec {
    #[default]
    InProcess,
    Subprocess { command: Vec<String> },
}

impl SandboxSpec {
    pub fn build(&self) -> Box<dyn Sandbox> {
        match self {
            SandboxSpec::InProcess => Box::new(InProcessSandbox::default()),
            SandboxSpec::Subprocess { command } => Box::new(SubprocessSandbox::new(command.clone())),
        }
    }
}

/// Optional settings read from `--config`; command-line flags win.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub backend: Option<BackendSpec>,
    pub chain: Option<ChainConfig>,
    pub ttc: Option<TtcConfig>,
    pub sandbox: Option<SandboxSpec>,
    pub corpus: Option<PathBuf>,
    pub workers: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("invalid config {}", path.display()))
    }
}

/// Everything needed to reproduce a run, stored as `config.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub mode: Mode,
    pub label: String,
    pub created: String,
    pub tasks: Vec<TaskId>,
    pub runs: usize,
    pub backend: BackendSpec,
    pub chain: ChainConfig,
    pub ttc: TtcConfig,
    pub sandbox: SandboxSpec,
    /// `None` means the corpus is regenerated from the bundled seeds.
    pub corpus: Option<PathBuf>,
    pub corpus_version: String,
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn load(run_dir: &Path) -> anyhow::Result<Self> {
        let path = run_dir.join("config.json");
        let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("invalid {}", path.display()))
    }
}

pub fn parse_backend(s: &str) -> Result<BackendSpec, String> {
    match s {
        "oracle" => Ok(BackendSpec::Oracle),
        "echo" => Ok(BackendSpec::Echo),
        "http" => Ok(BackendSpec::Http(Default::default())),
        other => match other.strip_prefix("tape:") {
            Some(path) if !path.is_empty() => Ok(BackendSpec::Tape { path: PathBuf::from(path) }),
            _ => Err(format!("unknown backend '{other}' (expected oracle, echo, http or tape:PATH)")),
        },
    }
}

pub fn parse_tasks(items: &[String]) -> Result<Vec<TaskId>, String> {
    let mut tasks = Vec::new();
    for item in items.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            tasks.extend(TaskId::ALL);
        } else {
            tasks.push(item.parse::<TaskId>().map_err(|e| e.to_string())?);
        }
    }
    if tasks.is_empty() {
        tasks.extend(TaskId::ALL);
    }
    tasks.sort();
    tasks.dedup();
    Ok(tasks)
}
