//! Running candidate `xform` transforms over input programs.
//!
//! [`SubprocessSandbox`] talks JSON lines to an external worker.
//! [`InProcessSandbox`] honours the same request/response contract without a
//! Python runtime: it recognizes known transform sources (the reference
//! transforms and a few trivial shapes) and answers with the native oracles.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, Command, Stdio};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use ctt_pyast::{parse, render};
use serde::{Deserialize, Serialize};

use crate::transforms::{apply_oracle, reference_source, TaskId};

pub const DEFAULT_TIMEOUT_MS: u64 = 10_000;
pub const DEFAULT_MEMORY_LIMIT_MB: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecRequest {
    pub id: String,
    pub transform_source: String,
    pub inputs: Vec<String>,
    pub timeout_ms: u64,
    pub memory_limit_mb: u64,
}

impl ExecRequest {
    pub fn new(id: impl Into<String>, transform_source: impl Into<String>, inputs: Vec<String>) -> Self {
        Self {
            id: id.into(),
            transform_source: transform_source.into(),
            inputs,
            timeout_ms: DEFAULT_TIMEOUT_MS,
            memory_limit_mb: DEFAULT_MEMORY_LIMIT_MB,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadError {
    pub error_type: String,
    pub message: String,
    #[serde(default)]
    pub traceback: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traceback: Option<String>,
}

impl Outcome {
    pub fn ok(output: impl Into<String>) -> Self {
        Self { status: Status::Ok, output: Some(output.into()), error_type: None, message: None, traceback: None }
    }

    pub fn error(error_type: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            status: Status::Error,
            output: None,
            error_type: Some(error_type.into()),
            message: Some(message.into()),
            traceback: Some(String::new()),
        }
    }

    pub fn timeout() -> Self {
        Self { status: Status::Timeout, output: None, error_type: None, message: None, traceback: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecResponse {
    pub id: String,
    pub load_error: Option<LoadError>,
    pub outcomes: Vec<Outcome>,
}

impl ExecResponse {
    fn uniform(req: &ExecRequest, outcome: Outcome) -> Self {
        Self { id: req.id.clone(), load_error: None, outcomes: vec![outcome; req.inputs.len()] }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SandboxError {
    #[error("SandboxUnavailable: {0}")]
    Unavailable(String),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

pub trait Sandbox: Send + Sync {
    fn run(&self, req: &ExecRequest) -> Result<ExecResponse, SandboxError>;
}

fn check_request(req: &ExecRequest) -> Result<(), SandboxError> {
    if req.inputs.is_empty() {
        return Err(SandboxError::InvalidRequest("inputs must not be empty".into()));
    }
    if req.transform_source.trim().is_empty() {
        return Err(SandboxError::InvalidRequest("transform_source must not be empty".into()));
    }
    Ok(())
}

/// Source text with comment-only lines, blank lines and trailing
/// whitespace removed, used to recognize known transforms.
pub fn normalize_source(source: &str) -> String {
    source
        .lines()
        .map(str::trim_end)
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

type Behavior = Arc<dyn Fn(&ctt_pyast::PyModuleAst) -> Outcome + Send + Sync>;

/// Answers requests natively for transform sources it recognizes.
#[derive(Clone)]
pub struct InProcessSandbox {
    known: HashMap<String, Behavior>,
}

impl Default for InProcessSandbox {
    fn default() -> Self {
        let mut sb = Self { known: HashMap::new() };
        for task in TaskId::ALL {
            sb.register(reference_source(task), move |tree| Outcome::ok(render(&apply_oracle(task, tree))));
        }
        sb
    }
}

/// Shapes of one-statement transforms the in-process sandbox understands.
enum Trivial {
    Identity,
    Raise(String, String),
    Spin,
}

fn trivial_shape(source: &str) -> Option<Trivial> {
    let norm = normalize_source(source);
    let mut lines = norm.lines().filter(|l| !l.starts_with("import ") && !l.starts_with("from "));
    let def = lines.next()?;
    if !def.starts_with("def xform(") || !def.ends_with(':') {
        return None;
    }
    let body: Vec<&str> = lines.map(str::trim).collect();
    match body.as_slice() {
        ["return code"] => Some(Trivial::Identity),
        ["while True:", "pass"] => Some(Trivial::Spin),
        [stmt] => {
            let rest = stmt.strip_prefix("raise ")?;
            let (name, arg) = rest.split_once('(')?;
            let arg = arg.strip_suffix(')')?.trim();
            let msg = arg
                .strip_prefix('"')
                .and_then(|a| a.strip_suffix('"'))
                .or_else(|| arg.strip_prefix('\'').and_then(|a| a.strip_suffix('\'')))
                .unwrap_or(arg);
            name.chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
                .then(|| Trivial::Raise(name.to_string(), msg.to_string()))
        }
        _ => None,
    }
}

impl InProcessSandbox {
    /// Makes `source` runnable, with `behavior` mapping each parsed input
    /// to its outcome.
    pub fn register(
        &mut self,
        source: &str,
        behavior: impl Fn(&ctt_pyast::PyModuleAst) -> Outcome + Send + Sync + 'static,
    ) {
        self.known.insert(normalize_source(source), Arc::new(behavior));
    }

    fn behavior(&self, source: &str) -> Option<Behavior> {
        if let Some(b) = self.known.get(&normalize_source(source)) {
            return Some(b.clone());
        }
        Some(match trivial_shape(source)? {
            Trivial::Identity => Arc::new(|tree| Outcome::ok(render(tree))),
            Trivial::Spin => Arc::new(|_| Outcome::timeout()),
            Trivial::Raise(kind, msg) => Arc::new(move |_| Outcome::error(kind.clone(), msg.clone())),
        })
    }
}

impl Sandbox for InProcessSandbox {
    fn run(&self, req: &ExecRequest) -> Result<ExecResponse, SandboxError> {
        check_request(req)?;
        let Some(behavior) = self.behavior(&req.transform_source) else {
            return Ok(ExecResponse {
                id: req.id.clone(),
                load_error: Some(LoadError {
                    error_type: "UnsupportedCandidate".into(),
                    message: "the in-process sandbox only runs recognized transforms; use a subprocess worker for arbitrary code".into(),
                    traceback: String::new(),
                }),
                outcomes: Vec::new(),
            });
        };
        let outcomes = req
            .inputs
            .iter()
            .map(|src| match parse(src) {
                Ok(tree) => behavior(&tree),
                Err(e) => Outcome::error("SyntaxError", e.to_string()),
            })
            .collect();
        Ok(ExecResponse { id: req.id.clone(), load_error: None, outcomes })
    }
}

/// Serves the JSON-lines protocol with `sandbox` until `input` ends.
pub fn serve(sandbox: &dyn Sandbox, input: impl BufRead, mut output: impl Write) -> std::io::Result<()> {
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let response = match serde_json::from_str::<ExecRequest>(&line) {
            Ok(req) => sandbox.run(&req).unwrap_or_else(|e| ExecResponse {
                id: req.id.clone(),
                load_error: Some(LoadError { error_type: "InvalidRequest".into(), message: e.to_string(), traceback: String::new() }),
                outcomes: Vec::new(),
            }),
            Err(e) => ExecResponse {
                id: String::new(),
                load_error: Some(LoadError { error_type: "ProtocolError".into(), message: e.to_string(), traceback: String::new() }),
                outcomes: Vec::new(),
            },
        };
        serde_json::to_writer(&mut output, &response)?;
        output.write_all(b"\n")?;
        output.flush()?;
    }
    Ok(())
}

struct Worker {
    child: Child,
    stdin: ChildStdin,
    lines: Receiver<std::io::Result<String>>,
}

impl Worker {
    fn spawn(command: &[String]) -> Result<Self, SandboxError> {
        let (program, args) = command
            .split_first()
            .ok_or_else(|| SandboxError::Unavailable("empty worker command".into()))?;
        let mut child = Command::new(program)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| SandboxError::Unavailable(format!("cannot start {program}: {e}")))?;
        let stdin = child.stdin.take().expect("piped stdin");
        let stdout = child.stdout.take().expect("piped stdout");
        let (tx, lines) = mpsc::channel();
        std::thread::spawn(move || {
            for line in BufReader::new(stdout).lines() {
                if tx.send(line).is_err() {
                    break;
                }
            }
        });
        Ok(Self { child, stdin, lines })
    }

    fn kill(mut self) {
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

/// Client for an external JSON-lines worker. A worker that dies or stops
/// answering is killed and replaced on the next request.
pub struct SubprocessSandbox {
    command: Vec<String>,
    slack: Duration,
    worker: Mutex<Option<Worker>>,
}

impl SubprocessSandbox {
    pub fn new(command: Vec<String>) -> Self {
        Self { command, slack: Duration::from_secs(5), worker: Mutex::new(None) }
    }

    pub fn with_slack(mut self, slack: Duration) -> Self {
        self.slack = slack;
        self
    }

    /// Process id of the current worker, if one is running.
    pub fn worker_pid(&self) -> Option<u32> {
        self.worker.lock().unwrap().as_ref().map(|w| w.child.id())
    }
}

impl Drop for SubprocessSandbox {
    fn drop(&mut self) {
        if let Some(w) = self.worker.get_mut().unwrap().take() {
            w.kill();
        }
    }
}

impl Sandbox for SubprocessSandbox {
    fn run(&self, req: &ExecRequest) -> Result<ExecResponse, SandboxError> {
        check_request(req)?;
        let mut guard = self.worker.lock().unwrap();
        if guard.as_mut().is_some_and(|w| matches!(w.child.try_wait(), Ok(Some(_)))) {
            guard.take().unwrap().kill();
        }
        if guard.is_none() {
            *guard = Some(Worker::spawn(&self.command)?);
        }
        let worker = guard.as_mut().unwrap();
        let mut line = serde_json::to_string(req).map_err(|e| SandboxError::InvalidRequest(e.to_string()))?;
        line.push('\n');
        let crashed = |why: String| ExecResponse::uniform(req, Outcome::error("WorkerCrashed", why));
        if let Err(e) = worker.stdin.write_all(line.as_bytes()).and_then(|_| worker.stdin.flush()) {
            guard.take().unwrap().kill();
            return Ok(crashed(format!("worker stopped accepting requests: {e}")));
        }
        let budget = Duration::from_millis(req.timeout_ms.saturating_mul(req.inputs.len() as u64)) + self.slack;
        let deadline = std::time::Instant::now() + budget;
        loop {
            let left = deadline.saturating_duration_since(std::time::Instant::now());
            match worker.lines.recv_timeout(left) {
                Ok(Ok(text)) => match serde_json::from_str::<ExecResponse>(&text) {
                    Ok(resp) if resp.id == req.id => return Ok(resp),
                    Ok(_) => continue,
                    Err(e) => {
                        guard.take().unwrap().kill();
                        return Ok(crashed(format!("unreadable worker response: {e}")));
                    }
                },
                Ok(Err(e)) => {
                    guard.take().unwrap().kill();
                    return Ok(crashed(format!("worker output failed: {e}")));
                }
                Err(RecvTimeoutError::Disconnected) => {
                    guard.take().unwrap().kill();
                    return Ok(crashed("worker exited before answering".into()));
                }
                Err(RecvTimeoutError::Timeout) => {
                    guard.take().unwrap().kill();
                    return Ok(ExecResponse::uniform(req, Outcome::timeout()));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(source: &str, inputs: &[&str]) -> ExecRequest {
        ExecRequest::new("r1", source, inputs.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn identity_transform() {
        let resp = InProcessSandbox::default()
            .run(&req("def xform(code):\n    return code\n", &["x = 1"]))
            .unwrap();
        assert_eq!(resp.load_error, None);
        assert_eq!(resp.outcomes, vec![Outcome::ok("x = 1\n")]);
    }

    #[test]
    fn raising_transform() {
        let resp = InProcessSandbox::default()
            .run(&req("import ast\ndef xform(code: ast.AST) -> ast.AST:\n    raise ValueError(\"boom\")\n", &["x = 1"]))
            .unwrap();
        assert_eq!(resp.outcomes[0].status, Status::Error);
        assert_eq!(resp.outcomes[0].error_type.as_deref(), Some("ValueError"));
        assert_eq!(resp.outcomes[0].message.as_deref(), Some("boom"));
    }

    #[test]
    fn spinning_transform_times_out() {
        let resp = InProcessSandbox::default()
            .run(&req("def xform(code):\n    while True:\n        pass\n", &["x = 1", "y = 2"]))
            .unwrap();
        assert_eq!(resp.outcomes, vec![Outcome::timeout(), Outcome::timeout()]);
    }

    #[test]
    fn reference_source_runs_its_oracle() {
        let resp = InProcessSandbox::default()
            .run(&req(reference_source(TaskId::AddSubZero), &["y = x + 0"]))
            .unwrap();
        assert_eq!(parse(resp.outcomes[0].output.as_ref().unwrap()).unwrap(), parse("y = x").unwrap());
    }

    #[test]
    fn reference_source_survives_comment_and_blank_line_edits() {
        let edited = format!("# generated\n\n{}\n\n", reference_source(TaskId::DeMorgan).replace("\n\n", "\n"));
        let resp = InProcessSandbox::default().run(&req(&edited, &["c = not (a and b)"])).unwrap();
        assert_eq!(resp.load_error, None);
    }

    #[test]
    fn unknown_source_is_a_load_error() {
        let resp = InProcessSandbox::default()
            .run(&req("def xform(code):\n    return transform(code)\n", &["x = 1"]))
            .unwrap();
        assert_eq!(resp.load_error.unwrap().error_type, "UnsupportedCandidate");
        assert!(resp.outcomes.is_empty());
    }

    #[test]
    fn bad_input_program_is_a_per_input_error() {
        let resp = InProcessSandbox::default()
            .run(&req("def xform(code):\n    return code\n", &["def f(:", "x = 1"]))
            .unwrap();
        assert_eq!(resp.outcomes[0].error_type.as_deref(), Some("SyntaxError"));
        assert_eq!(resp.outcomes[1].status, Status::Ok);
    }

    #[test]
    fn empty_inputs_are_rejected() {
        assert!(InProcessSandbox::default().run(&req("def xform(code):\n    return code\n", &[])).is_err());
    }

    #[test]
    fn wire_format_field_names() {
        let r = req("s", &["a"]);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["id", "inputs", "memory_limit_mb", "timeout_ms", "transform_source"]);
        let resp = ExecResponse {
            id: "r1".into(),
            load_error: None,
            outcomes: vec![Outcome::ok("x = 1\n"), Outcome::error("ValueError", "boom"), Outcome::timeout()],
        };
        assert_eq!(
            serde_json::to_string(&resp).unwrap(),
            r#"{"id":"r1","load_error":null,"outcomes":[{"status":"ok","output":"x = 1\n"},{"status":"error","error_type":"ValueError","message":"boom","traceback":""},{"status":"timeout"}]}"#
        );
    }

    #[test]
    fn serve_answers_every_line() {
        let input = format!(
            "{}\nnot json\n",
            serde_json::to_string(&req("def xform(code):\n    return code\n", &["x=1"])).unwrap()
        );
        let mut out = Vec::new();
        serve(&InProcessSandbox::default(), input.as_bytes(), &mut out).unwrap();
        let lines: Vec<ExecResponse> =
            String::from_utf8(out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].outcomes, vec![Outcome::ok("x = 1\n")]);
        assert_eq!(lines[1].load_error.as_ref().unwrap().error_type, "ProtocolError");
    }

    #[test]
    fn dead_worker_yields_error_then_restarts() {
        let sb = SubprocessSandbox::new(vec!["sh".into(), "-c".into(), "read line; exit 3".into()])
            .with_slack(Duration::from_secs(5));
        let r = req("def xform(code):\n    return code\n", &["x = 1"]);
        let first = sb.run(&r).unwrap();
        assert_eq!(first.outcomes[0].error_type.as_deref(), Some("WorkerCrashed"));
        assert!(sb.worker_pid().is_none());
        let second = sb.run(&r).unwrap();
        assert_eq!(second.outcomes[0].error_type.as_deref(), Some("WorkerCrashed"));
    }

    #[test]
    fn silent_worker_times_out() {
        let sb = SubprocessSandbox::new(vec!["sh".into(), "-c".into(), "sleep 30".into()])
            .with_slack(Duration::from_millis(50));
        let mut r = req("def xform(code):\n    return code\n", &["x = 1"]);
        r.timeout_ms = 50;
        let resp = sb.run(&r).unwrap();
        assert_eq!(resp.outcomes, vec![Outcome::timeout()]);
    }

    #[test]
    fn missing_worker_binary_is_unavailable() {
        let sb = SubprocessSandbox::new(vec!["/nonexistent/worker".into()]);
        assert!(matches!(
            sb.run(&req("def xform(code):\n    return code\n", &["x"])),
            Err(SandboxError::Unavailable(_))
        ));
    }
}
