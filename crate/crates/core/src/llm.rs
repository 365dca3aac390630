//! Chat-completion backends: scripted tapes for offline runs and an HTTP
//! client for chat-completions compatible servers.

use std::collections::VecDeque;
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    System,
    User,
    Assistant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChatMessage {
    pub role: Role,
    pub content: String,
}

impl ChatMessage {
    pub fn system(content: impl Into<String>) -> Self {
        Self { role: Role::System, content: content.into() }
    }

    pub fn user(content: impl Into<String>) -> Self {
        Self { role: Role::User, content: content.into() }
    }

    pub fn assistant(content: impl Into<String>) -> Self {
        Self { role: Role::Assistant, content: content.into() }
    }
}

pub const DEFAULT_TEMPERATURE: f64 = 0.25;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplingConfig {
    pub temperature: f64,
    pub max_tokens: u32,
    pub model_name: String,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self {
            temperature: DEFAULT_TEMPERATURE,
            max_tokens: 2048,
            model_name: "llama-3.1-405b-instruct".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LlmError {
    #[error("invalid history: {0}")]
    InvalidHistory(String),
    #[error("backend unavailable: {0}")]
    BackendUnavailable(String),
    #[error("tape exhausted after {served} replies")]
    TapeExhausted { served: usize },
    #[error("tape entry {index} expects a user message matching {expected}")]
    TapeMismatch { index: usize, expected: String },
    #[error("context too long: {0}")]
    ContextTooLong(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("reply contains no fenced code block")]
pub struct NoCodeBlock;

pub trait Backend: Send + Sync {
    fn complete(&self, history: &[ChatMessage], cfg: &SamplingConfig) -> Result<ChatMessage, LlmError>;
}

/// Checks role ordering: an optional leading system message, then user and
/// assistant turns alternating, ending on a user turn.
pub fn validate_history(history: &[ChatMessage]) -> Result<(), LlmError> {
    let turns = match history.first() {
        None => return Err(LlmError::InvalidHistory("empty history".into())),
        Some(m) if m.role == Role::System => &history[1..],
        Some(_) => history,
    };
    if turns.is_empty() {
        return Err(LlmError::InvalidHistory("no user message".into()));
    }
    for (k, m) in turns.iter().enumerate() {
        let want = if k % 2 == 0 { Role::User } else { Role::Assistant };
        if m.role != want {
            return Err(LlmError::InvalidHistory(format!("turn {k} is {:?}, expected {want:?}", m.role)));
        }
        if m.content.trim().is_empty() {
            return Err(LlmError::InvalidHistory(format!("turn {k} is empty")));
        }
    }
    if turns.len() % 2 == 0 {
        return Err(LlmError::InvalidHistory("last turn must be from the user".into()));
    }
    Ok(())
}

/// Content of the most recent user message.
pub fn last_user(history: &[ChatMessage]) -> &str {
    history
        .iter()
        .rev()
        .find(|m| m.role == Role::User)
        .map(|m| m.content.as_str())
        .unwrap_or_default()
}

/// Contents of the last fenced code block in `reply`.
pub fn extract_code_block(reply: &str) -> Result<String, NoCodeBlock> {
    let mut last = None;
    let mut open: Option<Vec<&str>> = None;
    for line in reply.lines() {
        let fence = line.trim_start().starts_with("```");
        match open.as_mut() {
            None if fence => open = Some(Vec::new()),
            Some(_) if fence => last = open.take().map(|b| b.join("\n")),
            Some(body) => body.push(line),
            None => {}
        }
    }
    last.ok_or(NoCodeBlock)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "text", rename_all = "snake_case")]
pub enum Matcher {
    Any,
    Contains(String),
}

impl Matcher {
    pub fn matches(&self, message: &str) -> bool {
        match self {
            Matcher::Any => true,
            Matcher::Contains(s) => message.contains(s.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TapeEntry {
    #[serde(default = "any")]
    pub matcher: Matcher,
    pub reply: String,
}

fn any() -> Matcher {
    Matcher::Any
}

/// A fixed sequence of canned replies, served in order. Each entry's matcher
/// must accept the latest user message; running past the end is an error.
#[derive(Debug)]
pub struct ScriptedTape {
    entries: Mutex<VecDeque<TapeEntry>>,
    served: Mutex<usize>,
}

impl ScriptedTape {
    pub fn new(entries: impl IntoIterator<Item = TapeEntry>) -> Self {
        Self {
            entries: Mutex::new(entries.into_iter().collect()),
            served: Mutex::new(0),
        }
    }

    pub fn replies<S: Into<String>>(replies: impl IntoIterator<Item = S>) -> Self {
        Self::new(replies.into_iter().map(|r| TapeEntry { matcher: Matcher::Any, reply: r.into() }))
    }

    pub fn remaining(&self) -> usize {
        self.entries.lock().unwrap().len()
    }
}

impl Backend for ScriptedTape {
    fn complete(&self, history: &[ChatMessage], _cfg: &SamplingConfig) -> Result<ChatMessage, LlmError> {
        validate_history(history)?;
        let mut entries = self.entries.lock().unwrap();
        let mut served = self.served.lock().unwrap();
        let Some(entry) = entries.front() else {
            return Err(LlmError::TapeExhausted { served: *served });
        };
        if !entry.matcher.matches(last_user(history)) {
            return Err(LlmError::TapeMismatch {
                index: *served,
                expected: format!("{:?}", entry.matcher),
            });
        }
        let entry = entries.pop_front().unwrap();
        *served += 1;
        Ok(ChatMessage::assistant(entry.reply))
    }
}

/// A backend answering from a function of the conversation, for offline runs
/// where the reply depends on the prompt.
pub struct Responder<F>(pub F);

impl<F> Backend for Responder<F>
where
    F: Fn(&[ChatMessage]) -> Result<String, LlmError> + Send + Sync,
{
    fn complete(&self, history: &[ChatMessage], _cfg: &SamplingConfig) -> Result<ChatMessage, LlmError> {
        validate_history(history)?;
        (self.0)(history).map(ChatMessage::assistant)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct HttpConfig {
    pub base_url: String,
    pub api_key_env: String,
    pub timeout_secs: u64,
    pub max_attempts: u32,
    pub initial_backoff_ms: u64,
}

impl Default for HttpConfig {
    fn default() -> Self {
        Self {
            base_url: "http://localhost:8000/v1".into(),
            api_key_env: "CTT_API_KEY".into(),
            timeout_secs: 120,
            max_attempts: 5,
            initial_backoff_ms: 500,
        }
    }
}

/// Client for `POST {base_url}/chat/completions`.
pub struct HttpBackend {
    cfg: HttpConfig,
    api_key: Option<String>,
    client: reqwest::blocking::Client,
}

#[derive(Serialize)]
struct CompletionRequest<'a> {
    model: &'a str,
    messages: &'a [ChatMessage],
    temperature: f64,
    max_tokens: u32,
}

#[derive(Deserialize)]
struct CompletionResponse {
    choices: Vec<Choice>,
}

#[derive(Deserialize)]
struct Choice {
    message: ChatMessage,
}

enum Attempt {
    Retry(String),
    Fatal(LlmError),
}

impl HttpBackend {
    pub fn new(cfg: HttpConfig) -> Result<Self, LlmError> {
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(cfg.timeout_secs))
            .build()
            .map_err(|e| LlmError::BackendUnavailable(e.to_string()))?;
        let api_key = std::env::var(&cfg.api_key_env).ok();
        Ok(Self { cfg, api_key, client })
    }

    fn attempt(&self, body: &CompletionRequest) -> Result<ChatMessage, Attempt> {
        let url = format!("{}/chat/completions", self.cfg.base_url.trim_end_matches('/'));
        let mut req = self.client.post(url).json(body);
        if let Some(key) = &self.api_key {
            req = req.bearer_auth(key);
        }
        let resp = req.send().map_err(|e| Attempt::Retry(e.to_string()))?;
        let status = resp.status();
        let text = resp.text().map_err(|e| Attempt::Retry(e.to_string()))?;
        if status.is_server_error() || status.as_u16() == 429 {
            return Err(Attempt::Retry(format!("{status}: {text}")));
        }
        if !status.is_success() {
            let lower = text.to_lowercase();
            if lower.contains("context") && (lower.contains("length") || lower.contains("too long")) {
                return Err(Attempt::Fatal(LlmError::ContextTooLong(text)));
            }
            return Err(Attempt::Fatal(LlmError::BackendUnavailable(format!("{status}: {text}"))));
        }
        let parsed: CompletionResponse = serde_json::from_str(&text)
            .map_err(|e| Attempt::Fatal(LlmError::BackendUnavailable(format!("bad response: {e}"))))?;
        parsed
            .choices
            .into_iter()
            .next()
            .map(|c| ChatMessage::assistant(c.message.content))
            .ok_or_else(|| Attempt::Fatal(LlmError::BackendUnavailable("response has no choices".into())))
    }
}

impl Backend for HttpBackend {
    fn complete(&self, history: &[ChatMessage], cfg: &SamplingConfig) -> Result<ChatMessage, LlmError> {
        validate_history(history)?;
        let body = CompletionRequest {
            model: &cfg.model_name,
            messages: history,
            temperature: cfg.temperature,
            max_tokens: cfg.max_tokens,
        };
        let mut backoff = Duration::from_millis(self.cfg.initial_backoff_ms);
        let mut last = String::new();
        for attempt in 1..=self.cfg.max_attempts.max(1) {
            match self.attempt(&body) {
                Ok(m) => return Ok(m),
                Err(Attempt::Fatal(e)) => return Err(e),
                Err(Attempt::Retry(why)) => last = why,
            }
            if attempt < self.cfg.max_attempts {
                std::thread::sleep(backoff);
                backoff *= 2;
            }
        }
        Err(LlmError::BackendUnavailable(format!(
            "giving up after {} attempts: {last}",
            self.cfg.max_attempts
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ask(text: &str) -> Vec<ChatMessage> {
        vec![ChatMessage::system("sys"), ChatMessage::user(text)]
    }

    #[test]
    fn tape_replays_in_order_then_runs_out() {
        let tape = ScriptedTape::new([TapeEntry {
            matcher: Matcher::Contains("describe".into()),
            reply: "The transform removes zeros.".into(),
        }]);
        let cfg = SamplingConfig::default();
        let r = tape.complete(&ask("please describe this"), &cfg).unwrap();
        assert_eq!(r, ChatMessage::assistant("The transform removes zeros."));
        assert_eq!(tape.complete(&ask("again"), &cfg), Err(LlmError::TapeExhausted { served: 1 }));
    }

    #[test]
    fn tape_rejects_unmatched_prompt() {
        let tape = ScriptedTape::new([TapeEntry {
            matcher: Matcher::Contains("describe".into()),
            reply: "x".into(),
        }]);
        let err = tape.complete(&ask("implement"), &SamplingConfig::default()).unwrap_err();
        assert!(matches!(err, LlmError::TapeMismatch { index: 0, .. }));
        assert_eq!(tape.remaining(), 1);
    }

    #[test]
    fn empty_history_is_rejected() {
        let tape = ScriptedTape::replies(["x"]);
        assert!(matches!(
            tape.complete(&[], &SamplingConfig::default()),
            Err(LlmError::InvalidHistory(_))
        ));
    }

    #[test]
    fn history_must_alternate() {
        let h = vec![ChatMessage::user("a"), ChatMessage::user("b")];
        assert!(validate_history(&h).is_err());
        let h = vec![ChatMessage::user("a"), ChatMessage::assistant("b"), ChatMessage::user("c")];
        assert!(validate_history(&h).is_ok());
    }

    #[test]
    fn default_temperature() {
        assert_eq!(SamplingConfig::default().temperature, 0.25);
    }

    #[test]
    fn code_block_extraction() {
        let one = "Here:\n```\ndef xform(code):\n    return code\n```";
        assert_eq!(extract_code_block(one).unwrap(), "def xform(code):\n    return code");
        let two = "scratch:\n```python\nx = 1\n```\nfinal:\n```python\ny = 2\n```\n";
        assert_eq!(extract_code_block(two).unwrap(), "y = 2");
        assert_eq!(extract_code_block("just prose"), Err(NoCodeBlock));
        assert_eq!(extract_code_block("```\nunterminated"), Err(NoCodeBlock));
    }

    #[test]
    fn tape_entries_deserialize() {
        let e: TapeEntry =
            serde_json::from_str(r#"{"matcher": {"kind": "contains", "text": "describe"}, "reply": "r"}"#).unwrap();
        assert_eq!(e.matcher, Matcher::Contains("describe".into()));
        let e: TapeEntry = serde_json::from_str(r#"{"reply": "r"}"#).unwrap();
        assert_eq!(e.matcher, Matcher::Any);
    }

    #[test]
    fn unreachable_server_fails_after_bounded_retries() {
        let backend = HttpBackend::new(HttpConfig {
            base_url: "http://127.0.0.1:9".into(),
            timeout_secs: 2,
            max_attempts: 2,
            initial_backoff_ms: 1,
            ..HttpConfig::default()
        })
        .unwrap();
        let err = backend.complete(&ask("hi"), &SamplingConfig::default()).unwrap_err();
        assert!(matches!(err, LlmError::BackendUnavailable(ref m) if m.contains("2 attempts")), "{err}");
    }
}
