//! Prompt templates with `{name}` placeholders.

use std::fs;
use std::path::Path;

use crate::corpus::ExamplePair;

/// Phrases that identify each prompt kind. Scripted backends match on them,
/// so every template of that kind must contain its phrase.
pub const DESCRIBE_MARKER: &str = "Describe the transformation";
pub const REFINE_MARKER: &str = "Is this description adequate";
pub const IMPLEMENT_MARKER: &str = "def xform(code: ast.AST) -> ast.AST:";
pub const ANALYZE_MARKER: &str = "Explain why the problem occurred";
pub const REPAIR_MARKER: &str = "Fix the function";
pub const TTC_MARKER: &str = "Apply the same transformation";

pub const ADEQUATE: &str = "ADEQUATE";
pub const REVISE: &str = "REVISE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromptSet {
    pub system: String,
    pub describe: String,
    pub refine: String,
    pub implement: String,
    pub implement_nd: String,
    pub analyze: String,
    pub repair: String,
    pub analysis_section: String,
    pub ttc: String,
}

impl Default for PromptSet {
    fn default() -> Self {
        Self {
            system: include_str!("../prompts/system.txt").into(),
            describe: include_str!("../prompts/describe.txt").into(),
            refine: include_str!("../prompts/refine.txt").into(),
            implement: include_str!("../prompts/implement.txt").into(),
            implement_nd: include_str!("../prompts/implement_nd.txt").into(),
            analyze: include_str!("../prompts/analyze.txt").into(),
            repair: include_str!("../prompts/repair.txt").into(),
            analysis_section: include_str!("../prompts/analysis_section.txt").into(),
            ttc: include_str!("../prompts/ttc.txt").into(),
        }
    }
}

impl PromptSet {
    /// Defaults, with any `<name>.txt` found in `dir` taking precedence.
    pub fn load(dir: &Path) -> std::io::Result<Self> {
        let mut set = Self::default();
        for (name, slot) in set.slots() {
            let path = dir.join(format!("{name}.txt"));
            if path.exists() {
                *slot = fs::read_to_string(path)?;
            }
        }
        Ok(set)
    }

    fn slots(&mut self) -> [(&'static str, &mut String); 9] {
        [
            ("system", &mut self.system),
            ("describe", &mut self.describe),
            ("refine", &mut self.refine),
            ("implement", &mut self.implement),
            ("implement_nd", &mut self.implement_nd),
            ("analyze", &mut self.analyze),
            ("repair", &mut self.repair),
            ("analysis_section", &mut self.analysis_section),
            ("ttc", &mut self.ttc),
        ]
    }
}

/// Replaces each `{key}` in `template` with its value.
pub fn fill(template: &str, vars: &[(&str, &str)]) -> String {
    let mut out = template.to_string();
    for (key, value) in vars {
        out = out.replace(&format!("{{{key}}}"), value);
    }
    out
}

fn fenced(source: &str) -> String {
    format!("```python\n{}\n```", source.trim_end())
}

pub fn format_examples(pairs: &[&ExamplePair]) -> String {
    pairs
        .iter()
        .enumerate()
        .map(|(k, e)| {
            format!(
                "Example {}\nInput:\n{}\nOutput:\n{}\n",
                k + 1,
                fenced(&e.input_source),
                fenced(&e.expected_source)
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Why a candidate failed, phrased for the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Mismatch { input: String, expected: String, actual: String },
    Crash { input: String, error_type: String, message: String, traceback: String },
    Timeout { input: String, timeout_ms: u64 },
    LoadError { error_type: String, message: String },
    Malformed { reason: String },
}

impl Counterexample {
    pub fn render(&self) -> String {
        match self {
            Counterexample::Mismatch { input, expected, actual } => format!(
                "Input:\n{}\nExpected output:\n{}\nActual output:\n{}\n",
                fenced(input),
                fenced(expected),
                fenced(actual)
            ),
            Counterexample::Crash { input, error_type, message, traceback } => {
                let mut s = format!("Input:\n{}\nThe transform raised {error_type}: {message}\n", fenced(input));
                if !traceback.is_empty() {
                    s.push_str(&format!("Traceback:\n{traceback}\n"));
                }
                s
            }
            Counterexample::Timeout { input, timeout_ms } => {
                format!("Input:\n{}\nThe transform did not finish within {timeout_ms} ms.\n", fenced(input))
            }
            Counterexample::LoadError { error_type, message } => {
                format!("The code could not be loaded: {error_type}: {message}\n")
            }
            Counterexample::Malformed { reason } => format!("Your reply could not be used: {reason}\n"),
        }
    }
}

/// The adequacy verdict on the last non-empty line of a refinement reply,
/// and the reply text without it. A missing verdict counts as REVISE.
pub fn split_verdict(reply: &str) -> (bool, String) {
    let trimmed = reply.trim_end();
    let (body, last) = match trimmed.rfind('\n') {
        Some(k) => (&trimmed[..k], trimmed[k + 1..].trim()),
        None => ("", trimmed.trim()),
    };
    let last = last.trim_matches(|c: char| !c.is_ascii_alphabetic());
    if last == ADEQUATE {
        (true, body.trim().to_string())
    } else if last == REVISE {
        (false, body.trim().to_string())
    } else {
        (false, trimmed.trim().to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_templates_carry_their_markers() {
        let p = PromptSet::default();
        assert!(p.describe.contains(DESCRIBE_MARKER));
        assert!(p.refine.contains(REFINE_MARKER));
        assert!(p.implement.contains(IMPLEMENT_MARKER));
        assert!(p.implement_nd.contains(IMPLEMENT_MARKER));
        assert!(p.analyze.contains(ANALYZE_MARKER));
        assert!(p.repair.contains(REPAIR_MARKER));
        assert!(p.ttc.contains(TTC_MARKER));
        assert!(!p.repair.contains(ANALYZE_MARKER));
    }

    #[test]
    fn fill_replaces_named_placeholders() {
        assert_eq!(fill("a {x} b {y} {x}", &[("x", "1"), ("y", "2")]), "a 1 b 2 1");
        assert_eq!(fill("{unknown}", &[("x", "1")]), "{unknown}");
    }

    #[test]
    fn verdicts() {
        assert_eq!(split_verdict("ADEQUATE"), (true, String::new()));
        assert_eq!(split_verdict("Better text.\nREVISE\n"), (false, "Better text.".into()));
        assert_eq!(split_verdict("Fine as is.\n**ADEQUATE**"), (true, "Fine as is.".into()));
        assert_eq!(split_verdict("no verdict here"), (false, "no verdict here".into()));
    }

    #[test]
    fn overrides_are_read_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("ttc.txt"), "custom {target}").unwrap();
        let p = PromptSet::load(dir.path()).unwrap();
        assert_eq!(p.ttc, "custom {target}");
        assert_eq!(p.describe, PromptSet::default().describe);
    }
}
