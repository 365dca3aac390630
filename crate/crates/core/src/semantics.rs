//! Behavioral comparison of two programs by running them in the bundled
//! interpreter and evaluating the `# probe: <expr>` lines of the first one.

use ctt_pyast::interp::{describe_observation, Interpreter, Observation};
use ctt_pyast::{parse, parse_expr, Expr, ParseError};

const PROBE_MARKER: &str = "# probe:";

/// Probe expressions declared in `source`.
pub fn probes(source: &str) -> Result<Vec<Expr>, ParseError> {
    source
        .lines()
        .filter_map(|l| l.trim().strip_prefix(PROBE_MARKER))
        .map(|p| parse_expr(p.trim()))
        .collect()
}

#[derive(Debug, Clone)]
pub struct BehaviorCheck {
    pub same: bool,
    pub before: Observation,
    pub after: Observation,
}

impl BehaviorCheck {
    pub fn explain(&self) -> String {
        format!(
            "before:\n{}after:\n{}",
            describe_observation(&self.before),
            describe_observation(&self.after)
        )
    }

    /// Whether the original program ran cleanly, which is what makes the
    /// comparison meaningful.
    pub fn input_runs_cleanly(&self) -> bool {
        self.before.module_error.is_none() && self.before.probes.iter().all(|p| p.result.is_ok())
    }
}

/// Runs `original` and `rewritten` with the probes declared in `original`.
pub fn compare_behavior(original: &str, rewritten: &str) -> Result<BehaviorCheck, ParseError> {
    let probes = probes(original)?;
    let before = Interpreter::observe(&parse(original)?, &probes);
    let after = Interpreter::observe(&parse(rewritten)?, &probes);
    Ok(BehaviorCheck {
        same: before == after,
        before,
        after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probes_are_read_from_comments() {
        let p = probes("def f(x):\n    return x\n# probe: f(1)\n  # probe:   f(2 + 3)\n").unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn unrolled_loop_records_the_same_calls() {
        let before = "log = []\ndef f(i):\n    log.append(i)\nfor i in range(2):\n    f(i)\n# probe: log\n";
        let after = "log = []\ndef f(i):\n    log.append(i)\nf(0)\nf(1)\n";
        let check = compare_behavior(before, after).unwrap();
        assert!(check.same, "{}", check.explain());
        let wrong = "log = []\ndef f(i):\n    log.append(i)\nf(1)\nf(0)\n";
        assert!(!compare_behavior(before, wrong).unwrap().same);
    }
}
