use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("SyntaxError at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    /// Valid Python that falls outside the supported subset.
    #[error("UnsupportedConstruct at {line}:{col}: {construct}")]
    Unsupported {
        line: usize,
        col: usize,
        construct: String,
    },
}

impl ParseError {
    pub fn syntax(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    pub fn unsupported(line: usize, col: usize, construct: impl Into<String>) -> Self {
        ParseError::Unsupported {
            line,
            col,
            construct: construct.into(),
        }
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, ParseError::Unsupported { .. })
    }
}
