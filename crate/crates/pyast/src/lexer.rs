//! Tokenizer for Python 3 source.
//!
//! The tokenizer accepts the full lexical grammar (f-strings, bytes, complex
//! literals, decorators...) so it can also vet arbitrary candidate sources;
//! the parser decides which constructs it supports.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Name(String),
    /// Numeric literal text, unparsed.
    Number(String),
    /// String literal: lowercased prefix and the raw body between the quotes.
    Str { prefix: String, body: String },
    Op(&'static str),
    Newline,
    Indent,
    Dedent,
    EndMarker,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

// Longest first so that maximal munch works with a linear scan.
const OPERATORS: &[&str] = &[
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", ">>", "<<", "<=", ">=", "==", "!=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=", "+", "-", "*", "/", "%", "@", "&", "|",
    "^", "~", "<", ">", "(", ")", "[", "]", "{", "}", ",", ":", ".", ";", "=",
];

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    depth: usize,
    indents: Vec<usize>,
    out: Vec<Token>,
    _src: &'a str,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut lx = Lexer {
        chars: src.chars().collect(),
        pos: 0,
        line: 1,
        col: 0,
        depth: 0,
        indents: vec![0],
        out: Vec::new(),
        _src: src,
    };
    lx.run()?;
    Ok(lx.out)
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, off: usize) -> Option<char> {
        self.chars.get(self.pos + off).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 0;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::syntax(self.line, self.col, msg)
    }

    fn push(&mut self, tok: Tok, line: usize, col: usize) {
        self.out.push(Token { tok, line, col });
    }

    fn last_is_newline_or_start(&self) -> bool {
        matches!(
            self.out.last().map(|t| &t.tok),
            None | Some(Tok::Newline) | Some(Tok::Indent) | Some(Tok::Dedent)
        )
    }

    fn run(&mut self) -> Result<(), ParseError> {
        let mut at_line_start = true;
        loop {
            if at_line_start && self.depth == 0 {
                if !self.handle_indentation()? {
                    break;
                }
                at_line_start = false;
            }
            let Some(c) = self.peek() else { break };
            match c {
                ' ' | '\t' | '\x0c' | '\r' => {
                    self.bump();
                }
                '#' => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '\\' => {
                    self.bump();
                    if self.peek() == Some('\r') {
                        self.bump();
                    }
                    if self.peek() != Some('\n') {
                        return Err(self.err("unexpected character after line continuation"));
                    }
                    self.bump();
                }
                '\n' => {
                    let (l, c0) = (self.line, self.col);
                    self.bump();
                    if self.depth == 0 {
                        self.push(Tok::Newline, l, c0);
                        at_line_start = true;
                    }
                }
                c if c.is_ascii_digit() || (c == '.' && self.peek_at(1).is_some_and(|d| d.is_ascii_digit())) => {
                    self.number()?;
                }
                c if c == '_' || c.is_alphabetic() => {
                    if self.string_prefix_len().is_some() {
                        self.string()?;
                    } else {
                        self.name();
                    }
                }
                '\'' | '"' => self.string()?,
                _ => self.operator()?,
            }
        }
        if self.depth > 0 {
            return Err(self.err("unexpected EOF: unclosed bracket"));
        }
        let (l, c) = (self.line, self.col);
        if !self.last_is_newline_or_start() {
            self.push(Tok::Newline, l, c);
        }
        while self.indents.len() > 1 {
            self.indents.pop();
            self.push(Tok::Dedent, l, c);
        }
        self.push(Tok::EndMarker, l, c);
        Ok(())
    }

    /// Measures the indentation of the next logical line, skipping blank and
    /// comment-only lines. Returns false at end of input.
    fn handle_indentation(&mut self) -> Result<bool, ParseError> {
        loop {
            let mut width = 0usize;
            while let Some(c) = self.peek() {
                match c {
                    ' ' => width += 1,
                    '\t' => width = (width / 8 + 1) * 8,
                    '\x0c' | '\r' => {}
                    _ => break,
                }
                self.bump();
            }
            match self.peek() {
                None => return Ok(false),
                Some('\n') => {
                    self.bump();
                    continue;
                }
                Some('#') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                    continue;
                }
                Some(_) => {}
            }
            let current = *self.indents.last().unwrap();
            let (l, c) = (self.line, self.col);
            if width > current {
                if self.out.is_empty() {
                    return Err(self.err("unexpected indent"));
                }
                self.indents.push(width);
                self.push(Tok::Indent, l, c);
            } else if width < current {
                while *self.indents.last().unwrap() > width {
                    self.indents.pop();
                    self.push(Tok::Dedent, l, c);
                }
                if *self.indents.last().unwrap() != width {
                    return Err(self.err("unindent does not match any outer indentation level"));
                }
            }
            return Ok(true);
        }
    }

    fn name(&mut self) {
        let (l, c) = (self.line, self.col);
        let mut s = String::new();
        while let Some(ch) = self.peek() {
            if ch == '_' || ch.is_alphanumeric() {
                s.push(ch);
                self.bump();
            } else {
                break;
            }
        }
        self.push(Tok::Name(s), l, c);
    }

    /// Length of a string prefix (`r`, `b`, `f`, `u`, `rb`, ...) at the cursor
    /// when it is directly followed by a quote.
    fn string_prefix_len(&self) -> Option<usize> {
        let mut n = 0;
        while n < 2 {
            match self.peek_at(n) {
                Some(c) if "rRbBuUfF".contains(c) => n += 1,
                _ => break,
            }
        }
        if n == 0 {
            return None;
        }
        match self.peek_at(n) {
            Some('\'') | Some('"') => Some(n),
            _ => None,
        }
    }

    fn string(&mut self) -> Result<(), ParseError> {
        let (l, c) = (self.line, self.col);
        let mut prefix = String::new();
        for _ in 0..self.string_prefix_len().unwrap_or(0) {
            prefix.push(self.bump().unwrap().to_ascii_lowercase());
        }
        let quote = self.bump().unwrap();
        let triple = self.peek() == Some(quote) && self.peek_at(1) == Some(quote);
        if triple {
            self.bump();
            self.bump();
        }
        let mut body = String::new();
        loop {
            let Some(ch) = self.peek() else {
                return Err(ParseError::syntax(l, c, "unterminated string literal"));
            };
            if ch == '\\' {
                body.push(self.bump().unwrap());
                match self.bump() {
                    Some(next) => body.push(next),
                    None => return Err(ParseError::syntax(l, c, "unterminated string literal")),
                }
                continue;
            }
            if ch == quote {
                if !triple {
                    self.bump();
                    break;
                }
                if self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote) {
                    self.bump();
                    self.bump();
                    self.bump();
                    break;
                }
            }
            if ch == '\n' && !triple {
                return Err(ParseError::syntax(l, c, "unterminated string literal"));
            }
            body.push(self.bump().unwrap());
        }
        self.push(Tok::Str { prefix, body }, l, c);
        Ok(())
    }

    fn number(&mut self) -> Result<(), ParseError> {
        let (l, c) = (self.line, self.col);
        let mut s = String::new();
        let radix_prefix = self.peek() == Some('0')
            && matches!(self.peek_at(1), Some('x' | 'X' | 'o' | 'O' | 'b' | 'B'));
        if radix_prefix {
            s.push(self.bump().unwrap());
            s.push(self.bump().unwrap());
            while let Some(ch) = self.peek() {
                if ch.is_ascii_hexdigit() || ch == '_' {
                    s.push(ch);
                    self.bump();
                } else {
                    break;
                }
            }
        } else {
            let mut seen_e = false;
            let mut seen_dot = false;
            while let Some(ch) = self.peek() {
                let take = ch.is_ascii_digit()
                    || ch == '_'
                    || (ch == '.' && !seen_e && !seen_dot)
                    || ((ch == 'e' || ch == 'E') && !seen_e)
                    || ((ch == '+' || ch == '-') && matches!(s.chars().last(), Some('e' | 'E')));
                if !take {
                    break;
                }
                if ch == 'e' || ch == 'E' {
                    seen_e = true;
                }
                seen_dot |= ch == '.';
                s.push(ch);
                self.bump();
            }
            if matches!(self.peek(), Some('j' | 'J')) {
                s.push(self.bump().unwrap());
            }
        }
        if self.peek().is_some_and(|ch| ch == '_' || ch.is_alphanumeric()) {
            return Err(ParseError::syntax(l, c, "invalid numeric literal"));
        }
        self.push(Tok::Number(s), l, c);
        Ok(())
    }

    fn operator(&mut self) -> Result<(), ParseError> {
        let (l, c) = (self.line, self.col);
        for op in OPERATORS {
            let matches = op
                .chars()
                .enumerate()
                .all(|(i, oc)| self.peek_at(i) == Some(oc));
            if matches {
                for _ in 0..op.chars().count() {
                    self.bump();
                }
                match *op {
                    "(" | "[" | "{" => self.depth += 1,
                    ")" | "]" | "}" => {
                        if self.depth == 0 {
                            return Err(ParseError::syntax(l, c, format!("unmatched '{op}'")));
                        }
                        self.depth -= 1;
                    }
                    _ => {}
                }
                self.push(Tok::Op(op), l, c);
                return Ok(());
            }
        }
        Err(ParseError::syntax(
            l,
            c,
            format!("invalid character {:?}", self.peek().unwrap()),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn indentation_produces_indent_and_dedent() {
        let t = toks("if a:\n    b\nc\n");
        assert_eq!(
            t,
            vec![
                Tok::Name("if".into()),
                Tok::Name("a".into()),
                Tok::Op(":"),
                Tok::Newline,
                Tok::Indent,
                Tok::Name("b".into()),
                Tok::Newline,
                Tok::Dedent,
                Tok::Name("c".into()),
                Tok::Newline,
                Tok::EndMarker,
            ]
        );
    }

    #[test]
    fn brackets_suppress_newlines() {
        let t = toks("x = (1,\n     2)\n");
        assert_eq!(t.iter().filter(|t| **t == Tok::Newline).count(), 1);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        assert_eq!(toks("# hi\n\nx\n  # indented comment\n"), toks("x\n"));
    }

    #[test]
    fn full_lexical_grammar_is_accepted() {
        let src = "@decorator\nclass A:\n    s = f'{x!r}' + b'\\x00' + rb\"raw\"\n    z = 3j + 0x_ff\n    y: int = ...\n";
        tokenize(src).unwrap();
    }

    #[test]
    fn bad_dedent_is_an_error() {
        let e = tokenize("if a:\n        b\n    c\n").unwrap_err();
        assert!(e.to_string().contains("unindent"));
    }

    #[test]
    fn unterminated_string_is_an_error() {
        assert!(tokenize("x = 'abc\n").is_err());
    }
}
