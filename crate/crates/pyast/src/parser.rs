//! Recursive-descent parser producing normalized trees.

use sha2::{Digest, Sha256};

use crate::ast::*;
use crate::error::ParseError;
use crate::lexer::{tokenize, Tok, Token};

const KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue",
    "def", "del", "elif", "else", "except", "finally", "for", "from", "global", "if", "import",
    "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
    "with", "yield",
];

// Keywords that open statements outside the supported subset.
const UNSUPPORTED_STMT_KEYWORDS: &[&str] = &[
    "class", "with", "try", "async", "global", "nonlocal", "del", "assert", "raise",
];

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses Python source into a normalized tree.
pub fn parse(source: &str) -> Result<PyModuleAst, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser { toks: tokens, pos: 0 };
    let mut body = Vec::new();
    while !p.at(&Tok::EndMarker) {
        if p.eat(&Tok::Newline) {
            continue;
        }
        body.extend(p.statement()?);
    }
    Ok(PyModuleAst {
        body,
        source_hash: sha256_hex(source),
    })
}

/// Parses a single expression (surrounding whitespace allowed).
pub fn parse_expr(source: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser { toks: tokens, pos: 0 };
    let e = p.testlist()?;
    p.eat(&Tok::Newline);
    if !p.at(&Tok::EndMarker) {
        return Err(p.err("unexpected trailing tokens after expression"));
    }
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_n(&self, n: usize) -> &Tok {
        let i = (self.pos + n).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn at(&self, t: &Tok) -> bool {
        self.peek() == t
    }

    fn at_op(&self, op: &str) -> bool {
        matches!(self.peek(), Tok::Op(o) if *o == op)
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Name(n) if n == kw)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if self.at_op(op) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if self.at_kw(kw) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn pos_info(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (l, c) = self.pos_info();
        ParseError::syntax(l, c, msg)
    }

    fn unsupported(&self, what: impl Into<String>) -> ParseError {
        let (l, c) = self.pos_info();
        ParseError::unsupported(l, c, what)
    }

    fn expect_op(&mut self, op: &str) -> Result<(), ParseError> {
        if self.eat_op(op) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{op}', found {}", describe(self.peek()))))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{kw}', found {}", describe(self.peek()))))
        }
    }

    fn expect_newline(&mut self) -> Result<(), ParseError> {
        if self.eat(&Tok::Newline) || self.at(&Tok::EndMarker) {
            Ok(())
        } else {
            Err(self.err(format!("expected end of line, found {}", describe(self.peek()))))
        }
    }

    fn identifier(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Name(n) if !KEYWORDS.contains(&n.as_str()) => {
                self.advance();
                Ok(n)
            }
            other => Err(self.err(format!("expected identifier, found {}", describe(&other)))),
        }
    }

    // ---- statements ----

    fn statement(&mut self) -> Result<Vec<Stmt>, ParseError> {
        if let Tok::Name(kw) = self.peek().clone() {
            match kw.as_str() {
                "def" => return Ok(vec![self.funcdef()?]),
                "if" => return Ok(vec![self.if_stmt()?]),
                "for" => return Ok(vec![self.for_stmt()?]),
                "while" => return Ok(vec![self.while_stmt()?]),
                k if UNSUPPORTED_STMT_KEYWORDS.contains(&k) => {
                    return Err(self.unsupported(format!("'{k}' statement")))
                }
                _ => {}
            }
        }
        if self.at_op("@") {
            return Err(self.unsupported("decorator"));
        }
        if matches!(self.peek(), Tok::Indent) {
            return Err(self.err("unexpected indent"));
        }
        self.simple_stmts()
    }

    fn simple_stmts(&mut self) -> Result<Vec<Stmt>, ParseError> {
        let mut out = vec![self.small_stmt()?];
        while self.eat_op(";") {
            if self.at(&Tok::Newline) || self.at(&Tok::EndMarker) {
                break;
            }
            out.push(self.small_stmt()?);
        }
        self.expect_newline()?;
        Ok(out)
    }

    fn small_stmt(&mut self) -> Result<Stmt, ParseError> {
        if self.eat_kw("pass") {
            return Ok(Stmt::Pass);
        }
        if self.eat_kw("break") {
            return Ok(Stmt::Break);
        }
        if self.eat_kw("continue") {
            return Ok(Stmt::Continue);
        }
        if self.eat_kw("return") {
            if self.at(&Tok::Newline) || self.at(&Tok::EndMarker) || self.at_op(";") {
                return Ok(Stmt::Return(None));
            }
            return Ok(Stmt::Return(Some(self.testlist()?)));
        }
        if self.at_kw("import") {
            return self.import();
        }
        if self.at_kw("from") {
            return self.import_from();
        }
        if let Tok::Name(kw) = self.peek() {
            if UNSUPPORTED_STMT_KEYWORDS.contains(&kw.as_str()) {
                let k = kw.clone();
                return Err(self.unsupported(format!("'{k}' statement")));
            }
        }
        self.expr_stmt()
    }

    fn import(&mut self) -> Result<Stmt, ParseError> {
        self.expect_kw("import")?;
        let mut names = Vec::new();
        loop {
            let name = self.dotted_name()?;
            let asname = if self.eat_kw("as") {
                Some(self.identifier()?)
            } else {
                None
            };
            names.push(Alias { name, asname });
            if !self.eat_op(",") {
                break;
            }
        }
        Ok(Stmt::Import(names))
    }

    fn import_from(&mut self) -> Result<Stmt, ParseError> {
        self.expect_kw("from")?;
        if self.at_op(".") || self.at_op("...") {
            return Err(self.unsupported("relative import"));
        }
        let module = self.dotted_name()?;
        self.expect_kw("import")?;
        if self.at_op("*") {
            return Err(self.unsupported("star import"));
        }
        let paren = self.eat_op("(");
        let mut names = Vec::new();
        loop {
            let name = self.identifier()?;
            let asname = if self.eat_kw("as") {
                Some(self.identifier()?)
            } else {
                None
            };
            names.push(Alias { name, asname });
            if !self.eat_op(",") {
                break;
            }
            if paren && self.at_op(")") {
                break;
            }
        }
        if paren {
            self.expect_op(")")?;
        }
        Ok(Stmt::ImportFrom { module, names })
    }

    fn dotted_name(&mut self) -> Result<String, ParseError> {
        let mut name = self.identifier()?;
        while self.eat_op(".") {
            name.push('.');
            name.push_str(&self.identifier()?);
        }
        Ok(name)
    }

    fn expr_stmt(&mut self) -> Result<Stmt, ParseError> {
        let first = self.testlist()?;
        if self.at_op(":") {
            return Err(self.unsupported("annotated assignment"));
        }
        if let Tok::Op(op) = self.peek().clone() {
            if op.len() >= 2 && op.ends_with('=') && !matches!(op, "==" | "<=" | ">=" | "!=") {
                let bin = BinOp::from_symbol(&op[..op.len() - 1])
                    .ok_or_else(|| self.err(format!("invalid operator {op}")))?;
                match first {
                    Expr::Name(_) | Expr::Attribute { .. } | Expr::Subscript { .. } => {}
                    _ => return Err(self.err("illegal expression for augmented assignment")),
                }
                self.advance();
                let value = self.testlist()?;
                return Ok(Stmt::AugAssign {
                    target: first,
                    op: bin,
                    value,
                });
            }
        }
        if self.at_op("=") {
            let mut items = vec![first];
            while self.eat_op("=") {
                items.push(self.testlist()?);
            }
            let value = items.pop().unwrap();
            for t in &items {
                self.check_target(t)?;
            }
            return Ok(Stmt::Assign {
                targets: items,
                value,
            });
        }
        Ok(Stmt::Expr(first))
    }

    fn check_target(&self, e: &Expr) -> Result<(), ParseError> {
        match e {
            Expr::Name(_) | Expr::Attribute { .. } | Expr::Subscript { .. } => Ok(()),
            Expr::Tuple(items) | Expr::List(items) => {
                items.iter().try_for_each(|i| self.check_target(i))
            }
            _ => Err(self.err("cannot assign to expression")),
        }
    }

    fn block(&mut self) -> Result<Vec<Stmt>, ParseError> {
        self.expect_op(":")?;
        if !self.eat(&Tok::Newline) {
            return self.simple_stmts();
        }
        if !self.eat(&Tok::Indent) {
            return Err(self.err("expected an indented block"));
        }
        let mut body = Vec::new();
        while !self.eat(&Tok::Dedent) {
            if self.at(&Tok::EndMarker) {
                break;
            }
            if self.eat(&Tok::Newline) {
                continue;
            }
            body.extend(self.statement()?);
        }
        Ok(body)
    }

    fn funcdef(&mut self) -> Result<Stmt, ParseError> {
        self.expect_kw("def")?;
        let name = self.identifier()?;
        self.expect_op("(")?;
        let mut params: Vec<Param> = Vec::new();
        while !self.at_op(")") {
            if self.at_op("*") || self.at_op("**") || self.at_op("/") {
                return Err(self.unsupported("variadic or positional-only parameters"));
            }
            let pname = self.identifier()?;
            if self.at_op(":") {
                return Err(self.unsupported("parameter annotation"));
            }
            let default = if self.eat_op("=") {
                Some(self.test()?)
            } else {
                None
            };
            if default.is_none() && params.iter().any(|p| p.default.is_some()) {
                return Err(self.err("non-default argument follows default argument"));
            }
            if params.iter().any(|p| p.name == pname) {
                return Err(self.err(format!("duplicate argument '{pname}'")));
            }
            params.push(Param {
                name: pname,
                default,
            });
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(")")?;
        if self.at_op("->") {
            return Err(self.unsupported("return annotation"));
        }
        let body = self.block()?;
        Ok(Stmt::FunctionDef { name, params, body })
    }

    fn if_stmt(&mut self) -> Result<Stmt, ParseError> {
        // shared by `if` and `elif`
        self.advance();
        let test = self.named_test()?;
        let body = self.block()?;
        let orelse = if self.at_kw("elif") {
            vec![self.if_stmt()?]
        } else if self.eat_kw("else") {
            self.block()?
        } else {
            Vec::new()
        };
        Ok(Stmt::If { test, body, orelse })
    }

    fn for_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect_kw("for")?;
        let target = self.target_list()?;
        self.expect_kw("in")?;
        let iter = self.testlist()?;
        let body = self.block()?;
        if self.at_kw("else") {
            return Err(self.unsupported("for-else"));
        }
        Ok(Stmt::For { target, iter, body })
    }

    fn while_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect_kw("while")?;
        let test = self.named_test()?;
        let body = self.block()?;
        if self.at_kw("else") {
            return Err(self.unsupported("while-else"));
        }
        Ok(Stmt::While { test, body })
    }

    fn named_test(&mut self) -> Result<Expr, ParseError> {
        let e = self.test()?;
        if self.at_op(":=") {
            return Err(self.unsupported("assignment expression"));
        }
        Ok(e)
    }

    /// Comma-separated targets of `for`; a single target stays unwrapped.
    fn target_list(&mut self) -> Result<Expr, ParseError> {
        let first = self.bitor()?;
        let e = if self.at_op(",") {
            let mut items = vec![first];
            while self.eat_op(",") {
                if self.at_kw("in") {
                    break;
                }
                items.push(self.bitor()?);
            }
            Expr::Tuple(items)
        } else {
            first
        };
        self.check_target(&e)?;
        Ok(e)
    }

    // ---- expressions ----

    fn testlist(&mut self) -> Result<Expr, ParseError> {
        let first = self.test()?;
        if !self.at_op(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat_op(",") {
            if self.expr_ends_here() {
                break;
            }
            items.push(self.test()?);
        }
        Ok(Expr::Tuple(items))
    }

    fn expr_ends_here(&self) -> bool {
        match self.peek() {
            Tok::Newline | Tok::EndMarker => true,
            Tok::Op(o) => matches!(*o, "=" | ")" | "]" | "}" | ";" | ":") || o.ends_with('=') && o.len() > 1 && !matches!(*o, "==" | "<=" | ">=" | "!="),
            _ => false,
        }
    }

    fn test(&mut self) -> Result<Expr, ParseError> {
        if self.at_kw("lambda") {
            return Err(self.unsupported("lambda"));
        }
        if self.at_kw("yield") {
            return Err(self.unsupported("yield"));
        }
        if self.at_kw("await") {
            return Err(self.unsupported("await"));
        }
        let body = self.or_test()?;
        if self.eat_kw("if") {
            let test = self.or_test()?;
            self.expect_kw("else")?;
            let orelse = self.test()?;
            return Ok(Expr::IfExp {
                test: Box::new(test),
                body: Box::new(body),
                orelse: Box::new(orelse),
            });
        }
        Ok(body)
    }

    fn or_test(&mut self) -> Result<Expr, ParseError> {
        let first = self.and_test()?;
        if !self.at_kw("or") {
            return Ok(first);
        }
        let mut values = vec![first];
        while self.eat_kw("or") {
            values.push(self.and_test()?);
        }
        Ok(Expr::BoolOp {
            op: BoolOp::Or,
            values,
        })
    }

    fn and_test(&mut self) -> Result<Expr, ParseError> {
        let first = self.not_test()?;
        if !self.at_kw("and") {
            return Ok(first);
        }
        let mut values = vec![first];
        while self.eat_kw("and") {
            values.push(self.not_test()?);
        }
        Ok(Expr::BoolOp {
            op: BoolOp::And,
            values,
        })
    }

    fn not_test(&mut self) -> Result<Expr, ParseError> {
        if self.eat_kw("not") {
            let operand = self.not_test()?;
            return Ok(Expr::negate(operand));
        }
        self.comparison()
    }

    fn comp_op(&mut self) -> Option<CmpOp> {
        let op = match self.peek().clone() {
            Tok::Op("==") => CmpOp::Eq,
            Tok::Op("!=") => CmpOp::NotEq,
            Tok::Op("<") => CmpOp::Lt,
            Tok::Op("<=") => CmpOp::LtE,
            Tok::Op(">") => CmpOp::Gt,
            Tok::Op(">=") => CmpOp::GtE,
            Tok::Name(ref n) if n == "in" => CmpOp::In,
            Tok::Name(ref n) if n == "is" => {
                if matches!(self.peek_n(1), Tok::Name(m) if m == "not") {
                    self.advance();
                    CmpOp::IsNot
                } else {
                    CmpOp::Is
                }
            }
            Tok::Name(ref n) if n == "not" => {
                if matches!(self.peek_n(1), Tok::Name(m) if m == "in") {
                    self.advance();
                    CmpOp::NotIn
                } else {
                    return None;
                }
            }
            _ => return None,
        };
        self.advance();
        Some(op)
    }

    fn comparison(&mut self) -> Result<Expr, ParseError> {
        let left = self.bitor()?;
        let mut ops = Vec::new();
        let mut comparators = Vec::new();
        while let Some(op) = self.comp_op() {
            ops.push(op);
            comparators.push(self.bitor()?);
        }
        if ops.is_empty() {
            return Ok(left);
        }
        Ok(Expr::Compare {
            left: Box::new(left),
            ops,
            comparators,
        })
    }

    fn binary_level(
        &mut self,
        ops: &[&str],
        next: fn(&mut Self) -> Result<Expr, ParseError>,
    ) -> Result<Expr, ParseError> {
        let mut left = next(self)?;
        loop {
            let op = match self.peek() {
                Tok::Op(o) if ops.contains(o) => *o,
                _ => break,
            };
            self.advance();
            let right = next(self)?;
            left = Expr::binop(left, BinOp::from_symbol(op).unwrap(), right);
        }
        Ok(left)
    }

    fn bitor(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["|"], Self::bitxor)
    }

    fn bitxor(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["^"], Self::bitand)
    }

    fn bitand(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["&"], Self::shift)
    }

    fn shift(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["<<", ">>"], Self::arith)
    }

    fn arith(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["+", "-"], Self::term)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&["*", "/", "//", "%", "@"], Self::factor)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let op = match self.peek() {
            Tok::Op("-") => UnaryOp::USub,
            Tok::Op("+") => UnaryOp::UAdd,
            Tok::Op("~") => UnaryOp::Invert,
            _ => return self.power(),
        };
        self.advance();
        let operand = self.factor()?;
        Ok(Expr::unary(op, operand))
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat_op("**") {
            let exp = self.factor()?;
            return Ok(Expr::binop(base, BinOp::Pow, exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        loop {
            if self.eat_op(".") {
                let attr = self.identifier()?;
                e = Expr::attr(e, attr);
            } else if self.at_op("(") {
                self.advance();
                let (args, keywords) = self.call_args()?;
                e = Expr::Call {
                    func: Box::new(e),
                    args,
                    keywords,
                };
            } else if self.eat_op("[") {
                let index = self.subscript_index()?;
                self.expect_op("]")?;
                e = Expr::subscript(e, index);
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn call_args(&mut self) -> Result<(Vec<Expr>, Vec<Keyword>), ParseError> {
        let mut args = Vec::new();
        let mut keywords: Vec<Keyword> = Vec::new();
        while !self.at_op(")") {
            if self.at_op("*") || self.at_op("**") {
                return Err(self.unsupported("starred call argument"));
            }
            let is_kw = matches!(self.peek(), Tok::Name(_)) && matches!(self.peek_n(1), Tok::Op("="));
            if is_kw {
                let arg = self.identifier()?;
                self.expect_op("=")?;
                let value = self.test()?;
                if keywords.iter().any(|k| k.arg == arg) {
                    return Err(self.err(format!("keyword argument repeated: {arg}")));
                }
                keywords.push(Keyword { arg, value });
            } else {
                if !keywords.is_empty() {
                    return Err(self.err("positional argument follows keyword argument"));
                }
                let v = self.test()?;
                if self.at_kw("for") {
                    return Err(self.unsupported("generator expression"));
                }
                args.push(v);
            }
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(")")?;
        Ok((args, keywords))
    }

    fn subscript_index(&mut self) -> Result<Expr, ParseError> {
        let first = self.slice_item()?;
        if !self.at_op(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat_op(",") {
            if self.at_op("]") {
                break;
            }
            items.push(self.slice_item()?);
        }
        if items.iter().any(|i| matches!(i, Expr::Slice { .. })) {
            return Err(self.unsupported("multi-dimensional slice"));
        }
        Ok(Expr::Tuple(items))
    }

    fn slice_item(&mut self) -> Result<Expr, ParseError> {
        let lower = if self.at_op(":") { None } else { Some(self.test()?) };
        if !self.eat_op(":") {
            return lower.ok_or_else(|| self.err("expected subscript"));
        }
        let bound_ends = |p: &Self| p.at_op(":") || p.at_op("]") || p.at_op(",");
        let upper = if bound_ends(self) { None } else { Some(self.test()?) };
        let step = if self.eat_op(":") {
            if bound_ends(self) {
                None
            } else {
                Some(self.test()?)
            }
        } else {
            None
        };
        Ok(Expr::Slice {
            lower: lower.map(Box::new),
            upper: upper.map(Box::new),
            step: step.map(Box::new),
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (line, col) = self.pos_info();
        match self.peek().clone() {
            Tok::Op("(") => {
                self.advance();
                if self.eat_op(")") {
                    return Ok(Expr::Tuple(Vec::new()));
                }
                let first = self.test()?;
                if self.at_kw("for") {
                    return Err(self.unsupported("generator expression"));
                }
                if self.at_op(":=") {
                    return Err(self.unsupported("assignment expression"));
                }
                if self.eat_op(")") {
                    return Ok(first);
                }
                let mut items = vec![first];
                while self.eat_op(",") {
                    if self.at_op(")") {
                        break;
                    }
                    items.push(self.test()?);
                }
                self.expect_op(")")?;
                Ok(Expr::Tuple(items))
            }
            Tok::Op("[") => {
                self.advance();
                if self.eat_op("]") {
                    return Ok(Expr::List(Vec::new()));
                }
                let first = self.test()?;
                if self.at_kw("for") {
                    let generators = self.comprehension_clauses()?;
                    self.expect_op("]")?;
                    return Ok(Expr::ListComp {
                        elt: Box::new(first),
                        generators,
                    });
                }
                let mut items = vec![first];
                while self.eat_op(",") {
                    if self.at_op("]") {
                        break;
                    }
                    items.push(self.test()?);
                }
                self.expect_op("]")?;
                Ok(Expr::List(items))
            }
            Tok::Op("{") => {
                self.advance();
                let mut keys = Vec::new();
                let mut values = Vec::new();
                while !self.at_op("}") {
                    if self.at_op("**") {
                        return Err(self.unsupported("dict unpacking"));
                    }
                    let k = self.test()?;
                    if !self.eat_op(":") {
                        return Err(self.unsupported("set display"));
                    }
                    let v = self.test()?;
                    if self.at_kw("for") {
                        return Err(self.unsupported("dict comprehension"));
                    }
                    keys.push(k);
                    values.push(v);
                    if !self.eat_op(",") {
                        break;
                    }
                }
                self.expect_op("}")?;
                Ok(Expr::Dict { keys, values })
            }
            Tok::Op("...") => {
                self.advance();
                Ok(Expr::Constant(Constant::Ellipsis))
            }
            Tok::Op("*") => Err(self.unsupported("starred expression")),
            Tok::Number(text) => {
                self.advance();
                parse_number(&text, line, col)
            }
            Tok::Str { .. } => {
                let mut s = String::new();
                while let Tok::Str { prefix, body } = self.peek().clone() {
                    let (l, c) = self.pos_info();
                    s.push_str(&decode_string(&prefix, &body, l, c)?);
                    self.advance();
                }
                Ok(Expr::Constant(Constant::Str(s)))
            }
            Tok::Name(n) => match n.as_str() {
                "None" => {
                    self.advance();
                    Ok(Expr::Constant(Constant::None))
                }
                "True" => {
                    self.advance();
                    Ok(Expr::Constant(Constant::Bool(true)))
                }
                "False" => {
                    self.advance();
                    Ok(Expr::Constant(Constant::Bool(false)))
                }
                "lambda" | "yield" | "await" => Err(self.unsupported(n.clone())),
                _ => Ok(Expr::Name(self.identifier()?)),
            },
            other => Err(self.err(format!("invalid syntax near {}", describe(&other)))),
        }
    }

    fn comprehension_clauses(&mut self) -> Result<Vec<Comprehension>, ParseError> {
        let mut gens = Vec::new();
        while self.eat_kw("for") {
            let target = self.target_list()?;
            self.expect_kw("in")?;
            let iter = self.or_test()?;
            let mut ifs = Vec::new();
            while self.eat_kw("if") {
                ifs.push(self.or_test()?);
            }
            gens.push(Comprehension { target, iter, ifs });
        }
        if self.at_kw("async") {
            return Err(self.unsupported("async comprehension"));
        }
        Ok(gens)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(n) => format!("'{n}'"),
        Tok::Number(n) => format!("number {n}"),
        Tok::Str { .. } => "string".into(),
        Tok::Op(o) => format!("'{o}'"),
        Tok::Newline => "newline".into(),
        Tok::Indent => "indent".into(),
        Tok::Dedent => "dedent".into(),
        Tok::EndMarker => "end of input".into(),
    }
}

fn parse_number(text: &str, line: usize, col: usize) -> Result<Expr, ParseError> {
    let clean: String = text.chars().filter(|c| *c != '_').collect();
    if clean.ends_with('j') || clean.ends_with('J') {
        return Err(ParseError::unsupported(line, col, "complex literal"));
    }
    let lower = clean.to_ascii_lowercase();
    let radix = if lower.starts_with("0x") {
        Some(16)
    } else if lower.starts_with("0o") {
        Some(8)
    } else if lower.starts_with("0b") {
        Some(2)
    } else {
        None
    };
    if let Some(r) = radix {
        return match i64::from_str_radix(&lower[2..], r) {
            Ok(v) => Ok(Expr::int(v)),
            Err(e) if matches!(e.kind(), std::num::IntErrorKind::PosOverflow) => {
                Err(ParseError::unsupported(line, col, "integer literal beyond 64 bits"))
            }
            Err(_) => Err(ParseError::syntax(line, col, format!("invalid literal {text}"))),
        };
    }
    if lower.contains('.') || lower.contains('e') {
        return lower
            .parse::<f64>()
            .map(|v| Expr::Constant(Constant::Float(v)))
            .map_err(|_| ParseError::syntax(line, col, format!("invalid literal {text}")));
    }
    if lower.len() > 1 && lower.starts_with('0') && lower.chars().any(|c| c != '0') {
        return Err(ParseError::syntax(
            line,
            col,
            "leading zeros in decimal integer literals are not permitted",
        ));
    }
    match lower.parse::<i64>() {
        Ok(v) => Ok(Expr::int(v)),
        Err(e) if matches!(e.kind(), std::num::IntErrorKind::PosOverflow) => {
            Err(ParseError::unsupported(line, col, "integer literal beyond 64 bits"))
        }
        Err(_) => Err(ParseError::syntax(line, col, format!("invalid literal {text}"))),
    }
}

fn decode_string(prefix: &str, body: &str, line: usize, col: usize) -> Result<String, ParseError> {
    if prefix.contains('f') {
        return Err(ParseError::unsupported(line, col, "f-string"));
    }
    if prefix.contains('b') {
        return Err(ParseError::unsupported(line, col, "bytes literal"));
    }
    if prefix.contains('r') {
        return Ok(body.to_string());
    }
    let mut out = String::new();
    let mut chars = body.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        let Some(e) = chars.next() else { break };
        match e {
            '\n' => {}
            '\\' => out.push('\\'),
            '\'' => out.push('\''),
            '"' => out.push('"'),
            'a' => out.push('\x07'),
            'b' => out.push('\x08'),
            'f' => out.push('\x0c'),
            'n' => out.push('\n'),
            'r' => out.push('\r'),
            't' => out.push('\t'),
            'v' => out.push('\x0b'),
            '0'..='7' => {
                let mut v = e.to_digit(8).unwrap();
                for _ in 0..2 {
                    match chars.peek().and_then(|d| d.to_digit(8)) {
                        Some(d) => {
                            v = v * 8 + d;
                            chars.next();
                        }
                        None => break,
                    }
                }
                out.push(char::from_u32(v).unwrap_or('\u{fffd}'));
            }
            'x' | 'u' | 'U' => {
                let n = match e {
                    'x' => 2,
                    'u' => 4,
                    _ => 8,
                };
                let hex: String = (0..n).filter_map(|_| chars.next()).collect();
                let v = u32::from_str_radix(&hex, 16)
                    .ok()
                    .filter(|_| hex.len() == n)
                    .and_then(char::from_u32)
                    .ok_or_else(|| ParseError::syntax(line, col, format!("invalid \\{e} escape")))?;
                out.push(v);
            }
            'N' => return Err(ParseError::unsupported(line, col, "named unicode escape")),
            other => {
                // unknown escapes are kept verbatim
                out.push('\\');
                out.push(other);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_assignment() {
        let m = parse("x = 1").unwrap();
        assert_eq!(
            m.body,
            vec![Stmt::Assign {
                targets: vec![Expr::name("x")],
                value: Expr::int(1)
            }]
        );
    }

    #[test]
    fn parentheses_are_not_semantic() {
        assert_eq!(parse("x = (1)").unwrap(), parse("x = 1").unwrap());
    }

    #[test]
    fn malformed_def_is_syntax_error() {
        let err = parse("def f(:").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }), "{err:?}");
    }

    #[test]
    fn hex_literal_equals_decimal() {
        assert_eq!(parse("x = 0x10").unwrap(), parse("x = 16").unwrap());
    }

    #[test]
    fn int_and_float_literals_differ() {
        assert_ne!(parse("x = 1").unwrap(), parse("x = 1.0").unwrap());
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse_expr("a - b - c * d ** -e ** f").unwrap();
        let expected = Expr::binop(
            Expr::binop(Expr::name("a"), BinOp::Sub, Expr::name("b")),
            BinOp::Sub,
            Expr::binop(
                Expr::name("c"),
                BinOp::Mult,
                Expr::binop(
                    Expr::name("d"),
                    BinOp::Pow,
                    Expr::unary(
                        UnaryOp::USub,
                        Expr::binop(Expr::name("e"), BinOp::Pow, Expr::name("f")),
                    ),
                ),
            ),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn chained_comparison_and_membership() {
        let e = parse_expr("a < b <= c not in d is not e").unwrap();
        match e {
            Expr::Compare { ops, .. } => assert_eq!(
                ops,
                vec![CmpOp::Lt, CmpOp::LtE, CmpOp::NotIn, CmpOp::IsNot]
            ),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn elif_nests_in_orelse() {
        let a = parse("if a:\n    x\nelif b:\n    y\nelse:\n    z\n").unwrap();
        let b = parse("if a:\n    x\nelse:\n    if b:\n        y\n    else:\n        z\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn adjacent_strings_concatenate() {
        assert_eq!(parse("s = 'a' \"b\"").unwrap(), parse("s = 'ab'").unwrap());
    }

    #[test]
    fn escapes_decode() {
        assert_eq!(parse(r"s = '\x41\n'").unwrap(), parse("s = \"A\\n\"").unwrap());
    }

    #[test]
    fn unsupported_constructs_are_reported() {
        for src in [
            "class A:\n    pass\n",
            "with open(f) as g:\n    pass\n",
            "f = lambda x: x\n",
            "x: int = 1\n",
            "s = f'{x}'\n",
            "y = (x for x in z)\n",
            "@dec\ndef f():\n    pass\n",
            "for x in y:\n    pass\nelse:\n    pass\n",
        ] {
            let err = parse(src).unwrap_err();
            assert!(err.is_unsupported(), "{src:?} -> {err:?}");
        }
    }

    #[test]
    fn assignment_to_literal_is_syntax_error() {
        assert!(matches!(parse("1 = x").unwrap_err(), ParseError::Syntax { .. }));
    }

    #[test]
    fn one_line_blocks_and_semicolons() {
        let a = parse("if a: x = 1; y = 2\n").unwrap();
        let b = parse("if a:\n    x = 1\n    y = 2\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn source_hash_is_recorded() {
        let m = parse("x = 1").unwrap();
        assert_eq!(m.source_hash, sha256_hex("x = 1"));
        assert_eq!(m.source_hash.len(), 64);
    }
}
