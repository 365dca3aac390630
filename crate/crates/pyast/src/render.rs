//! Renders trees back to Python source.
//!
//! Parentheses are emitted only where precedence requires them, so that
//! re-parsing the output yields a structurally equal tree.

use crate::ast::*;

const INDENT: &str = "    ";

pub fn render(module: &PyModuleAst) -> String {
    render_stmts(&module.body)
}

pub fn render_stmts(stmts: &[Stmt]) -> String {
    let mut out = String::new();
    write_block(&mut out, stmts, 0);
    out
}

pub fn render_stmt(stmt: &Stmt) -> String {
    let mut out = String::new();
    write_stmt(&mut out, stmt, 0);
    out
}

pub fn render_expr(e: &Expr) -> String {
    expr(e, prec::TEST)
}

mod prec {
    pub const TUPLE: u8 = 0;
    pub const TEST: u8 = 1;
    pub const OR: u8 = 2;
    pub const AND: u8 = 3;
    pub const NOT: u8 = 4;
    pub const CMP: u8 = 5;
    pub const BOR: u8 = 6;
    pub const BXOR: u8 = 7;
    pub const BAND: u8 = 8;
    pub const SHIFT: u8 = 9;
    pub const ARITH: u8 = 10;
    pub const TERM: u8 = 11;
    pub const FACTOR: u8 = 12;
    pub const POWER: u8 = 13;
    pub const PRIMARY: u8 = 14;
    pub const ATOM: u8 = 15;
}

fn binop_prec(op: BinOp) -> u8 {
    match op {
        BinOp::BitOr => prec::BOR,
        BinOp::BitXor => prec::BXOR,
        BinOp::BitAnd => prec::BAND,
        BinOp::LShift | BinOp::RShift => prec::SHIFT,
        BinOp::Add | BinOp::Sub => prec::ARITH,
        BinOp::Mult | BinOp::MatMult | BinOp::Div | BinOp::FloorDiv | BinOp::Mod => prec::TERM,
        BinOp::Pow => prec::POWER,
    }
}

fn expr_prec(e: &Expr) -> u8 {
    match e {
        Expr::IfExp { .. } => prec::TEST,
        Expr::BoolOp { op: BoolOp::Or, .. } => prec::OR,
        Expr::BoolOp { op: BoolOp::And, .. } => prec::AND,
        Expr::UnaryOp {
            op: UnaryOp::Not, ..
        } => prec::NOT,
        Expr::Compare { .. } => prec::CMP,
        Expr::BinOp { op, .. } => binop_prec(*op),
        Expr::UnaryOp { .. } => prec::FACTOR,
        Expr::Call { .. } | Expr::Attribute { .. } | Expr::Subscript { .. } => prec::PRIMARY,
        // negative literals only appear in hand-built trees
        Expr::Constant(Constant::Int(v)) if *v < 0 => prec::FACTOR,
        Expr::Constant(Constant::Float(v)) if v.is_sign_negative() => prec::FACTOR,
        Expr::Tuple(items) if !items.is_empty() => prec::TUPLE,
        _ => prec::ATOM,
    }
}

fn expr(e: &Expr, min: u8) -> String {
    let s = expr_inner(e);
    let needs = expr_prec(e) < min
        // a bare tuple is never emitted outside the few statement positions
        // that accept one
        || (matches!(e, Expr::Tuple(items) if !items.is_empty()) && min > prec::TUPLE);
    if needs {
        format!("({s})")
    } else {
        s
    }
}

fn tuple_bare(items: &[Expr]) -> String {
    match items.len() {
        0 => "()".to_string(),
        1 => format!("{},", expr(&items[0], prec::TEST)),
        _ => items
            .iter()
            .map(|i| expr(i, prec::TEST))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

/// Expression in a position that accepts an unparenthesized tuple
/// (assignment sides, `return`, `for` targets and iterables).
fn expr_list(e: &Expr) -> String {
    match e {
        Expr::Tuple(items) if !items.is_empty() => tuple_bare(items),
        other => expr(other, prec::TEST),
    }
}

fn expr_inner(e: &Expr) -> String {
    match e {
        Expr::BoolOp { op, values } => values
            .iter()
            .map(|v| expr(v, expr_prec(e) + 1))
            .collect::<Vec<_>>()
            .join(&format!(" {op} ")),
        Expr::BinOp { left, op, right } => {
            let p = binop_prec(*op);
            let (lp, rp) = if *op == BinOp::Pow {
                (prec::PRIMARY, prec::FACTOR)
            } else {
                (p, p + 1)
            };
            format!("{} {} {}", expr(left, lp), op.symbol(), expr(right, rp))
        }
        Expr::UnaryOp { op, operand } => {
            let min = if *op == UnaryOp::Not {
                prec::NOT
            } else {
                prec::FACTOR
            };
            let inner = expr(operand, min);
            // avoid fusing `- -x` into a decrement-looking `--x`
            let sep = if *op != UnaryOp::Not && inner.starts_with(op.symbol()) {
                " "
            } else {
                ""
            };
            format!("{}{sep}{inner}", op.symbol())
        }
        Expr::Compare {
            left,
            ops,
            comparators,
        } => {
            let mut s = expr(left, prec::CMP + 1);
            for (op, c) in ops.iter().zip(comparators) {
                s.push(' ');
                s.push_str(op.symbol());
                s.push(' ');
                s.push_str(&expr(c, prec::CMP + 1));
            }
            s
        }
        Expr::Call {
            func,
            args,
            keywords,
        } => {
            let mut parts: Vec<String> = args.iter().map(|a| expr(a, prec::TEST)).collect();
            parts.extend(
                keywords
                    .iter()
                    .map(|k| format!("{}={}", k.arg, expr(&k.value, prec::TEST))),
            );
            format!("{}({})", primary_base(func), parts.join(", "))
        }
        Expr::IfExp { test, body, orelse } => format!(
            "{} if {} else {}",
            expr(body, prec::OR),
            expr(test, prec::OR),
            expr(orelse, prec::TEST)
        ),
        Expr::Attribute { value, attr } => format!("{}.{attr}", primary_base(value)),
        Expr::Subscript { value, index } => {
            let idx = match index.as_ref() {
                Expr::Tuple(items) if !items.is_empty() => tuple_bare(items),
                Expr::Slice { .. } => expr_inner(index),
                other => expr(other, prec::TEST),
            };
            format!("{}[{idx}]", primary_base(value))
        }
        Expr::Slice { lower, upper, step } => {
            let part = |b: &Option<Box<Expr>>| b.as_ref().map(|e| expr(e, prec::TEST)).unwrap_or_default();
            let mut s = format!("{}:{}", part(lower), part(upper));
            if step.is_some() {
                s.push(':');
                s.push_str(&part(step));
            }
            s
        }
        Expr::Name(n) => n.clone(),
        Expr::Constant(c) => constant(c),
        Expr::List(items) => format!(
            "[{}]",
            items
                .iter()
                .map(|i| expr(i, prec::TEST))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Expr::Tuple(items) => match items.len() {
            0 => "()".into(),
            _ => tuple_bare(items),
        },
        Expr::Dict { keys, values } => format!(
            "{{{}}}",
            keys.iter()
                .zip(values)
                .map(|(k, v)| format!("{}: {}", expr(k, prec::TEST), expr(v, prec::TEST)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Expr::ListComp { elt, generators } => {
            let mut s = format!("[{}", expr(elt, prec::TEST));
            for g in generators {
                s.push_str(&format!(
                    " for {} in {}",
                    comp_target(&g.target),
                    expr(&g.iter, prec::OR)
                ));
                for cond in &g.ifs {
                    s.push_str(&format!(" if {}", expr(cond, prec::OR)));
                }
            }
            s.push(']');
            s
        }
    }
}

fn comp_target(t: &Expr) -> String {
    match t {
        Expr::Tuple(items) if !items.is_empty() => items
            .iter()
            .map(|i| expr(i, prec::BOR))
            .collect::<Vec<_>>()
            .join(", ")
            + if items.len() == 1 { "," } else { "" },
        other => expr(other, prec::BOR),
    }
}

fn primary_base(e: &Expr) -> String {
    match e {
        // `1.real` would lex as a float
        Expr::Constant(Constant::Int(_)) => format!("({})", expr_inner(e)),
        _ => expr(e, prec::PRIMARY),
    }
}

pub fn constant(c: &Constant) -> String {
    match c {
        Constant::None => "None".into(),
        Constant::Bool(true) => "True".into(),
        Constant::Bool(false) => "False".into(),
        Constant::Int(v) => v.to_string(),
        Constant::Float(v) => float_repr(*v),
        Constant::Str(s) => string_repr(s),
        Constant::Ellipsis => "...".into(),
    }
}

/// Shortest text that reads back as the same float.
pub fn float_repr(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "1e999".into() } else { "-1e999".into() };
    }
    if v.is_nan() {
        // not expressible as a literal; keep something readable
        return "float('nan')".into();
    }
    let s = format!("{v:?}");
    if s.contains('.') || s.contains('e') || s.contains("inf") {
        s
    } else {
        format!("{s}.0")
    }
}

/// Python-style `repr` of a string.
pub fn string_repr(s: &str) -> String {
    let quote = if s.contains('\'') && !s.contains('"') {
        '"'
    } else {
        '\''
    };
    let mut out = String::with_capacity(s.len() + 2);
    out.push(quote);
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c == quote => {
                out.push('\\');
                out.push(c);
            }
            c if (c as u32) < 0x20 || c as u32 == 0x7f => out.push_str(&format!("\\x{:02x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push(quote);
    out
}

fn write_block(out: &mut String, stmts: &[Stmt], level: usize) {
    if stmts.is_empty() {
        // an empty body is not valid Python
        indent(out, level);
        out.push_str("pass\n");
        return;
    }
    for s in stmts {
        write_stmt(out, s, level);
    }
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str(INDENT);
    }
}

fn write_stmt(out: &mut String, stmt: &Stmt, level: usize) {
    indent(out, level);
    match stmt {
        Stmt::FunctionDef { name, params, body } => {
            let ps: Vec<String> = params
                .iter()
                .map(|p| match &p.default {
                    Some(d) => format!("{}={}", p.name, expr(d, prec::TEST)),
                    None => p.name.clone(),
                })
                .collect();
            out.push_str(&format!("def {name}({}):\n", ps.join(", ")));
            write_block(out, body, level + 1);
        }
        Stmt::Return(None) => out.push_str("return\n"),
        Stmt::Return(Some(v)) => out.push_str(&format!("return {}\n", expr_list(v))),
        Stmt::Assign { targets, value } => {
            for t in targets {
                out.push_str(&expr_list(t));
                out.push_str(" = ");
            }
            out.push_str(&expr_list(value));
            out.push('\n');
        }
        Stmt::AugAssign { target, op, value } => {
            out.push_str(&format!(
                "{} {}= {}\n",
                expr(target, prec::TEST),
                op.symbol(),
                expr_list(value)
            ));
        }
        Stmt::Expr(e) => {
            out.push_str(&expr_list(e));
            out.push('\n');
        }
        Stmt::If { test, body, orelse } => {
            out.push_str(&format!("if {}:\n", expr(test, prec::TEST)));
            write_block(out, body, level + 1);
            write_orelse(out, orelse, level);
        }
        Stmt::For { target, iter, body } => {
            out.push_str(&format!("for {} in {}:\n", expr_list(target), expr_list(iter)));
            write_block(out, body, level + 1);
        }
        Stmt::While { test, body } => {
            out.push_str(&format!("while {}:\n", expr(test, prec::TEST)));
            write_block(out, body, level + 1);
        }
        Stmt::Break => out.push_str("break\n"),
        Stmt::Continue => out.push_str("continue\n"),
        Stmt::Pass => out.push_str("pass\n"),
        Stmt::Import(names) => {
            out.push_str("import ");
            out.push_str(&aliases(names));
            out.push('\n');
        }
        Stmt::ImportFrom { module, names } => {
            out.push_str(&format!("from {module} import {}\n", aliases(names)));
        }
    }
}

fn write_orelse(out: &mut String, orelse: &[Stmt], level: usize) {
    match orelse {
        [] => {}
        [Stmt::If { test, body, orelse }] => {
            indent(out, level);
            out.push_str(&format!("elif {}:\n", expr(test, prec::TEST)));
            write_block(out, body, level + 1);
            write_orelse(out, orelse, level);
        }
        _ => {
            indent(out, level);
            out.push_str("else:\n");
            write_block(out, orelse, level + 1);
        }
    }
}

fn aliases(names: &[Alias]) -> String {
    names
        .iter()
        .map(|a| match &a.asname {
            Some(asn) => format!("{} as {asn}", a.name),
            None => a.name.clone(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn round_trip(src: &str) {
        let t = parse(src).unwrap();
        let text = render(&t);
        let back = parse(&text).unwrap_or_else(|e| panic!("{e}\n---\n{text}"));
        assert_eq!(t, back, "render:\n{text}");
    }

    #[test]
    fn renders_simple_arithmetic() {
        assert_eq!(render(&parse("x=1+2").unwrap()), "x = 1 + 2\n");
        round_trip("x=1+2");
    }

    #[test]
    fn renders_if_block() {
        assert_eq!(render(&parse("if a:\n  pass").unwrap()), "if a:\n    pass\n");
    }

    #[test]
    fn preserves_structure_needing_parens() {
        for src in [
            "x = (a + b) * c",
            "x = a - (b - c)",
            "x = (a ** b) ** c",
            "x = (-2) ** 2",
            "x = 2 ** -1",
            "x = -(2 ** 2)",
            "x = - -x",
            "x = not (a and b)",
            "x = (a and b) and c",
            "x = a and (b or c)",
            "x = (a or b) or c",
            "x = (a if b else c) if d else e",
            "x = a if b else (c if d else e)",
            "x = (a < b) < c",
            "x = (a == b) in c",
            "x = not a == b",
            "x = (not a) == b",
            "x = (1).real",
            "x = f(a)(b)[c].d",
            "x = (a, b)[0]",
            "x = [(a, b) for a, b in zip(c, d) if (a if e else b)]",
            "x = a[1:2], a[::2], a[:], a[i, j]",
            "x = {1: (2, 3)}",
            "x = ()",
            "x = (1,)",
            "a, b = b, a",
            "for i, (j, k) in enumerate(y):\n    pass",
            "return_value = f(a, b=1, c=(d, e))",
            "x = (yield_)",
            "x = 'it''s'",
            "x = \"a\\nb\\t\\\\\"",
            "x = 1.5e-07 + 1e+16 + 0.1",
            "import torch, numpy as np\nfrom os import path as p, sep",
            "def f(a, b=2):\n    '''doc'''\n    return\n",
            "if a:\n    x\nelif b:\n    y\nelse:\n    z",
            "while x < 10:\n    x += 1\n    if x:\n        break\n    continue",
        ] {
            round_trip(src);
        }
    }

    #[test]
    fn string_repr_matches_python_style() {
        assert_eq!(string_repr("abc"), "'abc'");
        assert_eq!(string_repr("it's"), "\"it's\"");
        assert_eq!(string_repr("a'\""), "'a\\'\"'");
        assert_eq!(string_repr("\u{1}"), "'\\x01'");
    }

    #[test]
    fn float_repr_is_reparseable() {
        assert_eq!(float_repr(1.0), "1.0");
        assert_eq!(float_repr(0.1), "0.1");
        assert_eq!(float_repr(f64::INFINITY), "1e999");
    }

    #[test]
    fn empty_block_renders_pass() {
        let m = PyModuleAst::new(vec![Stmt::If {
            test: Expr::name("a"),
            body: vec![],
            orelse: vec![],
        }]);
        assert_eq!(render(&m), "if a:\n    pass\n");
    }
}
