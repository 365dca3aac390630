//! Structural comparison with a pointer to the first divergence.

use crate::ast::*;
use crate::render::{render_expr, render_stmt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    /// Field path from the module root, e.g. `body[0].value.left`.
    pub path: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AstDiff {
    pub equal: bool,
    pub first_divergence: Option<Divergence>,
}

impl AstDiff {
    fn from(div: Option<Divergence>) -> Self {
        AstDiff {
            equal: div.is_none(),
            first_divergence: div,
        }
    }
}

pub fn ast_equal(a: &PyModuleAst, b: &PyModuleAst) -> AstDiff {
    AstDiff::from(diff_stmts("body", &a.body, &b.body))
}

const MISSING: &str = "<missing>";

enum Child<'a> {
    Expr(&'a Expr),
    OptExpr(Option<&'a Expr>),
    Exprs(&'a [Expr]),
    Stmts(&'a [Stmt]),
}

fn diff_stmts(path: &str, a: &[Stmt], b: &[Stmt]) -> Option<Divergence> {
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            return diff_stmt(&format!("{path}[{i}]"), x, y);
        }
    }
    if a.len() != b.len() {
        let i = a.len().min(b.len());
        let snippet = |s: &[Stmt]| s.get(i).map(|s| render_stmt(s).trim_end().to_string()).unwrap_or_else(|| MISSING.into());
        return Some(Divergence {
            path: format!("{path}[{i}]"),
            left: snippet(a),
            right: snippet(b),
        });
    }
    None
}

fn diff_exprs(path: &str, a: &[Expr], b: &[Expr]) -> Option<Divergence> {
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            return diff_expr(&format!("{path}[{i}]"), x, y);
        }
    }
    if a.len() != b.len() {
        let i = a.len().min(b.len());
        let snippet = |s: &[Expr]| s.get(i).map(render_expr).unwrap_or_else(|| MISSING.into());
        return Some(Divergence {
            path: format!("{path}[{i}]"),
            left: snippet(a),
            right: snippet(b),
        });
    }
    None
}

fn diff_children(path: &str, a: Vec<(String, Child)>, b: Vec<(String, Child)>) -> Option<Divergence> {
    for ((label, ca), (_, cb)) in a.into_iter().zip(b) {
        let p = format!("{path}.{label}");
        let d = match (ca, cb) {
            (Child::Expr(x), Child::Expr(y)) => (x != y).then(|| diff_expr(&p, x, y)).flatten(),
            (Child::OptExpr(x), Child::OptExpr(y)) => match (x, y) {
                (Some(x), Some(y)) => (x != y).then(|| diff_expr(&p, x, y)).flatten(),
                (None, None) => None,
                (x, y) => Some(Divergence {
                    path: p,
                    left: x.map(render_expr).unwrap_or_else(|| MISSING.into()),
                    right: y.map(render_expr).unwrap_or_else(|| MISSING.into()),
                }),
            },
            (Child::Exprs(x), Child::Exprs(y)) => diff_exprs(&p, x, y),
            (Child::Stmts(x), Child::Stmts(y)) => diff_stmts(&p, x, y),
            _ => unreachable!("children of equal-shaped nodes line up"),
        };
        if d.is_some() {
            return d;
        }
    }
    None
}

fn diff_stmt(path: &str, a: &Stmt, b: &Stmt) -> Option<Divergence> {
    if a == b {
        return None;
    }
    let here = || Divergence {
        path: path.to_string(),
        left: render_stmt(a).trim_end().to_string(),
        right: render_stmt(b).trim_end().to_string(),
    };
    if stmt_shallow(a) != stmt_shallow(b) {
        return Some(here());
    }
    diff_children(path, stmt_children(a), stmt_children(b)).or_else(|| Some(here()))
}

fn diff_expr(path: &str, a: &Expr, b: &Expr) -> Option<Divergence> {
    if a == b {
        return None;
    }
    let here = || Divergence {
        path: path.to_string(),
        left: render_expr(a),
        right: render_expr(b),
    };
    if expr_shallow(a) != expr_shallow(b) {
        return Some(here());
    }
    diff_children(path, expr_children(a), expr_children(b)).or_else(|| Some(here()))
}

/// Everything about a statement except its child nodes.
fn stmt_shallow(s: &Stmt) -> String {
    match s {
        Stmt::FunctionDef { name, params, .. } => format!(
            "def {name}({})",
            params
                .iter()
                .map(|p| format!("{}{}", p.name, if p.default.is_some() { "=" } else { "" }))
                .collect::<Vec<_>>()
                .join(",")
        ),
        Stmt::Return(v) => format!("return {}", v.is_some()),
        Stmt::Assign { targets, .. } => format!("assign {}", targets.len()),
        Stmt::AugAssign { op, .. } => format!("augassign {op:?}"),
        Stmt::Expr(_) => "expr".into(),
        Stmt::If { .. } => "if".into(),
        Stmt::For { .. } => "for".into(),
        Stmt::While { .. } => "while".into(),
        Stmt::Break => "break".into(),
        Stmt::Continue => "continue".into(),
        Stmt::Pass => "pass".into(),
        Stmt::Import(names) => format!("import {names:?}"),
        Stmt::ImportFrom { module, names } => format!("from {module} import {names:?}"),
    }
}

fn stmt_children(s: &Stmt) -> Vec<(String, Child<'_>)> {
    match s {
        Stmt::FunctionDef { params, body, .. } => {
            let mut v: Vec<(String, Child)> = params
                .iter()
                .enumerate()
                .filter_map(|(i, p)| p.default.as_ref().map(|d| (format!("params[{i}].default"), Child::Expr(d))))
                .collect();
            v.push(("body".into(), Child::Stmts(body)));
            v
        }
        Stmt::Return(v) => vec![("value".into(), Child::OptExpr(v.as_ref()))],
        Stmt::Assign { targets, value } => vec![
            ("targets".into(), Child::Exprs(targets)),
            ("value".into(), Child::Expr(value)),
        ],
        Stmt::AugAssign { target, value, .. } => vec![
            ("target".into(), Child::Expr(target)),
            ("value".into(), Child::Expr(value)),
        ],
        Stmt::Expr(e) => vec![("value".into(), Child::Expr(e))],
        Stmt::If { test, body, orelse } => vec![
            ("test".into(), Child::Expr(test)),
            ("body".into(), Child::Stmts(body)),
            ("orelse".into(), Child::Stmts(orelse)),
        ],
        Stmt::For { target, iter, body } => vec![
            ("target".into(), Child::Expr(target)),
            ("iter".into(), Child::Expr(iter)),
            ("body".into(), Child::Stmts(body)),
        ],
        Stmt::While { test, body } => vec![
            ("test".into(), Child::Expr(test)),
            ("body".into(), Child::Stmts(body)),
        ],
        _ => Vec::new(),
    }
}

fn expr_shallow(e: &Expr) -> String {
    match e {
        Expr::BoolOp { op, values } => format!("boolop {op} {}", values.len()),
        Expr::BinOp { op, .. } => format!("binop {op:?}"),
        Expr::UnaryOp { op, .. } => format!("unary {op:?}"),
        Expr::Compare { ops, .. } => format!("compare {ops:?}"),
        Expr::Call { keywords, .. } => format!(
            "call [{}]",
            keywords.iter().map(|k| k.arg.as_str()).collect::<Vec<_>>().join(",")
        ),
        Expr::IfExp { .. } => "ifexp".into(),
        Expr::Attribute { attr, .. } => format!("attr {attr}"),
        Expr::Subscript { .. } => "subscript".into(),
        Expr::Slice { lower, upper, step } => {
            format!("slice {} {} {}", lower.is_some(), upper.is_some(), step.is_some())
        }
        Expr::Name(n) => format!("name {n}"),
        Expr::Constant(c) => format!("const {c:?}"),
        Expr::List(_) => "list".into(),
        Expr::Tuple(_) => "tuple".into(),
        Expr::Dict { .. } => "dict".into(),
        Expr::ListComp { generators, .. } => format!(
            "listcomp {:?}",
            generators.iter().map(|g| g.ifs.len()).collect::<Vec<_>>()
        ),
    }
}

fn expr_children(e: &Expr) -> Vec<(String, Child<'_>)> {
    match e {
        Expr::BoolOp { values, .. } => vec![("values".into(), Child::Exprs(values))],
        Expr::BinOp { left, right, .. } => vec![
            ("left".into(), Child::Expr(left)),
            ("right".into(), Child::Expr(right)),
        ],
        Expr::UnaryOp { operand, .. } => vec![("operand".into(), Child::Expr(operand))],
        Expr::Compare {
            left, comparators, ..
        } => vec![
            ("left".into(), Child::Expr(left)),
            ("comparators".into(), Child::Exprs(comparators)),
        ],
        Expr::Call {
            func,
            args,
            keywords,
        } => {
            let mut v = vec![
                ("func".into(), Child::Expr(func.as_ref())),
                ("args".into(), Child::Exprs(args)),
            ];
            for (i, k) in keywords.iter().enumerate() {
                v.push((format!("keywords[{i}].value"), Child::Expr(&k.value)));
            }
            v
        }
        Expr::IfExp { test, body, orelse } => vec![
            ("test".into(), Child::Expr(test)),
            ("body".into(), Child::Expr(body)),
            ("orelse".into(), Child::Expr(orelse)),
        ],
        Expr::Attribute { value, .. } => vec![("value".into(), Child::Expr(value))],
        Expr::Subscript { value, index } => vec![
            ("value".into(), Child::Expr(value)),
            ("slice".into(), Child::Expr(index)),
        ],
        Expr::Slice { lower, upper, step } => vec![
            ("lower".into(), Child::OptExpr(lower.as_deref())),
            ("upper".into(), Child::OptExpr(upper.as_deref())),
            ("step".into(), Child::OptExpr(step.as_deref())),
        ],
        Expr::Name(_) | Expr::Constant(_) => Vec::new(),
        Expr::List(items) | Expr::Tuple(items) => vec![("elts".into(), Child::Exprs(items))],
        Expr::Dict { keys, values } => vec![
            ("keys".into(), Child::Exprs(keys)),
            ("values".into(), Child::Exprs(values)),
        ],
        Expr::ListComp { elt, generators } => {
            let mut v = vec![("elt".into(), Child::Expr(elt.as_ref()))];
            for (i, g) in generators.iter().enumerate() {
                v.push((format!("generators[{i}].target"), Child::Expr(&g.target)));
                v.push((format!("generators[{i}].iter"), Child::Expr(&g.iter)));
                v.push((format!("generators[{i}].ifs"), Child::Exprs(&g.ifs)));
            }
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn cmp(a: &str, b: &str) -> AstDiff {
        ast_equal(&parse(a).unwrap(), &parse(b).unwrap())
    }

    #[test]
    fn whitespace_is_ignored() {
        let d = cmp("x + 0", "x+0");
        assert!(d.equal);
        assert!(d.first_divergence.is_none());
    }

    #[test]
    fn divergence_points_at_assignment_value() {
        let d = cmp("x = 25", "x = 10 + 15");
        assert!(!d.equal);
        let div = d.first_divergence.unwrap();
        assert_eq!(div.path, "body[0].value");
        assert_eq!(div.left, "25");
        assert_eq!(div.right, "10 + 15");
    }

    #[test]
    fn operand_order_is_semantic() {
        let d = cmp("a or b", "b or a");
        assert!(!d.equal);
        assert_eq!(d.first_divergence.unwrap().path, "body[0].value.values[0]");
    }

    #[test]
    fn extra_statement_is_reported() {
        let d = cmp("x = 1\ny = 2", "x = 1");
        let div = d.first_divergence.unwrap();
        assert_eq!(div.path, "body[1]");
        assert_eq!(div.left, "y = 2");
        assert_eq!(div.right, MISSING);
    }

    #[test]
    fn nested_divergence_in_block() {
        let d = cmp("def f(a):\n    return a + 1", "def f(a):\n    return a + 2");
        assert_eq!(d.first_divergence.unwrap().path, "body[0].body[0].value.right");
    }

    #[test]
    fn comments_and_blank_lines_do_not_matter() {
        assert!(cmp("x = 1\n\n\n# note\ny = 2  # trailing\n", "x = 1\ny = 2").equal);
    }

    #[test]
    fn docstrings_participate() {
        assert!(!cmp("def f():\n    'doc'\n    pass", "def f():\n    pass").equal);
    }
}
