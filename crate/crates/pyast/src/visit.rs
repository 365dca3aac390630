//! Traversal helpers shared by tree rewrites.

use std::collections::BTreeSet;

use crate::ast::*;

#[allow(clippy::boxed_local)]
fn map_box(b: Box<Expr>, f: &mut dyn FnMut(Expr) -> Expr) -> Box<Expr> {
    Box::new(f(*b))
}

fn map_vec(v: Vec<Expr>, f: &mut dyn FnMut(Expr) -> Expr) -> Vec<Expr> {
    v.into_iter().map(f).collect()
}

impl Expr {
    /// Applies `f` to each direct child expression.
    pub fn map_children(self, f: &mut dyn FnMut(Expr) -> Expr) -> Expr {
        match self {
            Expr::BoolOp { op, values } => Expr::BoolOp {
                op,
                values: map_vec(values, f),
            },
            Expr::BinOp { left, op, right } => {
                let left = map_box(left, f);
                Expr::BinOp {
                    left,
                    op,
                    right: map_box(right, f),
                }
            }
            Expr::UnaryOp { op, operand } => Expr::UnaryOp {
                op,
                operand: map_box(operand, f),
            },
            Expr::Compare {
                left,
                ops,
                comparators,
            } => {
                let left = map_box(left, f);
                Expr::Compare {
                    left,
                    ops,
                    comparators: map_vec(comparators, f),
                }
            }
            Expr::Call {
                func,
                args,
                keywords,
            } => {
                let func = map_box(func, f);
                let args = map_vec(args, f);
                let keywords = keywords
                    .into_iter()
                    .map(|k| Keyword {
                        arg: k.arg,
                        value: f(k.value),
                    })
                    .collect();
                Expr::Call {
                    func,
                    args,
                    keywords,
                }
            }
            Expr::IfExp { test, body, orelse } => {
                let test = map_box(test, f);
                let body = map_box(body, f);
                Expr::IfExp {
                    test,
                    body,
                    orelse: map_box(orelse, f),
                }
            }
            Expr::Attribute { value, attr } => Expr::Attribute {
                value: map_box(value, f),
                attr,
            },
            Expr::Subscript { value, index } => {
                let value = map_box(value, f);
                Expr::Subscript {
                    value,
                    index: map_box(index, f),
                }
            }
            Expr::Slice { lower, upper, step } => {
                let lower = lower.map(|b| map_box(b, f));
                let upper = upper.map(|b| map_box(b, f));
                Expr::Slice {
                    lower,
                    upper,
                    step: step.map(|b| map_box(b, f)),
                }
            }
            e @ (Expr::Name(_) | Expr::Constant(_)) => e,
            Expr::List(items) => Expr::List(map_vec(items, f)),
            Expr::Tuple(items) => Expr::Tuple(map_vec(items, f)),
            Expr::Dict { keys, values } => {
                let keys = map_vec(keys, f);
                Expr::Dict {
                    keys,
                    values: map_vec(values, f),
                }
            }
            Expr::ListComp { elt, generators } => {
                let elt = map_box(elt, f);
                let generators = generators
                    .into_iter()
                    .map(|g| {
                        let target = f(g.target);
                        let iter = f(g.iter);
                        Comprehension {
                            target,
                            iter,
                            ifs: map_vec(g.ifs, f),
                        }
                    })
                    .collect();
                Expr::ListComp { elt, generators }
            }
        }
    }

    /// Visits each direct child expression.
    pub fn for_each_child<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        match self {
            Expr::BoolOp { values, .. } => values.iter().for_each(f),
            Expr::BinOp { left, right, .. } => {
                f(left);
                f(right);
            }
            Expr::UnaryOp { operand, .. } => f(operand),
            Expr::Compare {
                left, comparators, ..
            } => {
                f(left);
                comparators.iter().for_each(f);
            }
            Expr::Call {
                func,
                args,
                keywords,
            } => {
                f(func);
                args.iter().for_each(&mut *f);
                keywords.iter().for_each(|k| f(&k.value));
            }
            Expr::IfExp { test, body, orelse } => {
                f(test);
                f(body);
                f(orelse);
            }
            Expr::Attribute { value, .. } => f(value),
            Expr::Subscript { value, index } => {
                f(value);
                f(index);
            }
            Expr::Slice { lower, upper, step } => {
                for b in [lower, upper, step].into_iter().flatten() {
                    f(b);
                }
            }
            Expr::Name(_) | Expr::Constant(_) => {}
            Expr::List(items) | Expr::Tuple(items) => items.iter().for_each(f),
            Expr::Dict { keys, values } => {
                keys.iter().for_each(&mut *f);
                values.iter().for_each(f);
            }
            Expr::ListComp { elt, generators } => {
                f(elt);
                for g in generators {
                    f(&g.target);
                    f(&g.iter);
                    g.ifs.iter().for_each(&mut *f);
                }
            }
        }
    }
}

/// Post-order rewrite of one expression tree.
pub fn rewrite_expr(e: Expr, f: &mut dyn FnMut(Expr) -> Expr) -> Expr {
    let e = e.map_children(&mut |c| rewrite_expr(c, f));
    f(e)
}

/// Pre-order walk of one expression tree.
pub fn walk_expr<'a>(e: &'a Expr, f: &mut dyn FnMut(&'a Expr)) {
    f(e);
    e.for_each_child(&mut |c| walk_expr(c, f));
}

/// Applies a post-order expression rewrite to every expression in `stmts`,
/// including assignment targets and parameter defaults.
pub fn rewrite_exprs(stmts: &mut [Stmt], f: &mut dyn FnMut(Expr) -> Expr) {
    for s in stmts.iter_mut() {
        let placeholder = Expr::Constant(Constant::None);
        let mut go = |e: &mut Expr| {
            let old = std::mem::replace(e, placeholder.clone());
            *e = rewrite_expr(old, f);
        };
        match s {
            Stmt::FunctionDef { params, body, .. } => {
                for p in params.iter_mut() {
                    if let Some(d) = p.default.as_mut() {
                        go(d);
                    }
                }
                rewrite_exprs(body, f);
            }
            Stmt::Return(Some(v)) => go(v),
            Stmt::Assign { targets, value } => {
                targets.iter_mut().for_each(&mut go);
                go(value);
            }
            Stmt::AugAssign { target, value, .. } => {
                go(target);
                go(value);
            }
            Stmt::Expr(e) => go(e),
            Stmt::If { test, body, orelse } => {
                go(test);
                rewrite_exprs(body, f);
                rewrite_exprs(orelse, f);
            }
            Stmt::For { target, iter, body } => {
                go(target);
                go(iter);
                rewrite_exprs(body, f);
            }
            Stmt::While { test, body } => {
                go(test);
                rewrite_exprs(body, f);
            }
            _ => {}
        }
    }
}

/// Expressions held directly by a statement (not by nested blocks).
pub fn stmt_exprs(s: &Stmt) -> Vec<&Expr> {
    match s {
        Stmt::FunctionDef { params, .. } => params.iter().filter_map(|p| p.default.as_ref()).collect(),
        Stmt::Return(v) => v.iter().collect(),
        Stmt::Assign { targets, value } => targets.iter().chain(std::iter::once(value)).collect(),
        Stmt::AugAssign { target, value, .. } => vec![target, value],
        Stmt::Expr(e) => vec![e],
        Stmt::If { test, .. } | Stmt::While { test, .. } => vec![test],
        Stmt::For { target, iter, .. } => vec![target, iter],
        _ => Vec::new(),
    }
}

/// Pre-order walk over every expression node in `stmts`, nested blocks included.
pub fn walk_stmts_exprs<'a>(stmts: &'a [Stmt], f: &mut dyn FnMut(&'a Expr)) {
    for s in stmts {
        for e in stmt_exprs(s) {
            walk_expr(e, f);
        }
        for b in s.blocks() {
            walk_stmts_exprs(b, f);
        }
    }
}

/// Pre-order walk over every statement, nested blocks included.
pub fn walk_stmts<'a>(stmts: &'a [Stmt], f: &mut dyn FnMut(&'a Stmt)) {
    for s in stmts {
        f(s);
        for b in s.blocks() {
            walk_stmts(b, f);
        }
    }
}

/// Post-order rewrite of every statement list: nested blocks are rewritten
/// before the list that contains them.
pub fn rewrite_blocks(stmts: Vec<Stmt>, f: &mut dyn FnMut(Vec<Stmt>) -> Vec<Stmt>) -> Vec<Stmt> {
    let stmts = stmts
        .into_iter()
        .map(|mut s| {
            for b in s.blocks_mut() {
                let inner = std::mem::take(b);
                *b = rewrite_blocks(inner, f);
            }
            s
        })
        .collect();
    f(stmts)
}

/// Names read anywhere in `stmts`, nested functions included. Augmented
/// assignment targets count as reads.
pub fn loaded_names(stmts: &[Stmt]) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    collect_loads_stmts(stmts, &mut out);
    out
}

fn collect_loads_stmts(stmts: &[Stmt], out: &mut BTreeSet<String>) {
    for s in stmts {
        match s {
            Stmt::Assign { targets, value } => {
                targets.iter().for_each(|t| collect_target_loads(t, out));
                collect_loads_expr(value, out);
            }
            Stmt::AugAssign { target, value, .. } => {
                collect_loads_expr(target, out);
                collect_loads_expr(value, out);
            }
            Stmt::For { target, iter, body } => {
                collect_target_loads(target, out);
                collect_loads_expr(iter, out);
                collect_loads_stmts(body, out);
            }
            other => {
                for e in stmt_exprs(other) {
                    collect_loads_expr(e, out);
                }
                for b in other.blocks() {
                    collect_loads_stmts(b, out);
                }
            }
        }
    }
}

/// Names read by a store target: `a[i] = v` reads `a` and `i`, `x = v` reads nothing.
fn collect_target_loads(t: &Expr, out: &mut BTreeSet<String>) {
    match t {
        Expr::Name(_) => {}
        Expr::Tuple(items) | Expr::List(items) => items.iter().for_each(|i| collect_target_loads(i, out)),
        other => collect_loads_expr(other, out),
    }
}

fn collect_loads_expr(e: &Expr, out: &mut BTreeSet<String>) {
    match e {
        Expr::Name(n) => {
            out.insert(n.clone());
        }
        Expr::ListComp { elt, generators } => {
            collect_loads_expr(elt, out);
            for g in generators {
                collect_target_loads(&g.target, out);
                collect_loads_expr(&g.iter, out);
                g.ifs.iter().for_each(|c| collect_loads_expr(c, out));
            }
        }
        other => other.for_each_child(&mut |c| collect_loads_expr(c, out)),
    }
}

/// Names bound by a store target.
pub fn target_names(t: &Expr, out: &mut BTreeSet<String>) {
    match t {
        Expr::Name(n) => {
            out.insert(n.clone());
        }
        Expr::Tuple(items) | Expr::List(items) => items.iter().for_each(|i| target_names(i, out)),
        _ => {}
    }
}

/// Names bound anywhere in `stmts`: assignment and loop targets, function
/// names and parameters, comprehension variables, imports.
pub fn bound_names(stmts: &[Stmt]) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    walk_stmts(stmts, &mut |s| match s {
        Stmt::FunctionDef { name, params, .. } => {
            out.insert(name.clone());
            out.extend(params.iter().map(|p| p.name.clone()));
        }
        Stmt::Assign { targets, .. } => targets.iter().for_each(|t| target_names(t, &mut out)),
        Stmt::AugAssign { target, .. } => target_names(target, &mut out),
        Stmt::For { target, .. } => target_names(target, &mut out),
        Stmt::Import(names) | Stmt::ImportFrom { names, .. } => {
            for a in names {
                let bound = a.asname.clone().unwrap_or_else(|| a.name.split('.').next().unwrap().to_string());
                out.insert(bound);
            }
        }
        _ => {}
    });
    walk_stmts_exprs(stmts, &mut |e| {
        if let Expr::ListComp { generators, .. } = e {
            for g in generators {
                target_names(&g.target, &mut out);
            }
        }
    });
    out
}

/// Whether any expression in `e` satisfies `pred`.
pub fn expr_any(e: &Expr, pred: &mut dyn FnMut(&Expr) -> bool) -> bool {
    let mut found = false;
    walk_expr(e, &mut |x| {
        if !found && pred(x) {
            found = true;
        }
    });
    found
}

/// Whether `e` reads the name `id`.
pub fn expr_reads(e: &Expr, id: &str) -> bool {
    expr_any(e, &mut |x| matches!(x, Expr::Name(n) if n == id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn loaded_names_skip_plain_store_targets() {
        let m = parse("x = y\na[i] = z\nw += 1\nfor k in r:\n    pass\n").unwrap();
        let names: Vec<_> = loaded_names(&m.body).into_iter().collect();
        assert_eq!(names, vec!["a", "i", "r", "w", "y", "z"]);
    }

    #[test]
    fn bound_names_cover_all_binding_forms() {
        let m = parse("import numpy as np\ndef f(a, b=1):\n    c = [d for d in a]\n    for e, g in a:\n        pass\n").unwrap();
        let names: Vec<_> = bound_names(&m.body).into_iter().collect();
        assert_eq!(names, vec!["a", "b", "c", "d", "e", "f", "g", "np"]);
    }

    #[test]
    fn rewrite_blocks_is_post_order() {
        let m = parse("if a:\n    if b:\n        x\n").unwrap();
        let mut sizes = Vec::new();
        rewrite_blocks(m.body, &mut |b| {
            sizes.push(b.len());
            b
        });
        // innermost body, empty orelse, middle body, empty orelse, module
        assert_eq!(sizes, vec![1, 0, 1, 0, 1]);
    }
}
