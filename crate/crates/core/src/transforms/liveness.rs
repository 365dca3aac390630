use std::collections::BTreeSet;

use ctt_pyast::visit::{loaded_names, rewrite_blocks, target_names, walk_stmts, walk_stmts_exprs};
use ctt_pyast::{BoolOp, CmpOp, Constant, Expr, Stmt, UnaryOp};

use super::util::{fill_empty_bodies, fixpoint, is_pure};

/// Truth value of a condition built only from literals, if it is known
/// without running anything.
fn static_truth(e: &Expr) -> Option<bool> {
    if let Some(v) = e.as_int_literal() {
        return Some(v != 0);
    }
    match e {
        Expr::Constant(c) => Some(match c {
            Constant::None => false,
            Constant::Bool(b) => *b,
            Constant::Int(v) => *v != 0,
            Constant::Float(f) => *f != 0.0,
            Constant::Str(s) => !s.is_empty(),
            Constant::Ellipsis => true,
        }),
        Expr::UnaryOp {
            op: UnaryOp::Not,
            operand,
        } => static_truth(operand).map(|b| !b),
        Expr::BoolOp { op, values } => {
            // short-circuit: operands after the deciding one never run
            let decisive = *op == BoolOp::Or;
            for v in values {
                if static_truth(v)? == decisive {
                    return Some(decisive);
                }
            }
            Some(!decisive)
        }
        Expr::Compare {
            left,
            ops,
            comparators,
        } => {
            let mut l = left.as_int_literal()?;
            for (op, c) in ops.iter().zip(comparators) {
                let r = c.as_int_literal()?;
                let holds = match op {
                    CmpOp::Eq => l == r,
                    CmpOp::NotEq => l != r,
                    CmpOp::Lt => l < r,
                    CmpOp::LtE => l <= r,
                    CmpOp::Gt => l > r,
                    CmpOp::GtE => l >= r,
                    _ => return None,
                };
                if !holds {
                    return Some(false);
                }
                l = r;
            }
            Some(true)
        }
        _ => None,
    }
}

pub fn dead_code_elim(body: Vec<Stmt>) -> Vec<Stmt> {
    let mut body = rewrite_blocks(body, &mut |stmts| {
        let mut out = Vec::with_capacity(stmts.len());
        for s in stmts {
            match s {
                Stmt::If { test, orelse, .. } if static_truth(&test) == Some(false) => {
                    out.extend(orelse)
                }
                other => out.push(other),
            }
        }
        out
    });
    fill_empty_bodies(&mut body);
    body
}

fn is_empty_function(body: &[Stmt]) -> bool {
    body.iter().all(|s| {
        matches!(
            s,
            Stmt::Pass | Stmt::Expr(Expr::Constant(Constant::Str(_) | Constant::Ellipsis))
        )
    })
}

/// `name(<pure args>)` as a whole statement.
fn is_discardable_call(s: &Stmt, name: &str) -> bool {
    match s {
        Stmt::Expr(Expr::Call {
            func,
            args,
            keywords,
        }) => {
            func.as_name() == Some(name)
                && args.iter().all(is_pure)
                && keywords.iter().all(|k| is_pure(&k.value))
        }
        _ => false,
    }
}

/// Every binding of `name` anywhere in the module, counting definitions.
fn binding_count(body: &[Stmt], name: &str) -> usize {
    let mut n = 0;
    let mut bump = |set: &BTreeSet<String>| n += usize::from(set.contains(name));
    walk_stmts(body, &mut |s| {
        let mut set = BTreeSet::new();
        match s {
            Stmt::FunctionDef { name: f, params, .. } => {
                set.insert(f.clone());
                bump(&set);
                set = params.iter().map(|p| p.name.clone()).collect();
            }
            Stmt::Assign { targets, .. } => targets.iter().for_each(|t| target_names(t, &mut set)),
            Stmt::AugAssign { target, .. } | Stmt::For { target, .. } => target_names(target, &mut set),
            Stmt::Import(names) | Stmt::ImportFrom { names, .. } => {
                for a in names {
                    set.insert(a.asname.clone().unwrap_or_else(|| a.name.split('.').next().unwrap_or_default().to_string()));
                }
            }
            _ => {}
        }
        bump(&set);
    });
    walk_stmts_exprs(body, &mut |e| {
        if let Expr::ListComp { generators, .. } = e {
            let mut set = BTreeSet::new();
            generators.iter().for_each(|g| target_names(&g.target, &mut set));
            bump(&set);
        }
    });
    n
}

fn name_uses(body: &[Stmt], name: &str) -> usize {
    let mut n = 0;
    walk_stmts_exprs(body, &mut |e| {
        if e.as_name() == Some(name) {
            n += 1;
        }
    });
    n
}

fn discardable_calls(body: &[Stmt], name: &str) -> usize {
    let mut n = 0;
    walk_stmts(body, &mut |s| n += usize::from(is_discardable_call(s, name)));
    n
}

fn drop_calls(body: Vec<Stmt>, name: &str) -> Vec<Stmt> {
    rewrite_blocks(body, &mut |stmts| {
        stmts.into_iter().filter(|s| !is_discardable_call(s, name)).collect()
    })
}

pub fn redundant_fn_elim(body: Vec<Stmt>) -> Vec<Stmt> {
    let mut body = fixpoint(body, |body| {
        let victim = body.iter().find_map(|s| match s {
            Stmt::FunctionDef { name, body: fbody, .. }
                if is_empty_function(fbody)
                    && binding_count(&body, name) == 1
                    && name_uses(&body, name) == discardable_calls(&body, name) =>
            {
                Some(name.clone())
            }
            _ => None,
        });
        match victim {
            Some(name) => {
                let body: Vec<Stmt> = body
                    .into_iter()
                    .filter(|s| !matches!(s, Stmt::FunctionDef { name: n, .. } if *n == name))
                    .collect();
                drop_calls(body, &name)
            }
            None => body,
        }
    });
    fill_empty_bodies(&mut body);
    body
}

/// Drops pure assignments to names missing from `reads`. Each function body
/// is checked against the names read within that function.
fn remove_unused_in_scope(stmts: Vec<Stmt>, reads: &BTreeSet<String>) -> Vec<Stmt> {
    stmts
        .into_iter()
        .filter_map(|s| match s {
            Stmt::Assign { ref targets, ref value }
                if targets.len() == 1
                    && matches!(&targets[0], Expr::Name(n) if !reads.contains(n))
                    && is_pure(value) =>
            {
                None
            }
            Stmt::FunctionDef { name, params, body } => {
                let inner = loaded_names(&body);
                Some(Stmt::FunctionDef {
                    name,
                    params,
                    body: remove_unused_in_scope(body, &inner),
                })
            }
            mut other => {
                for b in other.blocks_mut() {
                    let taken = std::mem::take(b);
                    *b = remove_unused_in_scope(taken, reads);
                }
                Some(other)
            }
        })
        .collect()
}

pub fn unused_var_elim(body: Vec<Stmt>) -> Vec<Stmt> {
    let mut body = fixpoint(body, |body| {
        let reads = loaded_names(&body);
        remove_unused_in_scope(body, &reads)
    });
    fill_empty_bodies(&mut body);
    body
}
