use ctt_pyast::visit::{bound_names, expr_reads, rewrite_blocks, rewrite_exprs, walk_stmts};
use ctt_pyast::{Comprehension, Constant, Expr, Stmt};

use super::util::{fill_empty_bodies, fixpoint, method_call_stmt, single_arg_call};

/// `acc = []` directly followed by a loop that only appends to `acc`
/// becomes `acc = [elt for target in iter (if cond)]`. With `conditional`
/// the append must sit under a single `if` without `else`; without it, the
/// append must be the whole loop body.
pub fn list_comprehension(body: Vec<Stmt>, conditional: bool) -> Vec<Stmt> {
    rewrite_blocks(body, &mut |stmts| {
        let mut out: Vec<Stmt> = Vec::with_capacity(stmts.len());
        for s in stmts {
            if let Some(prev) = out.last() {
                if let Some(merged) = fuse_append_loop(prev, &s, conditional) {
                    *out.last_mut().unwrap() = merged;
                    continue;
                }
            }
            out.push(s);
        }
        out
    })
}

fn empty_list_init(s: &Stmt) -> Option<&str> {
    match s {
        Stmt::Assign { targets, value } if targets.len() == 1 => match value {
            Expr::List(items) if items.is_empty() => targets[0].as_name(),
            _ => None,
        },
        _ => None,
    }
}

fn fuse_append_loop(init: &Stmt, lp: &Stmt, conditional: bool) -> Option<Stmt> {
    let acc = empty_list_init(init)?;
    let Stmt::For { target, iter, body } = lp else {
        return None;
    };
    let [only] = body.as_slice() else {
        return None;
    };
    let (elt, ifs) = if conditional {
        match only {
            Stmt::If {
                test,
                body: inner,
                orelse,
            } if orelse.is_empty() && inner.len() == 1 => {
                (method_call_stmt(&inner[0], acc, "append")?, vec![test.clone()])
            }
            _ => return None,
        }
    } else {
        (method_call_stmt(only, acc, "append")?, Vec::new())
    };
    if [iter, elt, target].into_iter().chain(&ifs).any(|e| expr_reads(e, acc)) {
        return None;
    }
    Some(Stmt::Assign {
        targets: vec![Expr::name(acc)],
        value: Expr::ListComp {
            elt: Box::new(elt.clone()),
            generators: vec![Comprehension {
                target: target.clone(),
                iter: iter.clone(),
                ifs,
            }],
        },
    })
}

/// Every loop outside another loop is emitted twice. A loop already followed
/// by an identical copy counts as duplicated, which keeps the rewrite
/// idempotent.
pub fn loop_dupe(body: Vec<Stmt>) -> Vec<Stmt> {
    dupe_block(body)
}

fn dupe_block(stmts: Vec<Stmt>) -> Vec<Stmt> {
    let mut out = Vec::with_capacity(stmts.len() * 2);
    let mut i = 0;
    while i < stmts.len() {
        let s = &stmts[i];
        if s.is_loop() {
            let mut run = 1;
            while i + run < stmts.len() && stmts[i + run] == *s {
                run += 1;
            }
            out.extend(std::iter::repeat_n(s.clone(), if run == 1 { 2 } else { run }));
            i += run;
            continue;
        }
        let mut s = s.clone();
        if matches!(s, Stmt::FunctionDef { .. } | Stmt::If { .. }) {
            for b in s.blocks_mut() {
                let taken = std::mem::take(b);
                *b = dupe_block(taken);
            }
        }
        out.push(s);
        i += 1;
    }
    out
}

const MAX_UNROLL: i64 = 16;

/// `for <name> in range(<k>)` with a literal bound small enough to unroll.
fn unrollable(s: &Stmt) -> Option<(&str, i64, &[Stmt])> {
    let Stmt::For { target, iter, body } = s else {
        return None;
    };
    let var = target.as_name()?;
    let k = match single_arg_call(iter, "range")? {
        Expr::Constant(Constant::Int(k)) if (0..=MAX_UNROLL).contains(k) => *k,
        _ => return None,
    };
    let mut blocked = false;
    walk_stmts(body, &mut |s| {
        blocked |= matches!(s, Stmt::Break | Stmt::Continue | Stmt::FunctionDef { .. })
    });
    if blocked || bound_names(body).contains(var) {
        return None;
    }
    Some((var, k, body))
}

fn substitute(body: &[Stmt], var: &str, value: i64) -> Vec<Stmt> {
    let mut copy = body.to_vec();
    rewrite_exprs(&mut copy, &mut |e| match e {
        Expr::Name(ref n) if n == var => Expr::int(value),
        other => other,
    });
    copy
}

pub fn loop_unroll(body: Vec<Stmt>) -> Vec<Stmt> {
    let mut body = fixpoint(body, |body| {
        rewrite_blocks(body, &mut |stmts| {
            let mut out = Vec::with_capacity(stmts.len());
            for s in stmts {
                match unrollable(&s) {
                    Some((var, k, inner)) => {
                        for i in 0..k {
                            out.extend(substitute(inner, var, i));
                        }
                    }
                    None => out.push(s),
                }
            }
            out
        })
    });
    fill_empty_bodies(&mut body);
    body
}
