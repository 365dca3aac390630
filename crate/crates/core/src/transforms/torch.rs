use ctt_pyast::visit::rewrite_blocks;
use ctt_pyast::{BinOp, Constant, Expr, Stmt};

use super::util::{ensure_torch_import, method_call_stmt, name_index, range_len_of};

fn torch_call(func: &str, a: &str, b: &str) -> Expr {
    Expr::call(
        Expr::attr(Expr::name("torch"), func),
        vec![Expr::name(a), Expr::name(b)],
    )
}

/// `a[i] <op> b[i]`, returning `(a, b)`.
fn elementwise<'a>(e: &'a Expr, op: BinOp, index: &str) -> Option<(&'a str, &'a str)> {
    let Expr::BinOp { left, op: o, right } = e else {
        return None;
    };
    if *o != op {
        return None;
    }
    let (a, i) = name_index(left)?;
    let (b, j) = name_index(right)?;
    (i == index && j == index).then_some((a, b))
}

/// `for i in range(len(a)): <body>` returning `(i, a, body)`.
fn indexed_loop(s: &Stmt) -> Option<(&str, &str, &[Stmt])> {
    let Stmt::For { target, iter, body } = s else {
        return None;
    };
    Some((target.as_name()?, range_len_of(iter)?, body))
}

/// Rewrites adjacent statement pairs wherever `fuse` matches, adding the
/// torch import when anything changed.
fn fuse_pairs(body: Vec<Stmt>, fuse: &dyn Fn(&Stmt, &Stmt) -> Option<Stmt>) -> Vec<Stmt> {
    let mut changed = false;
    let mut body = rewrite_blocks(body, &mut |stmts| {
        let mut out: Vec<Stmt> = Vec::with_capacity(stmts.len());
        for s in stmts {
            if let Some(merged) = out.last().and_then(|prev| fuse(prev, &s)) {
                *out.last_mut().unwrap() = merged;
                changed = true;
                continue;
            }
            out.push(s);
        }
        out
    });
    if changed {
        ensure_torch_import(&mut body);
    }
    body
}

fn assigned_name(s: &Stmt) -> Option<(&str, &Expr)> {
    match s {
        Stmt::Assign { targets, value } if targets.len() == 1 => Some((targets[0].as_name()?, value)),
        _ => None,
    }
}

fn distinct(names: &[&str]) -> bool {
    names.iter().enumerate().all(|(k, n)| !names[..k].contains(n))
}

pub fn dot_product(body: Vec<Stmt>) -> Vec<Stmt> {
    fuse_pairs(body, &|init, lp| {
        let (s, zero) = assigned_name(init)?;
        if !matches!(zero, Expr::Constant(Constant::Int(0))) && *zero != Expr::Constant(Constant::Float(0.0)) {
            return None;
        }
        let (i, a, body) = indexed_loop(lp)?;
        let [Stmt::AugAssign {
            target,
            op: BinOp::Add,
            value,
        }] = body
        else {
            return None;
        };
        if target.as_name() != Some(s) {
            return None;
        }
        let (x, y) = elementwise(value, BinOp::Mult, i)?;
        if x != a || !distinct(&[s, i, a]) || !distinct(&[s, i, y]) {
            return None;
        }
        Some(Stmt::Assign {
            targets: vec![Expr::name(s)],
            value: torch_call("dot", x, y),
        })
    })
}

pub fn pointwise_add(body: Vec<Stmt>) -> Vec<Stmt> {
    fuse_pairs(body, &|init, lp| {
        let (c, value) = assigned_name(init)?;
        let (i, a, body) = indexed_loop(lp)?;
        let [only] = body else {
            return None;
        };
        let sum = match value {
            // c = [0] * len(a) with c[i] = a[i] + b[i]
            Expr::BinOp {
                left,
                op: BinOp::Mult,
                right,
            } if **left == Expr::List(vec![Expr::int(0)])
                && super::util::single_arg_call(right, "len").and_then(Expr::as_name) == Some(a) =>
            {
                let Stmt::Assign { targets, value } = only else {
                    return None;
                };
                if targets.len() != 1 || name_index(&targets[0]) != Some((c, i)) {
                    return None;
                }
                value
            }
            // c = [] with c.append(a[i] + b[i])
            Expr::List(items) if items.is_empty() => method_call_stmt(only, c, "append")?,
            _ => return None,
        };
        let (x, y) = elementwise(sum, BinOp::Add, i)?;
        if x != a || !distinct(&[c, i, a]) || !distinct(&[c, i, y]) {
            return None;
        }
        Some(Stmt::Assign {
            targets: vec![Expr::name(c)],
            value: torch_call("add", x, y),
        })
    })
}

fn zero_grad_receiver(s: &Stmt) -> Option<&Expr> {
    match s {
        Stmt::Expr(Expr::Call {
            func,
            args,
            keywords,
        }) if args.is_empty() && keywords.is_empty() => match func.as_ref() {
            Expr::Attribute { value, attr } if attr == "zero_grad" => Some(value),
            _ => None,
        },
        _ => None,
    }
}

pub fn zero_grad(body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_blocks(body, &mut |stmts| {
        stmts
            .into_iter()
            .map(|s| match zero_grad_receiver(&s) {
                Some(model) => Stmt::For {
                    target: Expr::name("p"),
                    iter: Expr::call(Expr::attr(model.clone(), "parameters"), Vec::new()),
                    body: vec![Stmt::Assign {
                        targets: vec![Expr::attr(Expr::name("p"), "grad")],
                        value: Expr::none(),
                    }],
                },
                None => s,
            })
            .collect()
    })
}
