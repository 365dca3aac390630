use ctt_pyast::visit::expr_any;
use ctt_pyast::{Alias, Constant, Expr, Stmt};

/// Side-effect free expression: literals, names and operators over them.
pub fn is_pure(e: &Expr) -> bool {
    !expr_any(e, &mut |x| {
        !matches!(
            x,
            Expr::Constant(_)
                | Expr::Name(_)
                | Expr::BinOp { .. }
                | Expr::UnaryOp { .. }
                | Expr::BoolOp { .. }
                | Expr::Compare { .. }
                | Expr::IfExp { .. }
                | Expr::List(_)
                | Expr::Tuple(_)
                | Expr::Dict { .. }
        )
    })
}

/// Puts `pass` into every statement body left empty by a rewrite. An empty
/// `else` block simply means there is no `else`.
pub fn fill_empty_bodies(stmts: &mut [Stmt]) {
    for s in stmts {
        match s {
            Stmt::FunctionDef { body, .. } | Stmt::For { body, .. } | Stmt::While { body, .. } => {
                if body.is_empty() {
                    body.push(Stmt::Pass);
                }
                fill_empty_bodies(body);
            }
            Stmt::If { body, orelse, .. } => {
                if body.is_empty() {
                    body.push(Stmt::Pass);
                }
                fill_empty_bodies(body);
                fill_empty_bodies(orelse);
            }
            _ => {}
        }
    }
}

/// Runs `step` until the statement list stops changing.
pub fn fixpoint(mut body: Vec<Stmt>, step: impl Fn(Vec<Stmt>) -> Vec<Stmt>) -> Vec<Stmt> {
    loop {
        let next = step(body.clone());
        if next == body {
            return next;
        }
        body = next;
    }
}

pub fn is_docstring(s: &Stmt) -> bool {
    matches!(s, Stmt::Expr(Expr::Constant(Constant::Str(_))))
}

/// Adds `import torch` after the module docstring unless the module already
/// has a top-level `import torch`.
pub fn ensure_torch_import(body: &mut Vec<Stmt>) {
    let present = body.iter().any(|s| {
        matches!(s, Stmt::Import(names)
            if names.iter().any(|a| a.name == "torch" && a.asname.is_none()))
    });
    if present {
        return;
    }
    let at = usize::from(body.first().is_some_and(is_docstring));
    body.insert(
        at,
        Stmt::Import(vec![Alias {
            name: "torch".into(),
            asname: None,
        }]),
    );
}

/// `range(len(<name>))`, returning the name.
pub fn range_len_of(e: &Expr) -> Option<&str> {
    let arg = single_arg_call(e, "range")?;
    single_arg_call(arg, "len")?.as_name()
}

/// The only argument of `fname(arg)`.
pub fn single_arg_call<'a>(e: &'a Expr, fname: &str) -> Option<&'a Expr> {
    match e {
        Expr::Call {
            func,
            args,
            keywords,
        } if keywords.is_empty() && args.len() == 1 && func.as_name() == Some(fname) => Some(&args[0]),
        _ => None,
    }
}

/// `<name>[<index>]` with both parts plain names.
pub fn name_index(e: &Expr) -> Option<(&str, &str)> {
    match e {
        Expr::Subscript { value, index } => Some((value.as_name()?, index.as_name()?)),
        _ => None,
    }
}

/// `<recv>.<method>(<arg>)` as an expression statement with one positional argument.
pub fn method_call_stmt<'a>(s: &'a Stmt, recv: &str, method: &str) -> Option<&'a Expr> {
    match s {
        Stmt::Expr(Expr::Call {
            func,
            args,
            keywords,
        }) if keywords.is_empty() && args.len() == 1 => match func.as_ref() {
            Expr::Attribute { value, attr } if attr == method && value.as_name() == Some(recv) => {
                Some(&args[0])
            }
            _ => None,
        },
        _ => None,
    }
}
