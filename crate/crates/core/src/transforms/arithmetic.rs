use ctt_pyast::interp::{floor_div, py_mod};
use ctt_pyast::visit::rewrite_exprs;
use ctt_pyast::{BinOp, Expr, Stmt, UnaryOp};

pub fn add_sub_zero(mut body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_exprs(&mut body, &mut |e| match e {
        Expr::BinOp {
            left,
            op: BinOp::Add | BinOp::Sub,
            right,
        } if right.is_int(0) => *left,
        other => other,
    });
    body
}

pub fn div_mul_one(mut body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_exprs(&mut body, &mut |e| match e {
        Expr::BinOp {
            left,
            op: BinOp::Mult | BinOp::Div,
            right,
        } if right.is_int(1) => *left,
        other => other,
    });
    body
}

fn fold_binop(a: i64, op: BinOp, b: i64) -> Option<i64> {
    match op {
        BinOp::Add => a.checked_add(b),
        BinOp::Sub => a.checked_sub(b),
        BinOp::Mult => a.checked_mul(b),
        BinOp::FloorDiv => floor_div(a, b),
        BinOp::Mod => py_mod(a, b),
        BinOp::Pow => a.checked_pow(u32::try_from(b).ok()?),
        _ => None,
    }
}

/// Post-order folding, so a single pass already reaches the fixpoint.
pub fn constant_folding(mut body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_exprs(&mut body, &mut |e| {
        let folded = match &e {
            Expr::BinOp { left, op, right } => match (left.as_int_literal(), right.as_int_literal()) {
                (Some(a), Some(b)) => fold_binop(a, *op, b),
                _ => None,
            },
            Expr::UnaryOp { op, operand } => match (op, operand.as_ref()) {
                // `-5` is already a literal; `-(-5)` is not
                (UnaryOp::USub, inner @ Expr::UnaryOp { .. }) => {
                    inner.as_int_literal().and_then(i64::checked_neg)
                }
                (UnaryOp::UAdd, inner) => inner.as_int_literal(),
                (UnaryOp::Invert, inner) => inner.as_int_literal().map(|v| !v),
                _ => None,
            },
            _ => None,
        };
        match folded {
            // i64::MIN has no canonical literal form
            Some(v) if v != i64::MIN => Expr::int_literal(v),
            _ => e,
        }
    });
    body
}
