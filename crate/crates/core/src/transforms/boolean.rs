use ctt_pyast::visit::{rewrite_blocks, rewrite_exprs};
use ctt_pyast::{BoolOp, Expr, Stmt, UnaryOp};

pub fn collapse_nested_ifs(body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_blocks(body, &mut |stmts| {
        stmts
            .into_iter()
            .map(|s| match s {
                Stmt::If { test, mut body, orelse }
                    if orelse.is_empty()
                        && body.len() == 1
                        && matches!(&body[0], Stmt::If { orelse, .. } if orelse.is_empty()) =>
                {
                    let Some(Stmt::If { test: inner, body: inner_body, .. }) = body.pop() else {
                        unreachable!()
                    };
                    Stmt::If {
                        test: Expr::bool_op(BoolOp::And, vec![test, inner]),
                        body: inner_body,
                        orelse: Vec::new(),
                    }
                }
                other => other,
            })
            .collect()
    })
}

fn push_not_inward(e: Expr) -> Expr {
    match e {
        Expr::UnaryOp {
            op: UnaryOp::Not,
            operand,
        } => match *operand {
            Expr::BoolOp {
                op: BoolOp::And,
                values,
            } => Expr::bool_op(
                BoolOp::Or,
                values.into_iter().map(|v| push_not_inward(Expr::negate(v))).collect(),
            ),
            other => Expr::negate(other),
        },
        other => other,
    }
}

pub fn de_morgan(mut body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_exprs(&mut body, &mut push_not_inward);
    body
}

pub fn reorder_conditional(body: Vec<Stmt>) -> Vec<Stmt> {
    rewrite_blocks(body, &mut |stmts| {
        stmts
            .into_iter()
            .map(|s| {
                let Stmt::If {
                    mut test,
                    mut body,
                    mut orelse,
                } = s
                else {
                    return s;
                };
                while !orelse.is_empty() {
                    match test {
                        Expr::UnaryOp {
                            op: UnaryOp::Not,
                            operand,
                        } => {
                            test = *operand;
                            std::mem::swap(&mut body, &mut orelse);
                        }
                        other => {
                            test = other;
                            break;
                        }
                    }
                }
                Stmt::If { test, body, orelse }
            })
            .collect()
    })
}
