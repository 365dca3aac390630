use ctt_pyast::*;
use proptest::prelude::*;

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["a", "b", "xs", "total", "f", "item", "n"]).prop_map(String::from)
}

fn constant() -> impl Strategy<Value = Expr> {
    prop_oneof![
        Just(Constant::None),
        any::<bool>().prop_map(Constant::Bool),
        (0i64..=i64::MAX).prop_map(Constant::Int),
        prop::sample::select(vec![0.0, 0.5, 1.0, 2.5, 1e-7, 1e16, 123456.789, f64::INFINITY])
            .prop_map(Constant::Float),
        "[a-z \\\\'\"\n\té]{0,6}".prop_map(Constant::Str),
    ]
    .prop_map(Expr::Constant)
}

fn binop() -> impl Strategy<Value = BinOp> {
    prop::sample::select(vec![
        BinOp::Add,
        BinOp::Sub,
        BinOp::Mult,
        BinOp::Div,
        BinOp::FloorDiv,
        BinOp::Mod,
        BinOp::Pow,
        BinOp::LShift,
        BinOp::BitOr,
        BinOp::BitXor,
        BinOp::BitAnd,
    ])
}

fn cmpop() -> impl Strategy<Value = CmpOp> {
    prop::sample::select(vec![
        CmpOp::Eq,
        CmpOp::NotEq,
        CmpOp::Lt,
        CmpOp::GtE,
        CmpOp::Is,
        CmpOp::IsNot,
        CmpOp::In,
        CmpOp::NotIn,
    ])
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![name().prop_map(Expr::Name), constant()];
    leaf.prop_recursive(4, 48, 4, |inner| {
        let opt = prop::option::of(inner.clone().prop_map(Box::new));
        prop_oneof![
            (inner.clone(), binop(), inner.clone()).prop_map(|(l, op, r)| Expr::binop(l, op, r)),
            (
                prop::sample::select(vec![UnaryOp::Not, UnaryOp::USub, UnaryOp::UAdd, UnaryOp::Invert]),
                inner.clone()
            )
                .prop_map(|(op, e)| Expr::unary(op, e)),
            (any::<bool>(), prop::collection::vec(inner.clone(), 2..4)).prop_map(|(and, values)| {
                Expr::BoolOp {
                    op: if and { BoolOp::And } else { BoolOp::Or },
                    values,
                }
            }),
            (inner.clone(), prop::collection::vec((cmpop(), inner.clone()), 1..3)).prop_map(
                |(l, rest)| {
                    let (ops, comparators) = rest.into_iter().unzip();
                    Expr::Compare {
                        left: Box::new(l),
                        ops,
                        comparators,
                    }
                }
            ),
            (
                inner.clone(),
                prop::collection::vec(inner.clone(), 0..3),
                prop::option::of(inner.clone())
            )
                .prop_map(|(f, args, kw)| Expr::Call {
                    func: Box::new(f),
                    args,
                    keywords: kw
                        .map(|v| vec![Keyword {
                            arg: "key".into(),
                            value: v
                        }])
                        .unwrap_or_default(),
                }),
            (inner.clone(), inner.clone(), inner.clone()).prop_map(|(t, b, o)| Expr::IfExp {
                test: Box::new(t),
                body: Box::new(b),
                orelse: Box::new(o),
            }),
            (inner.clone(), name()).prop_map(|(v, a)| Expr::attr(v, a)),
            (inner.clone(), inner.clone()).prop_map(|(v, i)| Expr::subscript(v, i)),
            (inner.clone(), opt.clone(), opt.clone(), opt).prop_map(|(v, lower, upper, step)| {
                Expr::subscript(v, Expr::Slice { lower, upper, step })
            }),
            prop::collection::vec(inner.clone(), 0..3).prop_map(Expr::List),
            prop::collection::vec(inner.clone(), 0..3).prop_map(Expr::Tuple),
            prop::collection::vec((inner.clone(), inner.clone()), 0..3).prop_map(|kv| {
                let (keys, values) = kv.into_iter().unzip();
                Expr::Dict { keys, values }
            }),
            (inner.clone(), name(), inner.clone(), prop::option::of(inner)).prop_map(
                |(elt, t, it, cond)| Expr::ListComp {
                    elt: Box::new(elt),
                    generators: vec![Comprehension {
                        target: Expr::Name(t),
                        iter: it,
                        ifs: cond.into_iter().collect(),
                    }],
                }
            ),
        ]
    })
}

fn stmts(depth: u32) -> BoxedStrategy<Vec<Stmt>> {
    let simple = prop_oneof![
        (name(), expr()).prop_map(|(n, v)| Stmt::Assign {
            targets: vec![Expr::Name(n)],
            value: v
        }),
        (name(), name(), expr()).prop_map(|(a, b, v)| Stmt::Assign {
            targets: vec![Expr::Tuple(vec![Expr::Name(a), Expr::Name(b)])],
            value: v
        }),
        (name(), binop(), expr()).prop_map(|(n, op, v)| Stmt::AugAssign {
            target: Expr::Name(n),
            op,
            value: v
        }),
        expr().prop_map(Stmt::Expr),
        Just(Stmt::Pass),
    ];
    if depth == 0 {
        return prop::collection::vec(simple, 1..4).boxed();
    }
    let block = stmts(depth - 1);
    let compound = prop_oneof![
        simple,
        (expr(), block.clone(), prop::option::of(block.clone())).prop_map(|(t, b, o)| Stmt::If {
            test: t,
            body: b,
            orelse: o.unwrap_or_default(),
        }),
        (name(), expr(), block.clone()).prop_map(|(t, it, b)| Stmt::For {
            target: Expr::Name(t),
            iter: it,
            body: b
        }),
        (expr(), block.clone()).prop_map(|(t, b)| Stmt::While { test: t, body: b }),
        (name(), block).prop_map(|(n, mut b)| {
            b.push(Stmt::Return(Some(Expr::Name(n.clone()))));
            Stmt::FunctionDef {
                name: format!("fn_{n}"),
                params: vec![Param {
                    name: n,
                    default: None,
                }],
                body: b,
            }
        }),
    ];
    prop::collection::vec(compound, 1..4).boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn rendered_expressions_parse_back_to_the_same_tree(e in expr()) {
        let text = render::render_expr(&e);
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e, "rendered as {}", text);
    }

    #[test]
    fn rendered_modules_parse_back_to_the_same_tree(body in stmts(2)) {
        let m = PyModuleAst::new(body);
        let text = render(&m);
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}\n{err}")))?;
        prop_assert_eq!(&back, &m, "rendered as\n{}", text);
        let diff = ast_equal(&back, &m);
        prop_assert!(diff.equal);
        prop_assert_eq!(render(&back), text);
    }

    #[test]
    fn structural_equality_ignores_layout(e in expr()) {
        let text = render::render_expr(&e);
        let spaced = format!("x = (\n    {text}\n)  # trailing comment\n");
        let plain = format!("x = {text}\n");
        prop_assert!(ast_equal(&parse(&spaced).unwrap(), &parse(&plain).unwrap()).equal);
    }
}
