import ast


def xform(code: ast.AST) -> ast.AST:
    def receiver(stmt):
        if (
            isinstance(stmt, ast.Expr)
            and isinstance(stmt.value, ast.Call)
            and isinstance(stmt.value.func, ast.Attribute)
            and stmt.value.func.attr == "zero_grad"
            and not stmt.value.args
            and not stmt.value.keywords
        ):
            return stmt.value.func.value
        return None

    def reset_loop(model):
        params = ast.Call(
            func=ast.Attribute(value=model, attr="parameters", ctx=ast.Load()), args=[], keywords=[]
        )
        clear = ast.Assign(
            targets=[ast.Attribute(value=ast.Name(id="p", ctx=ast.Load()), attr="grad", ctx=ast.Store())],
            value=ast.Constant(value=None),
        )
        return ast.For(target=ast.Name(id="p", ctx=ast.Store()), iter=params, body=[clear], orelse=[])

    def block(stmts):
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, block(getattr(stmt, field)))
            model = receiver(stmt)
            out.append(stmt if model is None else reset_loop(model))
        return out

    code.body = block(code.body)
    return ast.fix_missing_locations(code)
