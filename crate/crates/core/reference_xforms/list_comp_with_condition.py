import ast


def xform(code: ast.AST) -> ast.AST:
    def reads(node, name):
        return any(isinstance(n, ast.Name) and n.id == name for n in ast.walk(node))

    def appended(stmt, acc):
        if (
            isinstance(stmt, ast.Expr)
            and isinstance(stmt.value, ast.Call)
            and isinstance(stmt.value.func, ast.Attribute)
            and stmt.value.func.attr == "append"
            and isinstance(stmt.value.func.value, ast.Name)
            and stmt.value.func.value.id == acc
            and len(stmt.value.args) == 1
            and not stmt.value.keywords
        ):
            return stmt.value.args[0]
        return None

    def fuse(init, loop):
        if not (
            isinstance(init, ast.Assign)
            and len(init.targets) == 1
            and isinstance(init.targets[0], ast.Name)
            and isinstance(init.value, ast.List)
            and not init.value.elts
        ):
            return None
        acc = init.targets[0].id
        if not isinstance(loop, ast.For) or loop.orelse or len(loop.body) != 1:
            return None
        guard = loop.body[0]
        if not isinstance(guard, ast.If) or guard.orelse or len(guard.body) != 1:
            return None
        elt = appended(guard.body[0], acc)
        if elt is None:
            return None
        if reads(loop.iter, acc) or reads(elt, acc) or reads(guard.test, acc) or reads(loop.target, acc):
            return None
        comp = ast.comprehension(target=loop.target, iter=loop.iter, ifs=[guard.test], is_async=0)
        return ast.Assign(
            targets=[ast.Name(id=acc, ctx=ast.Store())],
            value=ast.ListComp(elt=elt, generators=[comp]),
        )

    def block(stmts):
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, block(getattr(stmt, field)))
            merged = fuse(out[-1], stmt) if out else None
            if merged is not None:
                out[-1] = merged
            else:
                out.append(stmt)
        return out

    code.body = block(code.body)
    return ast.fix_missing_locations(code)
