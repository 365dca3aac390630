import ast


def xform(code: ast.AST) -> ast.AST:
    def name_of(node):
        return node.id if isinstance(node, ast.Name) else None

    def single_arg_call(node, fname):
        if (
            isinstance(node, ast.Call)
            and name_of(node.func) == fname
            and len(node.args) == 1
            and not node.keywords
        ):
            return node.args[0]
        return None

    def name_index(node):
        if isinstance(node, ast.Subscript) and name_of(node.value) and name_of(node.slice):
            return node.value.id, node.slice.id
        return None

    def is_zero_list(node):
        return (
            isinstance(node, ast.List)
            and len(node.elts) == 1
            and isinstance(node.elts[0], ast.Constant)
            and type(node.elts[0].value) is int
            and node.elts[0].value == 0
        )

    def appended(stmt, acc):
        if (
            isinstance(stmt, ast.Expr)
            and isinstance(stmt.value, ast.Call)
            and isinstance(stmt.value.func, ast.Attribute)
            and stmt.value.func.attr == "append"
            and name_of(stmt.value.func.value) == acc
            and len(stmt.value.args) == 1
            and not stmt.value.keywords
        ):
            return stmt.value.args[0]
        return None

    def fuse(init, loop):
        if not (isinstance(init, ast.Assign) and len(init.targets) == 1 and name_of(init.targets[0])):
            return None
        c = init.targets[0].id
        if not isinstance(loop, ast.For) or loop.orelse or not name_of(loop.target):
            return None
        i = loop.target.id
        len_arg = single_arg_call(loop.iter, "range")
        a = name_of(single_arg_call(len_arg, "len")) if len_arg is not None else None
        if a is None or len(loop.body) != 1:
            return None
        only = loop.body[0]
        value = init.value
        if (
            isinstance(value, ast.BinOp)
            and isinstance(value.op, ast.Mult)
            and is_zero_list(value.left)
            and name_of(single_arg_call(value.right, "len")) == a
        ):
            if not (isinstance(only, ast.Assign) and len(only.targets) == 1):
                return None
            if name_index(only.targets[0]) != (c, i):
                return None
            total = only.value
        elif isinstance(value, ast.List) and not value.elts:
            total = appended(only, c)
            if total is None:
                return None
        else:
            return None
        if not (isinstance(total, ast.BinOp) and isinstance(total.op, ast.Add)):
            return None
        left, right = name_index(total.left), name_index(total.right)
        if left is None or right is None or left[1] != i or right[1] != i:
            return None
        x, y = left[0], right[0]
        if x != a or len({c, i, a}) != 3 or len({c, i, y}) != 3:
            return None
        call = ast.Call(
            func=ast.Attribute(value=ast.Name(id="torch", ctx=ast.Load()), attr="add", ctx=ast.Load()),
            args=[ast.Name(id=x, ctx=ast.Load()), ast.Name(id=y, ctx=ast.Load())],
            keywords=[],
        )
        return ast.Assign(targets=[ast.Name(id=c, ctx=ast.Store())], value=call)

    changed = False

    def block(stmts):
        nonlocal changed
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, block(getattr(stmt, field)))
            merged = fuse(out[-1], stmt) if out else None
            if merged is not None:
                out[-1] = merged
                changed = True
            else:
                out.append(stmt)
        return out

    code.body = block(code.body)
    if changed:
        has_import = any(
            isinstance(s, ast.Import) and any(a.name == "torch" and a.asname is None for a in s.names)
            for s in code.body
        )
        if not has_import:
            first = code.body[0] if code.body else None
            docstring = (
                isinstance(first, ast.Expr)
                and isinstance(first.value, ast.Constant)
                and type(first.value.value) is str
            )
            code.body.insert(1 if docstring else 0, ast.Import(names=[ast.alias(name="torch")]))
    return ast.fix_missing_locations(code)
