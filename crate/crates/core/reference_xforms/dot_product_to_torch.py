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

    def is_zero(node):
        if not isinstance(node, ast.Constant):
            return False
        return (type(node.value) is int and node.value == 0) or (type(node.value) is float and node.value == 0.0)

    def fuse(init, loop):
        if not (isinstance(init, ast.Assign) and len(init.targets) == 1 and name_of(init.targets[0])):
            return None
        s = init.targets[0].id
        if not is_zero(init.value):
            return None
        if not isinstance(loop, ast.For) or loop.orelse or not name_of(loop.target):
            return None
        i = loop.target.id
        len_arg = single_arg_call(loop.iter, "range")
        a = name_of(single_arg_call(len_arg, "len")) if len_arg is not None else None
        if a is None or len(loop.body) != 1:
            return None
        step = loop.body[0]
        if not (isinstance(step, ast.AugAssign) and isinstance(step.op, ast.Add) and name_of(step.target) == s):
            return None
        product = step.value
        if not (isinstance(product, ast.BinOp) and isinstance(product.op, ast.Mult)):
            return None
        left, right = name_index(product.left), name_index(product.right)
        if left is None or right is None or left[1] != i or right[1] != i:
            return None
        x, y = left[0], right[0]
        if x != a or len({s, i, a}) != 3 or len({s, i, y}) != 3:
            return None
        call = ast.Call(
            func=ast.Attribute(value=ast.Name(id="torch", ctx=ast.Load()), attr="dot", ctx=ast.Load()),
            args=[ast.Name(id=x, ctx=ast.Load()), ast.Name(id=y, ctx=ast.Load())],
            keywords=[],
        )
        return ast.Assign(targets=[ast.Name(id=s, ctx=ast.Store())], value=call)

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
