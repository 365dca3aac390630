import ast


def xform(code: ast.AST) -> ast.AST:
    pure_nodes = (
        ast.Constant, ast.Name, ast.BinOp, ast.UnaryOp, ast.BoolOp, ast.Compare, ast.IfExp,
        ast.List, ast.Tuple, ast.Dict, ast.operator, ast.unaryop, ast.boolop, ast.cmpop,
        ast.expr_context,
    )

    def is_pure(node):
        return all(isinstance(n, pure_nodes) for n in ast.walk(node))

    def is_empty(fn):
        for stmt in fn.body:
            if isinstance(stmt, ast.Pass):
                continue
            if (
                isinstance(stmt, ast.Expr)
                and isinstance(stmt.value, ast.Constant)
                and (type(stmt.value.value) is str or stmt.value.value is Ellipsis)
            ):
                continue
            return False
        return True

    def is_call_stmt(stmt, name):
        return (
            isinstance(stmt, ast.Expr)
            and isinstance(stmt.value, ast.Call)
            and isinstance(stmt.value.func, ast.Name)
            and stmt.value.func.id == name
            and all(is_pure(a) for a in stmt.value.args)
            and all(is_pure(k.value) for k in stmt.value.keywords)
        )

    def target_names(target):
        if isinstance(target, ast.Name):
            return {target.id}
        if isinstance(target, (ast.Tuple, ast.List)):
            return set().union(*[target_names(e) for e in target.elts])
        return set()

    def binding_count(name):
        count = 0
        for node in ast.walk(code):
            if isinstance(node, ast.FunctionDef):
                count += node.name == name
                count += any(a.arg == name for a in node.args.args)
            elif isinstance(node, ast.Assign):
                count += name in set().union(*[target_names(t) for t in node.targets])
            elif isinstance(node, (ast.AugAssign, ast.For)):
                count += name in target_names(node.target)
            elif isinstance(node, (ast.Import, ast.ImportFrom)):
                count += any((a.asname or a.name.split(".")[0]) == name for a in node.names)
            elif isinstance(node, ast.ListComp):
                count += name in set().union(*[target_names(g.target) for g in node.generators])
        return count

    def removable(fn):
        if not isinstance(fn, ast.FunctionDef) or not is_empty(fn):
            return False
        if binding_count(fn.name) != 1:
            return False
        uses = sum(isinstance(n, ast.Name) and n.id == fn.name for n in ast.walk(code))
        calls = sum(is_call_stmt(n, fn.name) for n in ast.walk(code))
        return uses == calls

    def drop_calls(stmts, name):
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, drop_calls(getattr(stmt, field), name))
            if not is_call_stmt(stmt, name):
                out.append(stmt)
        return out

    while True:
        victim = next((s for s in code.body if removable(s)), None)
        if victim is None:
            break
        name = victim.name
        code.body = [s for s in code.body if not (isinstance(s, ast.FunctionDef) and s.name == name)]
        code.body = drop_calls(code.body, name)

    for node in ast.walk(code):
        if isinstance(node, (ast.FunctionDef, ast.For, ast.While, ast.If)) and not node.body:
            node.body = [ast.Pass()]
    return ast.fix_missing_locations(code)
