import ast


def xform(code: ast.AST) -> ast.AST:
    pure_nodes = (
        ast.Constant, ast.Name, ast.BinOp, ast.UnaryOp, ast.BoolOp, ast.Compare, ast.IfExp,
        ast.List, ast.Tuple, ast.Dict, ast.operator, ast.unaryop, ast.boolop, ast.cmpop,
        ast.expr_context,
    )

    def is_pure(node):
        return all(isinstance(n, pure_nodes) for n in ast.walk(node))

    def reads(stmts):
        names = set()
        for stmt in stmts:
            for node in ast.walk(stmt):
                if isinstance(node, ast.Name) and isinstance(node.ctx, ast.Load):
                    names.add(node.id)
                elif isinstance(node, ast.AugAssign) and isinstance(node.target, ast.Name):
                    names.add(node.target.id)
        return names

    def scope(stmts, live):
        out = []
        for stmt in stmts:
            if (
                isinstance(stmt, ast.Assign)
                and len(stmt.targets) == 1
                and isinstance(stmt.targets[0], ast.Name)
                and stmt.targets[0].id not in live
                and is_pure(stmt.value)
            ):
                continue
            if isinstance(stmt, ast.FunctionDef):
                stmt.body = scope(stmt.body, reads(stmt.body))
            else:
                for field in ("body", "orelse"):
                    if isinstance(getattr(stmt, field, None), list):
                        setattr(stmt, field, scope(getattr(stmt, field), live))
            out.append(stmt)
        return out

    while True:
        before = ast.dump(code)
        code.body = scope(code.body, reads(code.body))
        if ast.dump(code) == before:
            break

    for node in ast.walk(code):
        if isinstance(node, (ast.FunctionDef, ast.For, ast.While, ast.If)) and not node.body:
            node.body = [ast.Pass()]
    return ast.fix_missing_locations(code)
