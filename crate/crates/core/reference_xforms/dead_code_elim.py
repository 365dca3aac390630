import ast


def xform(code: ast.AST) -> ast.AST:
    def int_literal(node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            inner = node.operand
            if isinstance(inner, ast.Constant) and type(inner.value) is int:
                return -inner.value
        return None

    comparisons = {
        ast.Eq: lambda a, b: a == b,
        ast.NotEq: lambda a, b: a != b,
        ast.Lt: lambda a, b: a < b,
        ast.LtE: lambda a, b: a <= b,
        ast.Gt: lambda a, b: a > b,
        ast.GtE: lambda a, b: a >= b,
    }

    def truth(node):
        value = int_literal(node)
        if value is not None:
            return value != 0
        if isinstance(node, ast.Constant):
            return bool(node.value)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            inner = truth(node.operand)
            return None if inner is None else not inner
        if isinstance(node, ast.BoolOp):
            decisive = isinstance(node.op, ast.Or)
            for value in node.values:
                t = truth(value)
                if t is None:
                    return None
                if t == decisive:
                    return decisive
            return not decisive
        if isinstance(node, ast.Compare):
            left = int_literal(node.left)
            if left is None:
                return None
            for op, comparator in zip(node.ops, node.comparators):
                right = int_literal(comparator)
                check = comparisons.get(type(op))
                if right is None or check is None:
                    return None
                if not check(left, right):
                    return False
                left = right
            return True
        return None

    def block(stmts):
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, block(getattr(stmt, field)))
            if isinstance(stmt, ast.If) and truth(stmt.test) is False:
                out.extend(stmt.orelse)
            else:
                out.append(stmt)
        return out

    code.body = block(code.body)
    for node in ast.walk(code):
        if isinstance(node, (ast.FunctionDef, ast.For, ast.While, ast.If)) and not node.body:
            node.body = [ast.Pass()]
    return ast.fix_missing_locations(code)
