import ast


def xform(code: ast.AST) -> ast.AST:
    limit = 2 ** 63

    def literal(node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            inner = node.operand
            if isinstance(inner, ast.Constant) and type(inner.value) is int:
                return -inner.value
        return None

    def make(value):
        if value < 0:
            return ast.UnaryOp(op=ast.USub(), operand=ast.Constant(value=-value))
        return ast.Constant(value=value)

    def fold(a, op, b):
        if isinstance(op, ast.Add):
            return a + b
        if isinstance(op, ast.Sub):
            return a - b
        if isinstance(op, ast.Mult):
            return a * b
        if isinstance(op, ast.FloorDiv):
            return a // b if b != 0 else None
        if isinstance(op, ast.Mod):
            return a % b if b != 0 else None
        if isinstance(op, ast.Pow):
            if b < 0 or b >= 2 ** 32 or (abs(a) > 1 and b > 64):
                return None
            return a ** b
        return None

    def in_range(value):
        return value is not None and -limit < value < limit

    class Fold(ast.NodeTransformer):
        def visit_BinOp(self, node):
            self.generic_visit(node)
            a, b = literal(node.left), literal(node.right)
            if a is not None and b is not None:
                value = fold(a, node.op, b)
                if in_range(value):
                    return make(value)
            return node

        def visit_UnaryOp(self, node):
            self.generic_visit(node)
            inner = node.operand
            value = None
            if isinstance(node.op, ast.USub) and isinstance(inner, ast.UnaryOp):
                value = literal(inner)
                value = None if value is None else -value
            elif isinstance(node.op, ast.UAdd):
                value = literal(inner)
            elif isinstance(node.op, ast.Invert):
                value = literal(inner)
                value = None if value is None else ~value
            if in_range(value):
                return make(value)
            return node

    return ast.fix_missing_locations(Fold().visit(code))
