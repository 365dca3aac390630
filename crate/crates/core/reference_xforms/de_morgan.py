import ast


def xform(code: ast.AST) -> ast.AST:
    def is_not_and(node):
        return (
            isinstance(node, ast.UnaryOp)
            and isinstance(node.op, ast.Not)
            and isinstance(node.operand, ast.BoolOp)
            and isinstance(node.operand.op, ast.And)
        )

    def push(node):
        if not is_not_and(node):
            return node
        values = []
        for value in node.operand.values:
            negated = push(ast.UnaryOp(op=ast.Not(), operand=value))
            if isinstance(negated, ast.BoolOp) and isinstance(negated.op, ast.Or):
                values.extend(negated.values)
            else:
                values.append(negated)
        return ast.BoolOp(op=ast.Or(), values=values)

    class DeMorgan(ast.NodeTransformer):
        def visit_UnaryOp(self, node):
            self.generic_visit(node)
            return push(node)

    return ast.fix_missing_locations(DeMorgan().visit(code))
