import ast


def xform(code: ast.AST) -> ast.AST:
    class Reorder(ast.NodeTransformer):
        def visit_If(self, node):
            self.generic_visit(node)
            while node.orelse and isinstance(node.test, ast.UnaryOp) and isinstance(node.test.op, ast.Not):
                node.test = node.test.operand
                node.body, node.orelse = node.orelse, node.body
            return node

    return ast.fix_missing_locations(Reorder().visit(code))
