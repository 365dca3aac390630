import ast


def xform(code: ast.AST) -> ast.AST:
    def is_zero(node):
        return isinstance(node, ast.Constant) and type(node.value) is int and node.value == 0

    class Simplify(ast.NodeTransformer):
        def visit_BinOp(self, node):
            self.generic_visit(node)
            if isinstance(node.op, (ast.Add, ast.Sub)) and is_zero(node.right):
                return node.left
            return node

    return ast.fix_missing_locations(Simplify().visit(code))
