import ast


def xform(code: ast.AST) -> ast.AST:
    def conjuncts(test):
        if isinstance(test, ast.BoolOp) and isinstance(test.op, ast.And):
            return list(test.values)
        return [test]

    class Collapse(ast.NodeTransformer):
        def visit_If(self, node):
            self.generic_visit(node)
            if (
                not node.orelse
                and len(node.body) == 1
                and isinstance(node.body[0], ast.If)
                and not node.body[0].orelse
            ):
                inner = node.body[0]
                node.test = ast.BoolOp(op=ast.And(), values=conjuncts(node.test) + conjuncts(inner.test))
                node.body = inner.body
            return node

    return ast.fix_missing_locations(Collapse().visit(code))
