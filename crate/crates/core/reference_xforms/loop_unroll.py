import ast
import copy


def xform(code: ast.AST) -> ast.AST:
    max_unroll = 16

    def bound(stmts):
        names = set()
        for stmt in stmts:
            for node in ast.walk(stmt):
                if isinstance(node, ast.Name) and isinstance(node.ctx, ast.Store):
                    names.add(node.id)
                elif isinstance(node, (ast.Import, ast.ImportFrom)):
                    names.update(a.asname or a.name.split(".")[0] for a in node.names)
        return names

    def unrollable(stmt):
        if not isinstance(stmt, ast.For) or stmt.orelse or not isinstance(stmt.target, ast.Name):
            return None
        call = stmt.iter
        if not (
            isinstance(call, ast.Call)
            and isinstance(call.func, ast.Name)
            and call.func.id == "range"
            and len(call.args) == 1
            and not call.keywords
        ):
            return None
        bound_arg = call.args[0]
        if not (isinstance(bound_arg, ast.Constant) and type(bound_arg.value) is int):
            return None
        if not 0 <= bound_arg.value <= max_unroll:
            return None
        for stmt_in_body in stmt.body:
            for node in ast.walk(stmt_in_body):
                if isinstance(node, (ast.Break, ast.Continue, ast.FunctionDef)):
                    return None
        if stmt.target.id in bound(stmt.body):
            return None
        return stmt.target.id, bound_arg.value

    class Substitute(ast.NodeTransformer):
        def __init__(self, name, value):
            self.name = name
            self.value = value

        def visit_Name(self, node):
            if node.id == self.name:
                return ast.Constant(value=self.value)
            return node

    def block(stmts):
        out = []
        for stmt in stmts:
            for field in ("body", "orelse"):
                if isinstance(getattr(stmt, field, None), list):
                    setattr(stmt, field, block(getattr(stmt, field)))
            found = unrollable(stmt)
            if found is None:
                out.append(stmt)
                continue
            name, count = found
            for i in range(count):
                for inner in stmt.body:
                    out.append(Substitute(name, i).visit(copy.deepcopy(inner)))
        return out

    while True:
        before = ast.dump(code)
        code.body = block(code.body)
        if ast.dump(code) == before:
            break

    for node in ast.walk(code):
        if isinstance(node, (ast.FunctionDef, ast.For, ast.While, ast.If)) and not node.body:
            node.body = [ast.Pass()]
    return ast.fix_missing_locations(code)
