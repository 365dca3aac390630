import ast
import copy


def xform(code: ast.AST) -> ast.AST:
    def block(stmts):
        out = []
        i = 0
        while i < len(stmts):
            stmt = stmts[i]
            if isinstance(stmt, (ast.For, ast.While)):
                run = 1
                while i + run < len(stmts) and ast.dump(stmts[i + run]) == ast.dump(stmt):
                    run += 1
                copies = 2 if run == 1 else run
                out.extend(copy.deepcopy(stmt) for _ in range(copies))
                i += run
                continue
            if isinstance(stmt, (ast.FunctionDef, ast.If)):
                stmt.body = block(stmt.body)
                if isinstance(stmt, ast.If):
                    stmt.orelse = block(stmt.orelse)
            out.append(stmt)
            i += 1
        return out

    code.body = block(code.body)
    return ast.fix_missing_locations(code)
