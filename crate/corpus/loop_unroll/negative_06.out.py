def pick_larger(a, b):
    if a >= b:
        return a
    return b
def doubles(values):
    out = []
    for v in values:
        out.append(v * 2)
    return out
