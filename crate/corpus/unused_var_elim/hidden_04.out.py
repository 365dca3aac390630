def pick_larger(a, b):
    if a >= b:
        return a
    return b
def noop_loop(values):
    for v in values:
        pass
    return len(values)
