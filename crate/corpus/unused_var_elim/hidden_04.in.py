def pick_larger(a, b):
    if a >= b:
        return a
    return b

def noop_loop(values):
    for v in values:
        marker = v
    return len(values)
# probe: noop_loop([1, 2, 3])
