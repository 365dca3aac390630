def pick_larger(a, b):
    if a >= b:
        return a
    return b

def with_index(values):
    pairs = []
    for k in range(len(values)):
        pairs.append((k, values[k]))
    return pairs
# probe: with_index(['a', 'b'])
