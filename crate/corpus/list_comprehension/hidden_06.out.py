def pick_larger(a, b):
    if a >= b:
        return a
    return b
def with_index(values):
    pairs = [(k, values[k]) for k in range(len(values))]
    return pairs
