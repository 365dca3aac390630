def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def apply_all(x):
    for d in [1, 2, 3]:
        x = x + d
    return x
# probe: apply_all(0)
