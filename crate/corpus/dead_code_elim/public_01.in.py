def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def scale(x):
    y = x * 3
    if 0:
        y = -1
    return y
# probe: scale(4)
