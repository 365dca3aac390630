def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def scale(x):
    y = x * 3
    return y
