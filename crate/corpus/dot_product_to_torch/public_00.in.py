def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def dot(a, b):
    s = 0
    for i in range(len(a)):
        s += a[i] * b[i]
    return s
