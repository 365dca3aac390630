def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def first_n_sum(values, n):
    s = 0
    for k in range(n):
        s += values[k]
    return s
