def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def running_mean(values):
    out = []
    total = 0
    for i, v in enumerate(values):
        total += v
        out.append(total / (i + 1))
    return out
