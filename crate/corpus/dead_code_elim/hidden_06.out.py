def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def shift(values):
    return [v + 1 for v in values]
