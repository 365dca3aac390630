def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def process(values):
    count = len(values)
    return sum(values)
