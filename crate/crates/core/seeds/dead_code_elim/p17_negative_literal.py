def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def shift(values):
    if -1 > 0:
        values = []
    return [v + 1 for v in values]
# probe: shift([1, 2])
