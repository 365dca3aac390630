def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def describe(n):
    if n >= 0:
        return 'non-negative'
    else:
        return 'negative'
# probe: describe(3)
# probe: describe(-3)
