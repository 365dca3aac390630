def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def head_or_default(values, default):
    if values:
        result = values[0]
    else:
        result = default
    return result
