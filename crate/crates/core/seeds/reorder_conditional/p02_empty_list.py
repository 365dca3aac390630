def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def head_or_default(values, default):
    if not values:
        result = default
    else:
        result = values[0]
    return result
# probe: head_or_default([], 7)
# probe: head_or_default([4, 5], 7)
