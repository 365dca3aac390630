def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def as_float_sum(values):
    total = 0.0
    for v in values:
        total = total + v + 0.0
    return total
