def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def left_zero(values):
    total = 0
    for v in values:
        total = 0 + total + v
    return total
# probe: left_zero([1, 2, 3])
