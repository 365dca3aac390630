def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def both_positive(a, b):
    if a > 0 and b > 0:
        return True
    return False
# probe: both_positive(1, 2)
# probe: both_positive(1, -2)
