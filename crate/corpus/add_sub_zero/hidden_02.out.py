def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def median3(a, b, c):
    lo = min(a, b, c)
    hi = max(a, b, c)
    return a + b + c - lo - hi
