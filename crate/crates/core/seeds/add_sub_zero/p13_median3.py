def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def median3(a, b, c):
    lo = min(a, b, c) - 0
    hi = max(a, b, c) + 0
    return a + b + c - lo - hi
# probe: median3(3, 1, 2)
# probe: median3(5, 5, 1)
