def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def in_range(x, lo, hi):
    ok = lo <= x and x <= hi
    return ok
