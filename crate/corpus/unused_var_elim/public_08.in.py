def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def in_range(x, lo, hi):
    ok = lo <= x and x <= hi
    inside = lo < x < hi
    return ok
# probe: in_range(5, 0, 10)
# probe: in_range(10, 0, 10)
