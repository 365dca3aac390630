def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def check(a, b, c, d):
    first = not (a > b and c > d)
    second = not (a == c and b == d)
    return first, second
# probe: check(3, 1, 4, 2)
# probe: check(1, 2, 1, 2)
