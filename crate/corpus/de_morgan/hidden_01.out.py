def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def check(a, b, c, d):
    first = not a > b or not c > d
    second = not a == c or not b == d
    return first, second
