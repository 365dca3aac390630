def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def scale(x):
    a = x + 1
    b = a * 2
    return x * 3
# probe: scale(5)
