def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def sign(x):
    if x - 1 > 0:
        return 1
    if x == 0:
        return 0
    return -1
