def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def scale(values, k):
    factor = k * 2
    return [v * factor for v in values]
