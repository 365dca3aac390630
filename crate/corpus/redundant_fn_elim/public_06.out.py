def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def process(items):
    out = [i * 2 for i in items]
    return out
