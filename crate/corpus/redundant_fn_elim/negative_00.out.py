def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def placeholder():
    pass
def compute(x):
    result = placeholder()
    if result is None:
        return x
    return 0
