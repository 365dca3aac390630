def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
DEBUG = False
def total(values):
    if DEBUG:
        print(values)
    return sum(values)
