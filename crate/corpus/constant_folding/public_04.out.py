def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def bucket(value):
    size = 14
    index = value // size
    if index > 7:
        index = 7
    return index
