def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def labels(pairs):
    result = [name + ':' + str(score) for name, score in pairs]
    return result
