def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def labels(pairs):
    result = []
    for name, score in pairs:
        result.append(name + ':' + str(score))
    return result
# probe: labels([('a', 1), ('b', 2)])
