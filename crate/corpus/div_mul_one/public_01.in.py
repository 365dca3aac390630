def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def scale_list(values, factor):
    out = []
    for v in values:
        out.append(v * factor * 1)
    return out
# probe: scale_list([1, 2, 3], 4)
