def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def scale_list(values, factor):
    out = []
    for v in values:
        out.append(v * factor)
    return out
