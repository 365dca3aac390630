def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def until_negative(values):
    out = []
    for v in values:
        if v < 0:
            break
        out.append(v)
    return out
