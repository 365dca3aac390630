def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def whole_parts(values):
    out = []
    for v in values:
        out.append(v // 1)
    return out
# probe: whole_parts([2.5, 3.0])
