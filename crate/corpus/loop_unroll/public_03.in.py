def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def brighten(pixel):
    out = [0, 0, 0]
    for c in range(3):
        out[c] = min(255, pixel[c] + 10)
    return out
# probe: brighten([250, 100, 0])
