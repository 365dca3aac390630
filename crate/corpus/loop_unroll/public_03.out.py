def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def brighten(pixel):
    out = [0, 0, 0]
    out[0] = min(255, pixel[0] + 10)
    out[1] = min(255, pixel[1] + 10)
    out[2] = min(255, pixel[2] + 10)
    return out
