def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def stars():
    line = ''
    for k in range(5):
        line = line + str(k)
    return line
# probe: stars()
