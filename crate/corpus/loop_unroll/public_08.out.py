def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def stars():
    line = ''
    line = line + str(0)
    line = line + str(1)
    line = line + str(2)
    line = line + str(3)
    line = line + str(4)
    return line
