def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def bucket(value):
    size = 100 // 7
    index = value // size
    if index > 10 - 3:
        index = 7
    return index
# probe: bucket(5)
# probe: bucket(60)
# probe: bucket(1000)
