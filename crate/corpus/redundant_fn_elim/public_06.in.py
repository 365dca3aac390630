def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def emit(event, level=0):
    pass

def process(items):
    emit('start', level=1)
    out = [i * 2 for i in items]
    emit('end', level=1)
    return out
# probe: process([1, 2])
