def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def noop():
    pass

def main(values):
    noop()
    return max(values)
# probe: main([3, 9, 2])
