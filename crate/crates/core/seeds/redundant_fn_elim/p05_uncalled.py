def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def unused_helper(x):
    pass

def square(x):
    return x * x
# probe: square(5)
