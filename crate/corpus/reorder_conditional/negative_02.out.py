def pick_larger(a, b):
    if a >= b:
        return a
    return b
def head(values, default):
    return default if not values else values[0]
