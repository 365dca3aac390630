def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def debug(a, b):
    pass

def mix(x, y):
    debug(x + y, [x, y])
    return x * 10 + y
# probe: mix(3, 4)
