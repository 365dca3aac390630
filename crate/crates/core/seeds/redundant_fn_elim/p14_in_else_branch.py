def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def warn(msg):
    pass

def safe_div(a, b):
    if b != 0:
        return a // b
    else:
        warn('division by zero')
    return 0
# probe: safe_div(7, 2)
# probe: safe_div(7, 0)
