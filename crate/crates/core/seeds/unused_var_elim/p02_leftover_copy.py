def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def total(values):
    s = 0
    backup = s
    for v in values:
        s += v
    return s
# probe: total([1, 2, 3])
