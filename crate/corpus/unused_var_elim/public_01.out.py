def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def total(values):
    s = 0
    for v in values:
        s += v
    return s
