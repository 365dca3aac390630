def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def pick(a, b):
    if a > b:
        return a
    else:
        return b
