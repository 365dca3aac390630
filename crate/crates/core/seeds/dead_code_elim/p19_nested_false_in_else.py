def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def pick(a, b):
    if a > b:
        return a
    else:
        if 0 >= 1:
            return 0
        return b
# probe: pick(3, 2)
# probe: pick(1, 2)
