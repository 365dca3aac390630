def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def describe(n):
    if not n >= 0:
        return 'negative'
    else:
        return 'non-negative'
# probe: describe(-3)
# probe: describe(0)
