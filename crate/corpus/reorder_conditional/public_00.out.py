def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def describe(n):
    if n >= 0:
        return 'non-negative'
    else:
        return 'negative'
